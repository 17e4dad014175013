#pragma once

#include <array>

namespace cwdenoise::calibration {

// Monte-Carlo noise gains of the standard filter bank, measured once on
// pure-noise images and locked by a regression test. Unit-std white pixel
// noise produces approximately these per-component stds in the finest-level
// bands (band order as in PyramidLevel) and in the lowpass residue planes.
inline constexpr std::array<double, 6> kBandNoiseGain = {
    0.99728, 0.99770, 0.99865, 0.99915, 0.99414, 0.99475};

// Residue plane noise std for a decomposition of depth L = 1..5.
inline constexpr std::array<double, 5> kResidueNoiseGain = {
    1.00123, 1.01279, 1.02385, 1.04015, 1.07202};

// Gain of the diagonal-band family, used to convert the median-based subband
// noise estimate back to pixel units.
inline constexpr double kDiagonalNoiseGain = 0.994445;

}  // namespace cwdenoise::calibration
