#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "cwdenoise/bilateral.hpp"
#include "cwdenoise/calibration.hpp"
#include "cwdenoise/dtcwt.hpp"
#include "cwdenoise/shrinkage.hpp"

namespace cwdenoise {

struct DenoiseParams {
    int levels = 2;                        // decomposition depth, 1..5
    double sigma_s = 1.8;                  // bilateral spatial std
    std::optional<double> sigma_r;         // explicit range std; empty = multiplier policy
    double sigma_r_mult = 2.0;             // k: sigma_r = k * residue noise std
    int radius = 0;                        // bilateral window half-width; 0 = ceil(2 sigma_s)
    ThresholdRule rule{};                  // default {bayes, soft}
    std::optional<double> known_sigma_n;   // pixel noise std when known (simulation mode)
    bool bilateral_all_scales = false;     // also filter intermediate lowpass planes

    void validate() const {
        if (levels < 1 || levels > 5)
            throw std::invalid_argument("denoise: levels must be in [1, 5]");
        if (sigma_s <= 0.0) throw std::invalid_argument("denoise: sigma_s must be > 0");
        if (sigma_r && *sigma_r <= 0.0)
            throw std::invalid_argument("denoise: explicit sigma_r must be > 0");
        if (sigma_r_mult <= 0.0)
            throw std::invalid_argument("denoise: sigma_r multiplier must be > 0");
        if (radius < 0) throw std::invalid_argument("denoise: radius must be >= 1");
        if (known_sigma_n && *known_sigma_n < 0.0)
            throw std::invalid_argument("denoise: known sigma_n must be >= 0");
    }
};

// Everything the pipeline decided after looking at the input; printed by the
// CLI for reproducibility.
struct ResolvedSettings {
    int levels = 0;
    double sigma_s = 0.0;
    double sigma_r = 0.0;
    int radius = 0;
    double sigma_n_pixel = 0.0;  // known or estimated pixel noise std
    bool blind = false;
    ThresholdRule rule{};
};

namespace pipe_detail {

// Keeps sigma_r usable on (near-)clean inputs where the estimated noise is 0.
inline constexpr double kMinSigmaR = 1e-6;

inline double pixel_sigma(const Pyramid& pyr, const DenoiseParams& p) {
    if (p.known_sigma_n) return *p.known_sigma_n;
    return estimate_noise_sigma(pyr) / calibration::kDiagonalNoiseGain;
}

}  // namespace pipe_detail

// Range std for the lowpass bilateral pass: the explicit value when given,
// otherwise sigma_r_mult times the noise std expected in the residue planes.
inline double resolve_sigma_r(const Pyramid& pyr, const DenoiseParams& p) {
    p.validate();
    if (p.sigma_r) return *p.sigma_r;
    const int L = pyr.level_count();
    if (L < 1 || L > static_cast<int>(calibration::kResidueNoiseGain.size()))
        throw std::invalid_argument("resolve_sigma_r: unsupported level count");
    const double sigma_px = pipe_detail::pixel_sigma(pyr, p);
    const double residue_sigma = sigma_px * calibration::kResidueNoiseGain[L - 1];
    return std::max(p.sigma_r_mult * residue_sigma, pipe_detail::kMinSigmaR);
}

// The four-step denoiser: dual-tree decomposition, bilateral filtering of the
// lowpass planes, thresholding of the detail subbands, inverse transform.
inline Image denoise(const Image& img, const DenoiseParams& p,
                     ResolvedSettings* resolved_out = nullptr) {
    p.validate();
    const FilterBank& bank = FilterBank::standard();

    Pyramid pyr = forward(img, p.levels, bank);

    const double sigma_px = pipe_detail::pixel_sigma(pyr, p);
    const double sigma_r = p.sigma_r ? *p.sigma_r
                                     : std::max(p.sigma_r_mult * sigma_px *
                                                    calibration::kResidueNoiseGain[p.levels - 1],
                                                pipe_detail::kMinSigmaR);
    BilateralParams bp;
    bp.sigma_s = p.sigma_s;
    bp.sigma_r = sigma_r;
    bp.radius = p.radius;

    if (resolved_out) {
        resolved_out->levels = p.levels;
        resolved_out->sigma_s = bp.sigma_s;
        resolved_out->sigma_r = bp.sigma_r;
        resolved_out->radius = bp.effective_radius();
        resolved_out->sigma_n_pixel = sigma_px;
        resolved_out->blind = !p.known_sigma_n.has_value();
        resolved_out->rule = p.rule;
    }

    // step 2: bilateral on each lowpass residue plane independently
    for (auto& plane : pyr.residue) {
        std::vector<double> filtered(plane.v.size());
        bilateral_buffer(plane.v.data(), plane.width, plane.height, bp, filtered.data());
        plane.v = std::move(filtered);
    }

    // step 3: threshold every detail subband
    std::optional<double> known;
    if (p.known_sigma_n) known = sigma_px;
    Pyramid den = denoise_details(pyr, known, p.rule);

    // step 4: inverse; optionally bilateral the intermediate lowpass planes on
    // the way up (multiresolution variant)
    if (!p.bilateral_all_scales) return inverse(den, bank);

    return inverse_with_lowpass_hook(den, bank, [&](RealGrid& state, int level) {
        BilateralParams lp = bp;
        if (!p.sigma_r)
            lp.sigma_r = std::max(p.sigma_r_mult * sigma_px *
                                      calibration::kResidueNoiseGain[level - 1],
                                  pipe_detail::kMinSigmaR);
        auto planes = dt_detail::split4(state);
        for (auto& plane : planes) {
            std::vector<double> filtered(plane.v.size());
            bilateral_buffer(plane.v.data(), plane.width, plane.height, lp, filtered.data());
            plane.v = std::move(filtered);
        }
        state = dt_detail::interleave4(planes);
    });
}

}  // namespace cwdenoise
