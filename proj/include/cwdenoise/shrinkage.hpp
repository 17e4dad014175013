#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cwdenoise/calibration.hpp"
#include "cwdenoise/dtcwt.hpp"

namespace cwdenoise {

enum class ThresholdKind { universal, bayes };
enum class ThresholdMode { soft, hard };

struct ThresholdRule {
    ThresholdKind kind = ThresholdKind::bayes;
    ThresholdMode mode = ThresholdMode::soft;
    bool per_component = false;  // threshold Re/Im separately instead of the magnitude
};

namespace shrink_detail {

inline double median(std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double hi = v[mid];
    if (v.size() % 2 == 0) {
        double lo = *std::max_element(v.begin(), v.begin() + mid);
        return 0.5 * (lo + hi);
    }
    return hi;
}

}  // namespace shrink_detail

// Robust per-component noise estimate from the finest-level diagonal bands:
// median of the pooled |Re|,|Im| samples divided by 0.6745.
inline double estimate_noise_sigma(const Pyramid& pyr) {
    if (pyr.level_count() < 1)
        throw std::invalid_argument("estimate_noise_sigma: pyramid has no levels");
    std::vector<double> samples;
    for (int b : Pyramid::diagonal_bands()) {
        const auto& g = pyr.levels[0].bands[b];
        samples.reserve(samples.size() + 2 * g.count());
        for (double v : g.re) samples.push_back(std::abs(v));
        for (double v : g.im) samples.push_back(std::abs(v));
    }
    return shrink_detail::median(samples) / 0.6745;
}

// Shrink the magnitude by T, keep the phase.
inline std::complex<double> soft_threshold_complex(std::complex<double> c, double T) {
    if (T < 0.0) throw std::invalid_argument("soft_threshold_complex: T must be >= 0");
    if (T == 0.0) return c;
    const double mag = std::abs(c);
    if (mag <= T) return {0.0, 0.0};
    const double scale = (mag - T) / mag;
    return {c.real() * scale, c.imag() * scale};
}

inline std::complex<double> hard_threshold_complex(std::complex<double> c, double T) {
    if (T < 0.0) throw std::invalid_argument("hard_threshold_complex: T must be >= 0");
    const double mag = std::abs(c);
    return mag <= T ? std::complex<double>{0.0, 0.0} : c;
}

// Threshold value for one subband given the per-component noise std in that
// subband. Universal: sigma*sqrt(2 ln N). Bayes: sigma^2 / sigma_x with the
// signal std from the variance decomposition; degenerates to max|c| (kill
// everything) when the subband is noise-dominated.
inline double subband_threshold(const ComplexGrid& band, double sigma_n, const ThresholdRule& rule) {
    if (sigma_n < 0.0) throw std::invalid_argument("subband_threshold: sigma_n must be >= 0");
    const std::size_t n = band.count();
    if (n == 0) return 0.0;
    if (rule.kind == ThresholdKind::universal)
        return sigma_n * std::sqrt(2.0 * std::log(static_cast<double>(n)));

    if (sigma_n == 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += band.re[i] * band.re[i] + band.im[i] * band.im[i];
    const double sigma_y2 = acc / (2.0 * static_cast<double>(n));
    const double sigma_x2 = sigma_y2 - sigma_n * sigma_n;
    if (sigma_x2 <= 0.0) {
        double mx = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            mx = std::max(mx, std::hypot(band.re[i], band.im[i]));
        return mx;
    }
    return sigma_n * sigma_n / std::sqrt(sigma_x2);
}

namespace shrink_detail {

inline void apply_threshold(ComplexGrid& band, double T, const ThresholdRule& rule) {
    const std::size_t n = band.count();
    if (rule.per_component) {
        auto scalar = [&](double v) -> double {
            if (rule.mode == ThresholdMode::hard) return std::abs(v) <= T ? 0.0 : v;
            const double m = std::abs(v);
            return m <= T ? 0.0 : (v > 0 ? m - T : T - m);
        };
        for (std::size_t i = 0; i < n; ++i) {
            band.re[i] = scalar(band.re[i]);
            band.im[i] = scalar(band.im[i]);
        }
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> c{band.re[i], band.im[i]};
        const std::complex<double> out = rule.mode == ThresholdMode::soft
                                             ? soft_threshold_complex(c, T)
                                             : hard_threshold_complex(c, T);
        band.re[i] = out.real();
        band.im[i] = out.imag();
    }
}

// Per-subband noise std in band units via the median estimator.
inline double band_sigma_estimate(const ComplexGrid& band) {
    std::vector<double> samples;
    samples.reserve(2 * band.count());
    for (double v : band.re) samples.push_back(std::abs(v));
    for (double v : band.im) samples.push_back(std::abs(v));
    return median(samples) / 0.6745;
}

}  // namespace shrink_detail

// Thresholds every detail subband at every level; the lowpass residue passes
// through untouched. With a known pixel-domain sigma_n the per-band noise std
// is sigma_n times the calibrated band gain; without one each subband is
// estimated blind with the median estimator.
inline Pyramid denoise_details(const Pyramid& pyr, std::optional<double> sigma_n,
                               const ThresholdRule& rule) {
    if (sigma_n && *sigma_n < 0.0)
        throw std::invalid_argument("denoise_details: sigma_n must be >= 0");
    Pyramid out = pyr;
    for (auto& level : out.levels) {
        for (int b = 0; b < 6; ++b) {
            auto& band = level.bands[b];
            const double band_sigma = sigma_n
                                          ? *sigma_n * calibration::kBandNoiseGain[b]
                                          : shrink_detail::band_sigma_estimate(band);
            const double T = subband_threshold(band, band_sigma, rule);
            shrink_detail::apply_threshold(band, T, rule);
        }
    }
    return out;
}

}  // namespace cwdenoise
