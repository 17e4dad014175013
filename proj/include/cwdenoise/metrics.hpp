#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cwdenoise/image.hpp"

namespace cwdenoise {

inline double mse(const Image& a, const Image& b) {
    if (!a.same_size(b)) throw std::invalid_argument("mse: image dimensions differ");
    double acc = 0.0;
    const std::size_t n = a.pixel_count();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a.pixels[i] - b.pixels[i];
        acc += d * d;
    }
    return acc / static_cast<double>(n);
}

// 10*log10(peak^2 / MSE) in decibels, peak taken from the reference image.
// Returns +infinity for identical images.
inline double psnr(const Image& reference, const Image& test) {
    const double e = mse(reference, test);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(reference.peak * reference.peak / e);
}

}  // namespace cwdenoise
