#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cwdenoise/image.hpp"

namespace cwdenoise {

// Isotropic 2-D Gaussian with its full normalizer. The constant cancels in
// the bilateral filter's weight normalization, so the filter below omits it;
// this function keeps it for direct use.
inline double gaussian2d(double x, double y, double s) {
    if (s <= 0.0) throw std::invalid_argument("gaussian2d: s must be > 0");
    const double s2 = s * s;
    return std::exp(-(x * x + y * y) / (2.0 * s2)) / (2.0 * M_PI * s2);
}

struct BilateralParams {
    double sigma_s = 1.8;  // spatial std, pixels
    double sigma_r = 10.0; // range std, intensity units
    int radius = 0;        // half-width of the square window; 0 = derive from sigma_s

    int effective_radius() const {
        return radius >= 1 ? radius : default_radius(sigma_s);
    }

    static int default_radius(double sigma_s) {
        const int r = static_cast<int>(std::ceil(2.0 * sigma_s));
        return r < 1 ? 1 : r;
    }

    void validate() const {
        if (sigma_s <= 0.0) throw std::invalid_argument("bilateral: sigma_s must be > 0");
        if (sigma_r <= 0.0) throw std::invalid_argument("bilateral: sigma_r must be > 0");
        if (radius < 0) throw std::invalid_argument("bilateral: radius must be >= 1");
    }
};

// Core of the filter on a raw row-major buffer; the pipeline runs it on
// lowpass planes that are not Image objects.
// Per-pixel summation is row-major over the window so results do not depend
// on how callers schedule pixels.
inline void bilateral_buffer(const double* in, int width, int height,
                             const BilateralParams& p, double* out) {
    p.validate();
    const int r = p.effective_radius();
    const double inv2ss = 1.0 / (2.0 * p.sigma_s * p.sigma_s);
    const double inv2sr = 1.0 / (2.0 * p.sigma_r * p.sigma_r);

    // Spatial weights depend only on the window offset.
    const int side = 2 * r + 1;
    std::vector<double> spatial(static_cast<std::size_t>(side) * side);
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
            spatial[static_cast<std::size_t>(dy + r) * side + (dx + r)] =
                std::exp(-(dx * dx + dy * dy) * inv2ss);

    // accumulating deviations from the center pixel keeps constant regions
    // exact fixed points
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double center = in[static_cast<std::size_t>(y) * width + x];
            double acc = 0.0, w = 0.0;
            const int y0 = y - r < 0 ? 0 : y - r;
            const int y1 = y + r >= height ? height - 1 : y + r;
            const int x0 = x - r < 0 ? 0 : x - r;
            const int x1 = x + r >= width ? width - 1 : x + r;
            for (int j = y0; j <= y1; ++j) {
                const double* row = in + static_cast<std::size_t>(j) * width;
                const double* sp = &spatial[static_cast<std::size_t>(j - y + r) * side + (x0 - x + r)];
                for (int i = x0; i <= x1; ++i) {
                    const double d = row[i] - center;
                    const double wt = sp[i - x0] * std::exp(-d * d * inv2sr);
                    acc += wt * d;
                    w += wt;
                }
            }
            out[static_cast<std::size_t>(y) * width + x] = center + acc / w;  // w > 0
        }
    }
}

// Classic bilateral filter: at each pixel, a normalized weighted average over
// a (2r+1)^2 window where weights combine spatial and intensity proximity.
// The window is clipped at borders; the normalization makes clipping unbiased.
inline Image bilateral(const Image& img, const BilateralParams& p) {
    Image out(img.width, img.height, 0.0, img.peak);
    bilateral_buffer(img.pixels.data(), img.width, img.height, p, out.pixels.data());
    return out;
}

}  // namespace cwdenoise
