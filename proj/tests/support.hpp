#pragma once

// Shared helpers for the test suites: deterministic random images, a synthetic
// natural-looking test scene, and independent brute-force oracles.

#include <cmath>
#include <random>
#include <vector>

#include "cwdenoise/bilateral.hpp"
#include "cwdenoise/image.hpp"

namespace testsupport {

inline cwdenoise::Image random_image(int w, int h, std::uint64_t seed,
                                     double lo = 0.0, double hi = 255.0) {
    cwdenoise::Image img(w, h);
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    for (auto& p : img.pixels) p = dist(eng);
    return img;
}

// Piecewise-smooth scene with edges at several orientations, a soft blob and
// an oscillatory texture patch; stands in for a natural 8-bit test image.
inline cwdenoise::Image synthetic_scene(int size = 512) {
    cwdenoise::Image img(size, size, 0.0, 255.0);
    const double s = size / 512.0;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            double v = 60.0 + 0.15 * x / s + 0.08 * y / s;
            const double dx = x / s - 160.0, dy = y / s - 180.0;
            if (dx * dx + dy * dy < 90.0 * 90.0) v += 70.0;
            if (x / s >= 300 && x / s < 470 && y / s >= 80 && y / s < 200)
                v += 45.0 + 0.1 * (x / s - 300);
            const double bx = x / s - 370.0, by = y / s - 390.0;
            v += 60.0 * std::exp(-(bx * bx + by * by) / (2.0 * 60.0 * 60.0));
            if (y / s > 350 && x / s < 250)
                v += 12.0 * std::sin(0.55 * x / s) * std::sin(0.41 * y / s);
            if (std::fmod(x / s + y / s, 120.0) < 14.0) v += 25.0;
            img.at(x, y) = std::clamp(v, 0.0, 255.0);
        }
    }
    return img;
}

// Literal evaluation of the bilateral filter definition: double loop over the
// clipped window with fully normalized Gaussian factors. Deliberately written
// independently of the library implementation.
inline cwdenoise::Image bilateral_bruteforce(const cwdenoise::Image& img, double sigma_s,
                                             double sigma_r, int radius) {
    cwdenoise::Image out(img.width, img.height, 0.0, img.peak);
    const double range_norm = 1.0 / (std::sqrt(2.0 * M_PI) * sigma_r);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double num = 0.0, den = 0.0;
            for (int j = y - radius; j <= y + radius; ++j) {
                if (j < 0 || j >= img.height) continue;
                for (int i = x - radius; i <= x + radius; ++i) {
                    if (i < 0 || i >= img.width) continue;
                    const double gs = cwdenoise::gaussian2d(i - x, j - y, sigma_s);
                    const double d = img.at(x, y) - img.at(i, j);
                    const double gr = range_norm * std::exp(-d * d / (2.0 * sigma_r * sigma_r));
                    num += gs * gr * img.at(i, j);
                    den += gs * gr;
                }
            }
            out.at(x, y) = num / den;
        }
    }
    return out;
}

// Window-clipped spatial Gaussian smoother, the sigma_r -> infinity limit.
inline cwdenoise::Image gaussian_conv_bruteforce(const cwdenoise::Image& img, double sigma_s,
                                                 int radius) {
    cwdenoise::Image out(img.width, img.height, 0.0, img.peak);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double num = 0.0, den = 0.0;
            for (int j = y - radius; j <= y + radius; ++j) {
                if (j < 0 || j >= img.height) continue;
                for (int i = x - radius; i <= x + radius; ++i) {
                    if (i < 0 || i >= img.width) continue;
                    const double w = std::exp(-((i - x) * (i - x) + (j - y) * (j - y)) /
                                              (2.0 * sigma_s * sigma_s));
                    num += w * img.at(i, j);
                    den += w;
                }
            }
            out.at(x, y) = num / den;
        }
    }
    return out;
}

}  // namespace testsupport
