#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "cwdenoise/image.hpp"

namespace cwdenoise {

struct NoiseSpec {
    double sigma = 0.0;      // noise standard deviation, intensity units
    std::uint64_t seed = 0;
};

// Standard normal deviates from a seeded mt19937_64 via the polar Box-Muller
// method. The uniform mapping takes the top 53 bits of the engine output, so
// the stream is reproducible on any conforming platform for a given seed.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : eng_(seed) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * unit() - 1.0;
            v = 2.0 * unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

private:
    double unit() {  // uniform in [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Adds i.i.d. zero-mean Gaussian noise with std spec.sigma. Same (img, spec)
// always produces the identical output.
inline Image add_awgn(const Image& img, const NoiseSpec& spec) {
    if (spec.sigma < 0.0) throw std::invalid_argument("add_awgn: sigma must be >= 0");
    Image out = img;
    if (spec.sigma == 0.0) return out;
    GaussianSampler gauss(spec.seed);
    for (double& p : out.pixels) p += spec.sigma * gauss();
    return out;
}

}  // namespace cwdenoise
