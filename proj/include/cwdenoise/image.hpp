#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cwdenoise {

// Grayscale image with double-precision pixels in row-major order.
// Values may leave [0, peak] during processing; quantization and clamping
// happen only when the image is written to a file.
struct Image {
    int width = 0;
    int height = 0;
    double peak = 255.0;  // maximum representable intensity of the source
    std::vector<double> pixels;

    Image() = default;

    Image(int w, int h, double fill = 0.0, double pk = 255.0)
        : width(w), height(h), peak(pk),
          pixels(static_cast<std::size_t>(w > 0 ? w : 0) * static_cast<std::size_t>(h > 0 ? h : 0), fill) {
        if (w < 1 || h < 1)
            throw std::invalid_argument("Image: width and height must be >= 1");
        if (pk <= 0.0)
            throw std::invalid_argument("Image: peak must be > 0");
    }

    double& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    double at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }

    std::size_t pixel_count() const { return pixels.size(); }

    bool same_size(const Image& other) const {
        return width == other.width && height == other.height;
    }
};

}  // namespace cwdenoise
