#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>

#include "cwdenoise/image.hpp"

namespace cwdenoise {

// PGM reader/writer. Binary (P5) and ASCII (P2) variants, maxval up to 65535.
// The three failure modes are reported with distinct exception types so
// callers can tell a short read from a bad header from a missing file.

struct pgm_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct pgm_io_error : pgm_error {
    using pgm_error::pgm_error;
};

struct pgm_format_error : pgm_error {
    using pgm_error::pgm_error;
};

struct pgm_truncated_error : pgm_error {
    using pgm_error::pgm_error;
};

namespace pgm_detail {

// Skips whitespace and '#' comments between header tokens.
inline void skip_separators(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (c != EOF && std::isspace(static_cast<unsigned char>(c))) {
            in.get();
        } else {
            return;
        }
    }
}

inline long read_header_int(std::istream& in, const std::string& what) {
    skip_separators(in);
    long value = 0;
    bool any = false;
    for (;;) {
        int c = in.peek();
        if (c == EOF || !std::isdigit(static_cast<unsigned char>(c))) break;
        in.get();
        value = value * 10 + (c - '0');
        any = true;
        if (value > 1000000000L) throw pgm_format_error("pgm: " + what + " out of range");
    }
    if (!any) throw pgm_format_error("pgm: missing or non-numeric " + what);
    return value;
}

}  // namespace pgm_detail

inline Image load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pgm_io_error("pgm: cannot open '" + path + "' for reading");

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P' || (m1 != '2' && m1 != '5'))
        throw pgm_format_error("pgm: '" + path + "' is not a P2/P5 PGM file");
    const bool binary = (m1 == '5');

    const long w = pgm_detail::read_header_int(in, "width");
    const long h = pgm_detail::read_header_int(in, "height");
    const long maxval = pgm_detail::read_header_int(in, "maxval");
    if (w < 1 || h < 1) throw pgm_format_error("pgm: non-positive dimensions");
    if (maxval < 1 || maxval > 65535) throw pgm_format_error("pgm: maxval must be in [1, 65535]");

    Image img(static_cast<int>(w), static_cast<int>(h), 0.0, static_cast<double>(maxval));
    const std::size_t n = img.pixel_count();

    if (binary) {
        int sep = in.get();  // single whitespace byte after maxval
        if (sep == EOF) throw pgm_truncated_error("pgm: missing payload");
        if (!std::isspace(static_cast<unsigned char>(sep)))
            throw pgm_format_error("pgm: expected whitespace after maxval");
        const int bytes = maxval > 255 ? 2 : 1;
        std::string buf(n * bytes, '\0');
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (static_cast<std::size_t>(in.gcount()) != buf.size())
            throw pgm_truncated_error("pgm: payload shorter than header promises");
        const auto* raw = reinterpret_cast<const unsigned char*>(buf.data());
        if (bytes == 1) {
            for (std::size_t i = 0; i < n; ++i) img.pixels[i] = raw[i];
        } else {
            for (std::size_t i = 0; i < n; ++i)  // two-byte samples are big-endian
                img.pixels[i] = raw[2 * i] * 256.0 + raw[2 * i + 1];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            pgm_detail::skip_separators(in);
            if (in.peek() == EOF) throw pgm_truncated_error("pgm: payload shorter than header promises");
            long v = pgm_detail::read_header_int(in, "sample");
            img.pixels[i] = static_cast<double>(v);
        }
    }
    return img;
}

// Rounds to nearest integer, clamps to [0, peak] and writes binary P5.
// Sample width follows the image's peak (two bytes above 255).
inline void save_pgm(const Image& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw pgm_io_error("pgm: cannot open '" + path + "' for writing");

    long maxval = std::lround(img.peak);
    if (maxval < 1) maxval = 1;
    if (maxval > 65535) maxval = 65535;

    out << "P5\n" << img.width << " " << img.height << "\n" << maxval << "\n";

    const bool wide = maxval > 255;
    std::string buf;
    buf.reserve(img.pixel_count() * (wide ? 2 : 1));
    for (double p : img.pixels) {
        long v = std::lround(p);
        if (v < 0) v = 0;
        if (v > maxval) v = maxval;
        if (wide) buf.push_back(static_cast<char>((v >> 8) & 0xff));
        buf.push_back(static_cast<char>(v & 0xff));
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw pgm_io_error("pgm: write to '" + path + "' failed");
}

}  // namespace cwdenoise
