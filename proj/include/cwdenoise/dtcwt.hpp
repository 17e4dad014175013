#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cwdenoise/filters.hpp"
#include "cwdenoise/image.hpp"

namespace cwdenoise {

struct RealGrid {
    int width = 0, height = 0;
    std::vector<double> v;

    RealGrid() = default;
    RealGrid(int w, int h, double fill = 0.0)
        : width(w), height(h), v(static_cast<std::size_t>(w) * h, fill) {}

    double& at(int x, int y) { return v[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
};

// One oriented subband: complex coefficients stored as separate real and
// imaginary grids.
struct ComplexGrid {
    int width = 0, height = 0;
    std::vector<double> re, im;

    ComplexGrid() = default;
    ComplexGrid(int w, int h)
        : width(w), height(h),
          re(static_cast<std::size_t>(w) * h, 0.0),
          im(static_cast<std::size_t>(w) * h, 0.0) {}

    std::size_t count() const { return re.size(); }
};

struct PyramidLevel {
    // band order: [0,1] = +-15 deg (x-low / y-high pair),
    //             [2,3] = +-75 deg (x-high / y-low pair),
    //             [4,5] = +-45 deg (x-high / y-high pair)
    std::array<ComplexGrid, 6> bands;
};

struct Pyramid {
    std::vector<PyramidLevel> levels;      // [0] = finest
    std::array<RealGrid, 4> residue;       // lowpass planes: index = 2*(row tree) + (col tree)
    int original_width = 0, original_height = 0;
    int padded_width = 0, padded_height = 0;
    double source_peak = 255.0;

    int level_count() const { return static_cast<int>(levels.size()); }

    static constexpr std::array<int, 2> diagonal_bands() { return {4, 5}; }

    static const char* band_label(int i) {
        static const char* names[6] = {"+15", "-15", "+75", "-75", "+45", "-45"};
        return (i >= 0 && i < 6) ? names[i] : "?";
    }
};

namespace dt_detail {

// Half-sample symmetric fold of an index into [0, n).
inline int fold_hs(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -1 - i;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

// out[k] = sum_i f.c[i] * x~[k + f.origin - i], full rate, HS extension.
inline void conv_sym(const double* x, int n, const Filter& f, double* out) {
    const int m = static_cast<int>(f.c.size());
    const double* c = f.c.data();
    for (int k = 0; k < n; ++k) {
        const int base = k + f.origin;
        double acc = 0.0;
        if (base - (m - 1) >= 0 && base < n) {
            const double* p = x + base;
            for (int i = 0; i < m; ++i) acc += c[i] * p[-i];
        } else {
            for (int i = 0; i < m; ++i) acc += c[i] * x[fold_hs(base - i, n)];
        }
        out[k] = acc;
    }
}

// Decimating dual-tree stage. v is tree-interleaved (even indices = tree A);
// out is interleaved at half length. Both trees decimate at phase 1 of their
// own rate, which is what keeps the half-sample reflection exactly consistent
// with the interleaving.
inline void down2_dual(const double* v, int len, const Filter& fa, const Filter& fb, double* out) {
    const int half = len / 2;       // interleaved output length; also per-tree input length
    const Filter* f[2] = {&fa, &fb};
    for (int t = 0; t < 2; ++t) {
        const double* c = f[t]->c.data();
        const int m = static_cast<int>(f[t]->c.size());
        const int org = f[t]->origin;
        for (int kt = 0; 2 * kt + t < half; ++kt) {
            const int base = 2 * kt + 1 + org;  // tree-rate input position of the newest tap
            double acc = 0.0;
            if (base - (m - 1) >= 0 && base < half) {
                const double* p = v + t;
                for (int i = 0; i < m; ++i) acc += c[i] * p[2 * (base - i)];
            } else {
                for (int i = 0; i < m; ++i)
                    acc += c[i] * v[fold_hs(2 * (base - i) + t, len)];
            }
            out[2 * kt + t] = acc;
        }
    }
}

// Inverse of one decimating stage: lo and hi are interleaved subbands of
// length len; result is the interleaved parent of length 2*len.
inline void up2_dual(const double* lo, const double* hi, int len,
                     const Filter& gla, const Filter& glb,
                     const Filter& gha, const Filter& ghb, double* out) {
    const int out_len = 2 * len;
    const Filter* gl[2] = {&gla, &glb};
    const Filter* gh[2] = {&gha, &ghb};
    for (int t = 0; t < 2; ++t) {
        for (int s = 0; 2 * s + t < out_len; ++s) {
            double acc = 0.0;
            // lowpass contribution: taps where s - 2k - 1 + org in [0, m)
            {
                const auto& c = gl[t]->c;
                const int m = static_cast<int>(c.size());
                const int org = gl[t]->origin;
                int k_lo = (s + org - m) / 2 - 1;
                int k_hi = (s + org) / 2 + 1;
                for (int k = k_lo; k <= k_hi; ++k) {
                    const int idx = s - 2 * k - 1 + org;
                    if (idx < 0 || idx >= m) continue;
                    acc += c[idx] * lo[fold_hs(2 * k + t, len)];
                }
            }
            {
                const auto& c = gh[t]->c;
                const int m = static_cast<int>(c.size());
                const int org = gh[t]->origin;
                int k_lo = (s + org - m) / 2 - 1;
                int k_hi = (s + org) / 2 + 1;
                for (int k = k_lo; k <= k_hi; ++k) {
                    const int idx = s - 2 * k - 1 + org;
                    if (idx < 0 || idx >= m) continue;
                    acc += c[idx] * hi[fold_hs(2 * k + t, len)];
                }
            }
            out[2 * s + t] = acc;
        }
    }
}

// Level-1 synthesis: x[k] = (conv(L~, g0)[k] + conv(H~, g1)[k]) / 2.
inline void synth_first(const double* L, const double* H, int n,
                        const Filter& g0, const Filter& g1, double* out) {
    std::vector<double> a(n), b(n);
    conv_sym(L, n, g0, a.data());
    conv_sym(H, n, g1, b.data());
    for (int k = 0; k < n; ++k) out[k] = 0.5 * (a[k] + b[k]);
}

inline RealGrid transpose(const RealGrid& g) {
    RealGrid t(g.height, g.width);
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x) t.at(y, x) = g.at(x, y);
    return t;
}

inline RealGrid conv_rows(const RealGrid& g, const Filter& f) {
    RealGrid out(g.width, g.height);
    for (int y = 0; y < g.height; ++y)
        conv_sym(&g.v[static_cast<std::size_t>(y) * g.width], g.width, f,
                 &out.v[static_cast<std::size_t>(y) * g.width]);
    return out;
}

inline RealGrid down2_rows(const RealGrid& g, const Filter& fa, const Filter& fb) {
    RealGrid out(g.width / 2, g.height);
    for (int y = 0; y < g.height; ++y)
        down2_dual(&g.v[static_cast<std::size_t>(y) * g.width], g.width, fa, fb,
                   &out.v[static_cast<std::size_t>(y) * out.width]);
    return out;
}

inline RealGrid up2_rows(const RealGrid& lo, const RealGrid& hi,
                         const Filter& gla, const Filter& glb,
                         const Filter& gha, const Filter& ghb) {
    RealGrid out(lo.width * 2, lo.height);
    for (int y = 0; y < lo.height; ++y)
        up2_dual(&lo.v[static_cast<std::size_t>(y) * lo.width],
                 &hi.v[static_cast<std::size_t>(y) * hi.width], lo.width,
                 gla, glb, gha, ghb, &out.v[static_cast<std::size_t>(y) * out.width]);
    return out;
}

inline RealGrid synth_first_rows(const RealGrid& L, const RealGrid& H,
                                 const Filter& g0, const Filter& g1) {
    RealGrid out(L.width, L.height);
    for (int y = 0; y < L.height; ++y)
        synth_first(&L.v[static_cast<std::size_t>(y) * L.width],
                    &H.v[static_cast<std::size_t>(y) * H.width], L.width, g0, g1,
                    &out.v[static_cast<std::size_t>(y) * out.width]);
    return out;
}

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// Quadrature combination: four tree polyphases of one detail grid into the
// two oriented complex subbands.
inline void q2c(const RealGrid& d, ComplexGrid& z1, ComplexGrid& z2) {
    const int w = d.width / 2, h = d.height / 2;
    z1 = ComplexGrid(w, h);
    z2 = ComplexGrid(w, h);
    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
            const double faa = d.at(2 * i, 2 * j);
            const double fab = d.at(2 * i + 1, 2 * j);      // col tree B
            const double fba = d.at(2 * i, 2 * j + 1);      // row tree B
            const double fbb = d.at(2 * i + 1, 2 * j + 1);
            const std::size_t idx = static_cast<std::size_t>(j) * w + i;
            z1.re[idx] = (faa - fbb) * kInvSqrt2;
            z1.im[idx] = (fab + fba) * kInvSqrt2;
            z2.re[idx] = (faa + fbb) * kInvSqrt2;
            z2.im[idx] = (fba - fab) * kInvSqrt2;
        }
    }
}

inline RealGrid c2q(const ComplexGrid& z1, const ComplexGrid& z2) {
    RealGrid d(z1.width * 2, z1.height * 2);
    for (int j = 0; j < z1.height; ++j) {
        for (int i = 0; i < z1.width; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * z1.width + i;
            d.at(2 * i, 2 * j) = (z1.re[idx] + z2.re[idx]) * kInvSqrt2;
            d.at(2 * i + 1, 2 * j + 1) = (z2.re[idx] - z1.re[idx]) * kInvSqrt2;
            d.at(2 * i + 1, 2 * j) = (z1.im[idx] - z2.im[idx]) * kInvSqrt2;
            d.at(2 * i, 2 * j + 1) = (z1.im[idx] + z2.im[idx]) * kInvSqrt2;
        }
    }
    return d;
}

inline std::array<RealGrid, 4> split4(const RealGrid& s) {
    std::array<RealGrid, 4> p;
    const int w = s.width / 2, h = s.height / 2;
    for (auto& g : p) g = RealGrid(w, h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            p[0].at(i, j) = s.at(2 * i, 2 * j);
            p[1].at(i, j) = s.at(2 * i + 1, 2 * j);
            p[2].at(i, j) = s.at(2 * i, 2 * j + 1);
            p[3].at(i, j) = s.at(2 * i + 1, 2 * j + 1);
        }
    return p;
}

inline RealGrid interleave4(const std::array<RealGrid, 4>& p) {
    RealGrid s(p[0].width * 2, p[0].height * 2);
    for (int j = 0; j < p[0].height; ++j)
        for (int i = 0; i < p[0].width; ++i) {
            s.at(2 * i, 2 * j) = p[0].at(i, j);
            s.at(2 * i + 1, 2 * j) = p[1].at(i, j);
            s.at(2 * i, 2 * j + 1) = p[2].at(i, j);
            s.at(2 * i + 1, 2 * j + 1) = p[3].at(i, j);
        }
    return s;
}

}  // namespace dt_detail

// Forward 2-D dual-tree complex wavelet transform. The image is padded on the
// bottom/right by symmetric reflection up to the next multiple of 2^levels;
// the inverse crops back to the original size.
inline Pyramid forward(const Image& img, int levels, const FilterBank& bank = FilterBank::standard()) {
    using namespace dt_detail;
    if (levels < 1) throw std::invalid_argument("dtcwt: levels must be >= 1");
    const int unit = 1 << levels;
    if (img.width < unit || img.height < unit)
        throw std::invalid_argument("dtcwt: levels too large for image size");

    const int wp = ((img.width + unit - 1) / unit) * unit;
    const int hp = ((img.height + unit - 1) / unit) * unit;

    RealGrid s(wp, hp);
    for (int y = 0; y < hp; ++y) {
        const int sy = y < img.height ? y : 2 * img.height - 1 - y;
        for (int x = 0; x < wp; ++x) {
            const int sx = x < img.width ? x : 2 * img.width - 1 - x;
            s.at(x, y) = img.at(sx, sy);
        }
    }

    Pyramid pyr;
    pyr.original_width = img.width;
    pyr.original_height = img.height;
    pyr.padded_width = wp;
    pyr.padded_height = hp;
    pyr.source_peak = img.peak;
    pyr.levels.resize(levels);

    for (int k = 1; k <= levels; ++k) {
        RealGrid row_lo, row_hi, ll, lh, hl, hh;
        if (k == 1) {
            row_lo = conv_rows(s, bank.first_lo_a);
            row_hi = conv_rows(s, bank.first_hi_a);
            RealGrid tl = transpose(row_lo), th = transpose(row_hi);
            ll = transpose(conv_rows(tl, bank.first_lo_a));
            lh = transpose(conv_rows(tl, bank.first_hi_a));
            hl = transpose(conv_rows(th, bank.first_lo_a));
            hh = transpose(conv_rows(th, bank.first_hi_a));
        } else {
            row_lo = down2_rows(s, bank.shift_lo_a[0], bank.shift_lo_a[1]);
            row_hi = down2_rows(s, bank.shift_hi_a[0], bank.shift_hi_a[1]);
            RealGrid tl = transpose(row_lo), th = transpose(row_hi);
            ll = transpose(down2_rows(tl, bank.shift_lo_a[0], bank.shift_lo_a[1]));
            lh = transpose(down2_rows(tl, bank.shift_hi_a[0], bank.shift_hi_a[1]));
            hl = transpose(down2_rows(th, bank.shift_lo_a[0], bank.shift_lo_a[1]));
            hh = transpose(down2_rows(th, bank.shift_hi_a[0], bank.shift_hi_a[1]));
        }
        auto& lv = pyr.levels[k - 1];
        q2c(lh, lv.bands[0], lv.bands[1]);  // x-low / y-high
        q2c(hl, lv.bands[2], lv.bands[3]);  // x-high / y-low
        q2c(hh, lv.bands[4], lv.bands[5]);  // diagonal
        s = std::move(ll);
    }
    pyr.residue = split4(s);
    return pyr;
}

namespace dt_detail {

inline void validate_pyramid(const Pyramid& pyr) {
    const int L = pyr.level_count();
    if (L < 1) throw std::invalid_argument("dtcwt: empty pyramid");
    if (pyr.padded_width < (1 << L) || pyr.padded_height < (1 << L) ||
        pyr.padded_width % (1 << L) != 0 || pyr.padded_height % (1 << L) != 0)
        throw std::invalid_argument("dtcwt: padded size inconsistent with level count");
    if (pyr.original_width < 1 || pyr.original_width > pyr.padded_width ||
        pyr.original_height < 1 || pyr.original_height > pyr.padded_height)
        throw std::invalid_argument("dtcwt: original size inconsistent with padded size");
    for (int k = 1; k <= L; ++k) {
        const int w = pyr.padded_width >> k, h = pyr.padded_height >> k;
        for (const auto& b : pyr.levels[k - 1].bands)
            if (b.width != w || b.height != h)
                throw std::invalid_argument("dtcwt: subband dimension chain broken");
    }
    for (const auto& r : pyr.residue)
        if (r.width != pyr.padded_width >> L || r.height != pyr.padded_height >> L)
            throw std::invalid_argument("dtcwt: residue dimension chain broken");
}

}  // namespace dt_detail

// Inverse transform. `lowpass_hook(state, level)` is called on the interleaved
// intermediate lowpass after synthesizing down to each level in [1, L-1]; the
// plain inverse passes a no-op.
template <typename LowpassHook>
inline Image inverse_with_lowpass_hook(const Pyramid& pyr, const FilterBank& bank,
                                       LowpassHook&& lowpass_hook) {
    using namespace dt_detail;
    validate_pyramid(pyr);
    const int L = pyr.level_count();

    RealGrid s = interleave4(pyr.residue);
    for (int k = L; k >= 2; --k) {
        const auto& lv = pyr.levels[k - 1];
        RealGrid lh = c2q(lv.bands[0], lv.bands[1]);
        RealGrid hl = c2q(lv.bands[2], lv.bands[3]);
        RealGrid hh = c2q(lv.bands[4], lv.bands[5]);
        // columns first (forward filtered rows first)
        RealGrid row_lo = transpose(up2_rows(transpose(s), transpose(lh),
                                             bank.shift_lo_s[0], bank.shift_lo_s[1],
                                             bank.shift_hi_s[0], bank.shift_hi_s[1]));
        RealGrid row_hi = transpose(up2_rows(transpose(hl), transpose(hh),
                                             bank.shift_lo_s[0], bank.shift_lo_s[1],
                                             bank.shift_hi_s[0], bank.shift_hi_s[1]));
        s = up2_rows(row_lo, row_hi, bank.shift_lo_s[0], bank.shift_lo_s[1],
                     bank.shift_hi_s[0], bank.shift_hi_s[1]);
        lowpass_hook(s, k - 1);
    }
    {
        const auto& lv = pyr.levels[0];
        RealGrid lh = c2q(lv.bands[0], lv.bands[1]);
        RealGrid hl = c2q(lv.bands[2], lv.bands[3]);
        RealGrid hh = c2q(lv.bands[4], lv.bands[5]);
        RealGrid row_lo = transpose(synth_first_rows(transpose(s), transpose(lh),
                                                     bank.first_lo_s, bank.first_hi_s));
        RealGrid row_hi = transpose(synth_first_rows(transpose(hl), transpose(hh),
                                                     bank.first_lo_s, bank.first_hi_s));
        s = synth_first_rows(row_lo, row_hi, bank.first_lo_s, bank.first_hi_s);
    }

    Image out(pyr.original_width, pyr.original_height, 0.0, pyr.source_peak);
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x) out.at(x, y) = s.at(x, y);
    return out;
}

inline Image inverse(const Pyramid& pyr, const FilterBank& bank = FilterBank::standard()) {
    return inverse_with_lowpass_hook(pyr, bank, [](RealGrid&, int) {});
}

// ---------------------------------------------------------------------------
// 1-D machinery for the shift-invariance diagnostic. Internal; the public 2-D
// transform does not go through these.

namespace dt_detail {

struct DualTreeSignal {
    std::vector<std::vector<double>> details;  // [0] full rate, deeper interleaved
    std::vector<double> low;
};

inline DualTreeSignal forward_signal(const std::vector<double>& x, int levels, const FilterBank& bank) {
    DualTreeSignal out;
    const int n = static_cast<int>(x.size());
    std::vector<double> lo(n), hi(n);
    conv_sym(x.data(), n, bank.first_lo_a, lo.data());
    conv_sym(x.data(), n, bank.first_hi_a, hi.data());
    out.details.push_back(std::move(hi));
    std::vector<double> s = std::move(lo);
    for (int k = 2; k <= levels; ++k) {
        const int len = static_cast<int>(s.size());
        std::vector<double> d(len / 2), l(len / 2);
        down2_dual(s.data(), len, bank.shift_hi_a[0], bank.shift_hi_a[1], d.data());
        down2_dual(s.data(), len, bank.shift_lo_a[0], bank.shift_lo_a[1], l.data());
        out.details.push_back(std::move(d));
        s = std::move(l);
    }
    out.low = std::move(s);
    return out;
}

inline std::vector<double> inverse_signal(const DualTreeSignal& dt, const FilterBank& bank) {
    std::vector<double> s = dt.low;
    const int levels = static_cast<int>(dt.details.size());
    for (int k = levels; k >= 2; --k) {
        const int len = static_cast<int>(s.size());
        std::vector<double> up(2 * len);
        up2_dual(s.data(), dt.details[k - 1].data(), len,
                 bank.shift_lo_s[0], bank.shift_lo_s[1],
                 bank.shift_hi_s[0], bank.shift_hi_s[1], up.data());
        s = std::move(up);
    }
    const int n = static_cast<int>(s.size());
    std::vector<double> x(n);
    synth_first(s.data(), dt.details[0].data(), n, bank.first_lo_s, bank.first_hi_s, x.data());
    return x;
}

// Critically-sampled single-tree DWT with the first-level biorthogonal pair
// at every scale and periodic extension; the conventional baseline the
// dual-tree is compared against.
struct Dwt1D {
    std::vector<std::vector<double>> details;
    std::vector<double> low;
};

inline Dwt1D dwt_forward(const std::vector<double>& x, int levels, const FilterBank& bank) {
    Filter h0 = bank.first_lo_a;
    Filter h1 = bank.first_hi_a;
    h1.origin -= 1;  // classic alias-cancelling alignment
    Dwt1D out;
    std::vector<double> s = x;
    auto wrap = [](int i, int n) { return ((i % n) + n) % n; };
    for (int k = 1; k <= levels; ++k) {
        const int n = static_cast<int>(s.size());
        std::vector<double> lo(n / 2), hi(n / 2);
        for (int half = 0; half < 2; ++half) {
            const Filter& f = half ? h1 : h0;
            auto& dst = half ? hi : lo;
            for (int kk = 0; kk < n / 2; ++kk) {
                double acc = 0.0;
                const int base = 2 * kk + f.origin;
                for (std::size_t i = 0; i < f.c.size(); ++i)
                    acc += f.c[i] * s[wrap(base - static_cast<int>(i), n)];
                dst[kk] = acc;
            }
        }
        out.details.push_back(std::move(hi));
        s = std::move(lo);
    }
    out.low = std::move(s);
    return out;
}

inline std::vector<double> dwt_inverse(const Dwt1D& dwt, const FilterBank& bank) {
    Filter g0 = bank.first_lo_s;
    Filter g1 = bank.first_hi_s;
    g1.origin += 1;
    auto wrap = [](int i, int n) { return ((i % n) + n) % n; };
    std::vector<double> s = dwt.low;
    for (int k = static_cast<int>(dwt.details.size()); k >= 1; --k) {
        const auto& d = dwt.details[k - 1];
        const int half = static_cast<int>(s.size());
        const int n = 2 * half;
        std::vector<double> up(n, 0.0);
        for (int src = 0; src < 2; ++src) {
            const Filter& g = src ? g1 : g0;
            const auto& coefs = src ? d : s;
            for (int kk = 0; kk < half; ++kk) {
                const double cv = coefs[kk];
                if (cv == 0.0) continue;
                for (std::size_t i = 0; i < g.c.size(); ++i) {
                    const int pos = wrap(2 * kk + static_cast<int>(i) - g.origin, n);
                    up[pos] += g.c[i] * cv;
                }
            }
        }
        s = std::move(up);
    }
    return s;
}

}  // namespace dt_detail

namespace dt_detail {

// Step-edge probe: a centered box pulse whose two edges move with the shift.
// Keeping the support away from the borders means a circular shift never
// carries signal across the boundary, so the measured variation is the
// transform's own shift dependence and not an extension artifact.
inline std::vector<double> step_edge_signal(int n, int shift) {
    std::vector<double> x(n, 0.0);
    for (int i = n / 4 + shift; i < 3 * n / 4 + shift; ++i) x[i % n] = 1.0;
    return x;
}

}  // namespace dt_detail

// Relative spread (max-min)/mean of the energy reconstructed from the
// level-`level` detail coefficients alone, across 2^level circular shifts of
// a step-edge signal. Smaller is closer to shift invariant.
inline double shift_invariance_metric(const FilterBank& bank, int level) {
    using namespace dt_detail;
    if (level < 1) throw std::invalid_argument("shift_invariance_metric: level must be >= 1");
    const int n = 256;
    const int shifts = 1 << level;
    double emin = 0.0, emax = 0.0, esum = 0.0;
    for (int sft = 0; sft < shifts; ++sft) {
        std::vector<double> x = step_edge_signal(n, sft);
        DualTreeSignal dt = forward_signal(x, level, bank);
        for (int k = 0; k + 1 < static_cast<int>(dt.details.size()); ++k)
            std::fill(dt.details[k].begin(), dt.details[k].end(), 0.0);
        std::fill(dt.low.begin(), dt.low.end(), 0.0);
        std::vector<double> y = inverse_signal(dt, bank);
        double e = 0.0;
        for (double v : y) e += v * v;
        if (sft == 0) { emin = emax = e; }
        emin = std::min(emin, e);
        emax = std::max(emax, e);
        esum += e;
    }
    const double mean = esum / shifts;
    if (mean == 0.0) return 0.0;
    return (emax - emin) / mean;
}

// Same protocol for the critically-sampled single-tree DWT baseline.
inline double shift_invariance_metric_dwt(const FilterBank& bank, int level) {
    using namespace dt_detail;
    if (level < 1) throw std::invalid_argument("shift_invariance_metric_dwt: level must be >= 1");
    const int n = 256;
    const int shifts = 1 << level;
    double emin = 0.0, emax = 0.0, esum = 0.0;
    for (int sft = 0; sft < shifts; ++sft) {
        std::vector<double> x = dt_detail::step_edge_signal(n, sft);
        Dwt1D dwt = dwt_forward(x, level, bank);
        for (int k = 0; k + 1 < static_cast<int>(dwt.details.size()); ++k)
            std::fill(dwt.details[k].begin(), dwt.details[k].end(), 0.0);
        std::fill(dwt.low.begin(), dwt.low.end(), 0.0);
        std::vector<double> y = dwt_inverse(dwt, bank);
        double e = 0.0;
        for (double v : y) e += v * v;
        if (sft == 0) { emin = emax = e; }
        emin = std::min(emin, e);
        emax = std::max(emax, e);
        esum += e;
    }
    const double mean = esum / shifts;
    if (mean == 0.0) return 0.0;
    return (emax - emin) / mean;
}

}  // namespace cwdenoise
