#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace cwdenoise {

// A finite filter tap sequence plus the array index of the n = 0 tap, so the
// effective support is [-origin, size-1-origin].
struct Filter {
    std::vector<double> c;
    int origin = 0;

    int lo() const { return -origin; }
    int hi() const { return static_cast<int>(c.size()) - 1 - origin; }

    double l2norm() const {
        double s = 0.0;
        for (double v : c) s += v * v;
        return std::sqrt(s);
    }
};

namespace filter_tables {

// First-level biorthogonal pair (13,19 taps). The 13-tap analysis lowpass is
// exactly rational; the 19-tap synthesis lowpass is its unique symmetric
// halfband complement with a double zero at z = -1 (frozen from a one-off
// high-precision solve; the test suite re-verifies the halfband identity).
inline const std::array<double, 13> kFirstLo13 = {
    -9.0 / 5120.0,   0.0,            114.0 / 5120.0, -240.0 / 5120.0,
    -247.0 / 5120.0, 1520.0 / 5120.0, 2844.0 / 5120.0, 1520.0 / 5120.0,
    -247.0 / 5120.0, -240.0 / 5120.0, 114.0 / 5120.0,  0.0,
    -9.0 / 5120.0};

inline const std::array<double, 19> kFirstLo19 = {
    5.8070591517857143e-05,  0.0,                     -1.5469796316964286e-03,
    -1.5485491071428571e-03, 1.1060267857142857e-02,  3.1445312500000000e-02,
    -8.3854631696428571e-02, -1.0559430803571429e-01, 5.7428327287946429e-01,
    1.1513950892857143e+00,  5.7428327287946429e-01,  -1.0559430803571429e-01,
    -8.3854631696428571e-02, 3.1445312500000000e-02,  1.1060267857142857e-02,
    -1.5485491071428571e-03, -1.5469796316964286e-03, 0.0,
    5.8070591517857143e-05};

// 14-tap quarter-shift lowpass for levels >= 2, tree A; tree B uses its time
// reverse. Double-shift orthonormal to machine precision, unit DC gain sqrt(2),
// zero at Nyquist.
inline const std::array<double, 14> kShiftLo14 = {
    3.2531312139535151e-03,  -3.8831997181227234e-03, 3.4660234311095086e-02,
    -3.8872687863674407e-02, -1.1720401574999472e-01, 2.7529547986450797e-01,
    7.5614553412266250e-01,  5.6881053398846738e-01,  1.1865973985478195e-02,
    -1.0671168816241857e-01, 2.3825378650406041e-02,  1.7025219690088231e-02,
    -5.4394553470530920e-03, -4.5568766123003536e-03};

}  // namespace filter_tables

// All analysis/synthesis filters of the dual-tree transform. Analysis branches
// are L2-normalized so white noise keeps roughly unit variance in every
// subband; synthesis carries the reciprocal scale, which leaves every
// analysis/synthesis product unchanged.
struct FilterBank {
    // level 1 (odd-length biorthogonal; both trees share these, tree B is the
    // one-sample-shifted decimation phase)
    Filter first_lo_a, first_hi_a;  // analysis
    Filter first_lo_s, first_hi_s;  // synthesis

    // levels >= 2 (even-length quarter-shift orthonormal)
    Filter shift_lo_a[2], shift_hi_a[2];  // analysis, [0]=tree A, [1]=tree B
    Filter shift_lo_s[2], shift_hi_s[2];  // synthesis

    static const FilterBank& standard() {
        static const FilterBank bank = make_standard();
        return bank;
    }

private:
    static FilterBank make_standard() {
        using namespace filter_tables;
        FilterBank fb;

        std::vector<double> h0(kFirstLo13.begin(), kFirstLo13.end());
        std::vector<double> g0(kFirstLo19.begin(), kFirstLo19.end());
        const int n0 = static_cast<int>(h0.size());
        const int n1 = static_cast<int>(g0.size());

        // analysis highpass: H1(z) = z^-1 G0(-z), stored with a +1 output
        // offset so the filtered sequence keeps plain half-sample symmetry
        std::vector<double> h1(n1);
        for (int i = 0; i < n1; ++i) h1[i] = -(i % 2 ? -1.0 : 1.0) * g0[i];
        // synthesis highpass: G1(z) = z^+1 H0(-z), offset mirrored
        std::vector<double> g1(n0);
        for (int i = 0; i < n0; ++i) g1[i] = (i % 2 ? -1.0 : 1.0) * h0[i];

        double a0 = 0.0, a1 = 0.0;
        for (double v : h0) a0 += v * v;
        for (double v : h1) a1 += v * v;
        a0 = std::sqrt(a0);
        a1 = std::sqrt(a1);

        fb.first_lo_a = scaled(h0, 6, 1.0 / a0);
        fb.first_hi_a = scaled(h1, 9, 1.0 / a1);
        fb.first_lo_s = scaled(g0, 9, a0);
        fb.first_hi_s = scaled(g1, 6, a1);

        // tree A takes the reversed table (group delay 3/4 sample past center),
        // tree B the table itself (1/4 sample); the half-sample stagger between
        // the trees at every scale is what makes the pair a quadrature pair
        const int m = static_cast<int>(kShiftLo14.size());
        std::vector<double> qa(m), qb(kShiftLo14.begin(), kShiftLo14.end());
        for (int i = 0; i < m; ++i) qa[i] = qb[m - 1 - i];
        std::vector<double> qha(m), qhb(m);
        for (int i = 0; i < m; ++i) qha[i] = (i % 2 ? -1.0 : 1.0) * qa[m - 1 - i];
        for (int i = 0; i < m; ++i) qhb[i] = qha[m - 1 - i];

        fb.shift_lo_a[0] = {qa, 6};
        fb.shift_lo_a[1] = {qb, 6};
        fb.shift_hi_a[0] = {qha, 6};
        fb.shift_hi_a[1] = {qhb, 6};
        // orthonormal bank: synthesis filters are the time-reversed analysis
        fb.shift_lo_s[0] = {qb, 7};
        fb.shift_lo_s[1] = {qa, 7};
        fb.shift_hi_s[0] = {qhb, 7};
        fb.shift_hi_s[1] = {qha, 7};
        return fb;
    }

    static Filter scaled(const std::vector<double>& c, int origin, double s) {
        Filter f{c, origin};
        for (double& v : f.c) v *= s;
        return f;
    }
};

}  // namespace cwdenoise
