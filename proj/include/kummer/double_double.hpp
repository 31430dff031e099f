#pragma once

// Double-double arithmetic: an unevaluated sum of two doubles giving ~31
// significant digits. Classic error-free transformations (two_sum/two_prod
// with fma); enough precision for the front factors and reference oracles
// without pulling in a big-number dependency. Requires -ffp-contract=off.

#include <cmath>
#include <limits>

#include "kummer/errors.hpp"

namespace kummer {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
};

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace detail

inline double to_double(dd a) { return a.hi + a.lo; }

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    dd t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator+(dd a, double b) {
    dd s = detail::two_sum(a.hi, b);
    s.lo += a.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}
inline dd operator+(double a, dd b) { return b + a; }

inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator-(dd a, double b) { return a + (-b); }
inline dd operator-(double a, dd b) { return (-b) + a; }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator*(dd a, double b) {
    dd p = detail::two_prod(a.hi, b);
    p.lo += a.lo * b;
    return detail::quick_two_sum(p.hi, p.lo);
}
inline dd operator*(double a, dd b) { return b * a; }

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + q3;
}

inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator/(double a, dd b) { return dd(a) / b; }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }

inline dd abs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline dd sqrt(dd a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {};
    if (a.hi < 0.0) throw domain_error("dd sqrt of negative value");
    double y0 = std::sqrt(a.hi);
    dd r = a - detail::two_prod(y0, y0);
    return dd(y0) + r / (2.0 * y0);
}

// Frozen constants (hi/lo pairs from a 50-digit reference).
inline constexpr dd DD_LN2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd DD_LN10{2.302585092994046, -2.1707562233822494e-16};
inline constexpr dd DD_PI{3.141592653589793, 1.2246467991473532e-16};
inline constexpr dd DD_HALF_PI{1.5707963267948966, 6.123233995736766e-17};
inline constexpr dd DD_E{2.718281828459045, 1.4456468917292502e-16};
inline constexpr dd DD_HALF_LN_2PI{0.9189385332046728, -3.8782941580672414e-17};

inline dd exp(dd x) {
    if (x.hi > 709.9) return {std::numeric_limits<double>::infinity(), 0.0};
    if (x.hi < -746.0) return {};
    double m = std::round(x.hi / DD_LN2.hi);
    dd r = x - DD_LN2 * m;
    // e^x = 2^m (e^(r/512))^512; build u = expm1(r/512) by Taylor, then square
    // through u <- u(2+u) which keeps the cancellation-free expm1 form.
    r = r / 512.0;
    dd u = r;
    dd term = r;
    for (int k = 2; k <= 12; ++k) {
        term = term * r / static_cast<double>(k);
        u = u + term;
        if (std::fabs(term.hi) < 1e-40) break;
    }
    for (int i = 0; i < 9; ++i) u = u * (2.0 + u);
    dd res = 1.0 + u;
    int mi = static_cast<int>(m);
    return {std::ldexp(res.hi, mi), std::ldexp(res.lo, mi)};
}

inline dd log(dd a) {
    if (!(a.hi > 0.0)) throw domain_error("dd log of non-positive value");
    if (a.hi == 1.0 && a.lo == 0.0) return {};
    int e = 0;
    double mh = std::frexp(a.hi, &e);
    dd mant{mh, std::ldexp(a.lo, -e)};
    dd y = std::log(mant.hi);
    for (int it = 0; it < 2; ++it) y = y + (mant * exp(-y) - 1.0);
    return y + DD_LN2 * static_cast<double>(e);
}

inline dd log1p(dd x) {
    if (!(x.hi > -1.0)) throw domain_error("dd log1p at or below -1");
    if (std::fabs(x.hi) > 0.015625) return log(1.0 + x);
    // ln(1+x) = 2 atanh(z), z = x/(2+x); |z| <= 1/127 so z^17 is below noise.
    dd z = x / (2.0 + x);
    dd z2 = z * z;
    dd sum = z;
    dd p = z;
    for (int k = 3; k <= 17; k += 2) {
        p = p * z2;
        sum = sum + p / static_cast<double>(k);
    }
    return 2.0 * sum;
}

namespace detail {

// B_{2n} / (2n (2n-1)), n = 1..16: coefficients of the Stirling series for
// ln Gamma, frozen as hi/lo pairs. At x >= 40 the n=16 tail is ~1e-42.
inline constexpr dd STIRLING_SERIES[16] = {
    {0.08333333333333333, 4.625929269271485e-18},
    {-0.002777777777777778, 1.0601087908747154e-19},
    {0.0007936507936507937, 6.883823317368282e-22},
    {-0.0005952380952380953, 5.36938218754726e-20},
    {0.0008417508417508417, 3.6870174889237694e-20},
    {-0.0019175269175269176, 1.0675702776872475e-19},
    {0.00641025641025641, 2.2240044563805217e-19},
    {-0.029550653594771242, 4.861760957508855e-19},
    {0.17964437236883057, -6.401600482710946e-19},
    {-1.3924322169059011, 1.5837056989230303e-17},
    {13.402864044168393, -6.154114101993966e-16},
    {-156.84828462600203, 9.391823141715389e-15},
    {2193.1033333333335, -1.3339255626002948e-13},
    {-36108.77125372499, 5.897583353514365e-13},
    {691472.268851313, 2.5585296305158e-11},
    {-15238221.539407415, -8.76774522490625e-10},
};

inline dd lgamma_stirling(dd x) {
    dd inv = 1.0 / x;
    dd inv2 = inv * inv;
    dd p = inv;
    dd series;
    for (const dd& c : STIRLING_SERIES) {
        series = series + c * p;
        p = p * inv2;
    }
    return (x - 0.5) * log(x) - x + DD_HALF_LN_2PI + series;
}

} // namespace detail

inline dd lgamma(double x) {
    if (!(x > 0.0)) throw domain_error("dd lgamma requires positive argument");
    if (x >= 40.0) return detail::lgamma_stirling(x);
    // Raise into the Stirling range: lgamma(x) = lgamma(x+k) - sum ln(x+j).
    int k = static_cast<int>(std::ceil(40.0 - x));
    dd shift;
    // x + j must be formed in dd: the plain-double sum rounds at binade
    // crossings and the slip survives into the final result.
    for (int j = 0; j < k; ++j) shift = shift + log(dd(x) + static_cast<double>(j));
    return detail::lgamma_stirling(dd(x) + static_cast<double>(k)) - shift;
}

} // namespace kummer
