#pragma once

// Truncated power-series arithmetic over double, plus the order-by-order
// inversion of the saddle transformation. Everything works coefficient-wise
// on plain vectors internally; the TruncatedSeries wrappers add center
// bookkeeping for the public operations.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "kummer/errors.hpp"

namespace kummer {

struct TruncatedSeries {
    double center = 0.0;
    std::vector<double> coeffs{0.0}; // coeffs[k] multiplies (x - center)^k

    TruncatedSeries() = default;
    TruncatedSeries(double c, std::vector<double> v) : center(c), coeffs(std::move(v)) {
        if (coeffs.empty()) coeffs.push_back(0.0);
    }
    std::size_t order() const { return coeffs.size() - 1; }
};

namespace detail {

inline double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// Cauchy product truncated at `order`.
inline std::vector<double> mul_raw(const std::vector<double>& a, const std::vector<double>& b,
                                   std::size_t order) {
    std::vector<double> out(order + 1, 0.0);
    std::size_t na = std::min(a.size(), order + 1);
    for (std::size_t i = 0; i < na; ++i) {
        double ai = a[i];
        if (ai == 0.0) continue;
        std::size_t nb = std::min(b.size(), order + 1 - i);
        for (std::size_t j = 0; j < nb; ++j) out[i + j] += ai * b[j];
    }
    return out;
}

inline std::vector<double> sqrt_raw(const std::vector<double>& a, std::size_t order) {
    if (a.empty() || !(a[0] > 0.0)) throw domain_error("series sqrt requires positive constant term");
    std::vector<double> out(order + 1, 0.0);
    double s0 = std::sqrt(a[0]);
    out[0] = s0;
    for (std::size_t k = 1; k <= order; ++k) {
        double acc = k < a.size() ? a[k] : 0.0;
        for (std::size_t j = 1; j < k; ++j) acc -= out[j] * out[k - j];
        out[k] = acc / (2.0 * s0);
    }
    return out;
}

inline std::vector<double> reciprocal_raw(const std::vector<double>& a, std::size_t order) {
    if (a.empty() || a[0] == 0.0) throw domain_error("series reciprocal requires nonzero constant term");
    std::vector<double> out(order + 1, 0.0);
    out[0] = 1.0 / a[0];
    for (std::size_t k = 1; k <= order; ++k) {
        double acc = 0.0;
        std::size_t top = std::min(k, a.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) acc += a[j] * out[k - j];
        out[k] = -acc * out[0];
    }
    return out;
}

inline std::vector<double> derivative_raw(const std::vector<double>& a) {
    if (a.size() <= 1) return {0.0};
    std::vector<double> out(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] * static_cast<double>(k);
    return out;
}

// q(u(x)) by Horner over the full polynomial q; sound as a truncated
// composition when u has zero constant term.
inline std::vector<double> compose_raw(const std::vector<double>& q, const std::vector<double>& u,
                                       std::size_t order) {
    std::size_t m = std::min(q.size() - 1, order);
    std::vector<double> res(1, q[m]);
    for (std::size_t j = m; j-- > 0;) {
        res = mul_raw(res, u, order);
        res[0] += q[j];
    }
    res.resize(order + 1, 0.0);
    return res;
}

inline void require_same_center(const TruncatedSeries& u, const TruncatedSeries& v) {
    if (u.center != v.center) throw usage_error("series centers do not match");
}

} // namespace detail

inline TruncatedSeries series_mul(const TruncatedSeries& u, const TruncatedSeries& v) {
    detail::require_same_center(u, v);
    std::size_t order = std::min(u.order(), v.order());
    return {u.center, detail::mul_raw(u.coeffs, v.coeffs, order)};
}

inline TruncatedSeries series_sqrt(const TruncatedSeries& u) {
    return {u.center, detail::sqrt_raw(u.coeffs, u.order())};
}

inline TruncatedSeries series_reciprocal(const TruncatedSeries& u) {
    return {u.center, detail::reciprocal_raw(u.coeffs, u.order())};
}

inline TruncatedSeries series_derivative(const TruncatedSeries& u) {
    return {u.center, detail::derivative_raw(u.coeffs)};
}

// q evaluated at the inner series u; requires u(center) to sit exactly on
// q's expansion point so the composition stays a truncated power series.
inline TruncatedSeries series_compose(const TruncatedSeries& q, const TruncatedSeries& u) {
    if (u.coeffs[0] != q.center) throw usage_error("inner series does not map into the outer expansion point");
    std::vector<double> inner = u.coeffs;
    inner[0] = 0.0;
    std::size_t order = std::min(u.order(), q.order());
    return {u.center, detail::compose_raw(q.coeffs, inner, order)};
}

// Solves phi(t0 + w) - phi(t0) = psi(s0 + x) - psi(s0) for w as a series in
// x, order by order. Inputs are derivative arrays indexed by derivative
// order: derivs[k] = d^k/dt^k at the expansion point, k = 2..K+2 (entries 0
// and 1 are ignored). Both sides are normalized by their quadratic terms
// before matching, so intermediates stay near 1; the positive branch
// w = t1*x*(1 + ...) with t1 = sqrt(psi2/phi2) is selected. Returns the
// offset series: coefficient 0 is 0 (the caller owns t0 and s0).
inline TruncatedSeries invert_transformation(const std::vector<double>& phi_derivs,
                                             const std::vector<double>& psi_derivs,
                                             std::size_t K) {
    if (phi_derivs.size() < K + 3 || psi_derivs.size() < K + 3)
        throw usage_error("derivative arrays shorter than K+2");
    double phi2 = phi_derivs[2];
    double psi2 = psi_derivs[2];
    if (!(phi2 > 0.0) || !(psi2 > 0.0))
        throw domain_error("saddle degeneracy: second derivatives must be positive");

    // Q[j] = phi_{j+2} / ((j+2)! (phi2/2)), so phi side = (phi2/2) w^2 Q(w).
    std::vector<double> Q(K + 1), P(K + 1);
    for (std::size_t j = 0; j <= K; ++j) {
        double fac = detail::factorial(static_cast<int>(j) + 2);
        Q[j] = phi_derivs[j + 2] / (fac * (phi2 / 2.0));
        P[j] = psi_derivs[j + 2] / (fac * (psi2 / 2.0));
    }
    double t1 = std::sqrt(psi2 / phi2);

    // R(x) = t1 * x * sqrt(P(x)); L(w) = w * sqrt(Q(w)). Match L(w(x)) = R(x).
    std::vector<double> xs{0.0, t1};
    std::vector<double> R = detail::mul_raw(xs, detail::sqrt_raw(P, K), K);
    std::vector<double> u{0.0, t1};
    u.resize(K + 1, 0.0);
    for (std::size_t n = 2; n <= K; ++n) {
        std::vector<double> L = detail::mul_raw(u, detail::sqrt_raw(detail::compose_raw(Q, u, K), K), K);
        u[n] = R[n] - L[n];
    }
    return {0.0, std::move(u)};
}

} // namespace kummer
