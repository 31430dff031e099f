#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "kummer/closed_forms.hpp"
#include "kummer/errors.hpp"
#include "kummer/scaling.hpp"
#include "kummer/series.hpp"

namespace kummer {

enum class Which { M, U };

inline constexpr int MAX_TERMS = 8;
// Below this |mu| the double-precision pipeline drowns in cancellation noise
// (coefficient n carries absolute error ~eps/mu^n); switch to the stored
// closed forms, whose tau-parameterization is smooth through mu = 0.
inline constexpr double SMALL_MU_THRESHOLD = 1e-4;

struct CoefficientSet {
    double mu = 0.0;
    double beta = 0.0;
    double tau = 0.0;
    Which which = Which::M;
    TruncatedSeries t_series;      // t(s) about s0 = mu; coefficient 0 is t0
    std::vector<double> a;         // integrand coefficients a_k (p-integrand for U)
    std::vector<double> f;         // f_n (p_n for U)
    std::vector<double> f_tilde;   // f_n/f_0 (p_n/p_0)
};

struct StirlingTable {
    std::vector<std::vector<long long>> s; // s[n][m], signed first kind
    std::vector<std::vector<long long>> T; // T[n][k-1] for n >= 1, 1 <= k <= n

    explicit StirlingTable(int n_max = MAX_TERMS) {
        int n2 = 2 * n_max;
        s.assign(n2 + 1, {});
        s[0] = {1};
        for (int n = 1; n <= n2; ++n) {
            s[n].assign(n + 1, 0);
            for (int m = 1; m <= n; ++m) {
                long long up = m <= n - 1 ? s[n - 1][m] : 0;
                s[n][m] = s[n - 1][m - 1] - static_cast<long long>(n - 1) * up;
            }
        }
        std::vector<std::vector<long long>> binom(n2 + 1);
        for (int n = 0; n <= n2; ++n) {
            binom[n].assign(n + 1, 1);
            for (int k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
        }
        T.assign(n_max + 1, {});
        for (int n = 1; n <= n_max; ++n) {
            T[n].assign(n, 0);
            for (int k = 1; k <= n; ++k) {
                long long acc = 0;
                for (int m = 1; m <= k; ++m) {
                    long long term = binom[n + k][n + m] * s[n + m][m];
                    acc += ((n + m + k) % 2 == 0) ? term : -term;
                }
                T[n][k - 1] = acc;
            }
        }
    }
};

// phi^(k)(t0) = (k-1)! [alpha/(1-t0)^k + (-1)^k mu/t0^k], k = 2..K.
// Entries 0 and 1 of the result are unused (zero).
inline std::vector<double> phi_derivatives(const ScaledParameters& sp, double t0, int K) {
    if (t0 == 0.0 || t0 == 1.0) throw domain_error("phi derivatives undefined at t0 in {0,1}");
    std::vector<double> d(K + 1, 0.0);
    double fac = 1.0;
    double q1 = (1.0 - t0) * (1.0 - t0);
    double q2 = t0 * t0;
    for (int k = 2; k <= K; ++k) {
        fac *= k - 1;
        double sgn = k % 2 == 0 ? 1.0 : -1.0;
        d[k] = fac * (sp.alpha / q1 + sgn * sp.mu / q2);
        q1 *= 1.0 - t0;
        q2 *= t0;
    }
    return d;
}

// psi^(k)(mu) = (-1)^k (k-1)!/mu^(k-1) for psi(s) = s - mu ln s.
inline std::vector<double> psi_derivatives(double mu, int K) {
    if (mu == 0.0) throw domain_error("psi derivatives undefined at mu = 0");
    std::vector<double> d(K + 1, 0.0);
    double fac = 1.0;
    double mp = mu;
    for (int k = 2; k <= K; ++k) {
        fac *= k - 1;
        double sgn = k % 2 == 0 ? 1.0 : -1.0;
        d[k] = sgn * fac / mp;
        mp *= mu;
    }
    return d;
}

namespace detail {

// Derivative arrays rescaled by the substitutions t-t0 = t0*w, s-s0 = mu*x:
// Phi_k = phi^(k)(t0) t0^k/mu, Psi_k = psi^(k)(mu) mu^(k-1). Closed forms in
// (mu, tau) only; finite for either sign of mu, which is what makes one code
// path serve both orderings of a and b.
inline std::pair<std::vector<double>, std::vector<double>> scaled_derivative_arrays(double mu, double tau,
                                                                                    int K) {
    double theta = mu * tau / (1.0 - mu * tau);
    std::vector<double> phi(K + 1, 0.0), psi(K + 1, 0.0);
    double fac = 1.0;
    double thp = theta;
    for (int k = 2; k <= K; ++k) {
        fac *= k - 1;
        double sgn = k % 2 == 0 ? 1.0 : -1.0;
        phi[k] = fac * (sgn + (1.0 - tau) * thp);
        psi[k] = sgn * fac;
        thp *= theta;
    }
    return {std::move(phi), std::move(psi)};
}

// Coefficients of s(x) T'(x) / (T(1-T)) (M) or s(x) T'(x) / T (U), where
// s(x) = c0 + x and T is the t(s) series in the same variable x.
inline std::vector<double> integrand_core(Which which, double c0, const std::vector<double>& T,
                                          std::size_t order) {
    std::vector<double> s{c0, 1.0};
    std::vector<double> num = mul_raw(s, derivative_raw(T), order);
    std::vector<double> den(T.begin(), T.begin() + static_cast<long>(std::min(T.size(), order + 1)));
    if (which == Which::M) {
        std::vector<double> om(den.size());
        om[0] = 1.0 - den[0];
        for (std::size_t k = 1; k < den.size(); ++k) om[k] = -den[k];
        den = mul_raw(den, om, order);
    }
    return mul_raw(num, reciprocal_raw(den, order), order);
}

} // namespace detail

inline std::vector<double> integrand_series(Which which, const ScaledParameters& sp,
                                            const TruncatedSeries& t_series) {
    if (t_series.order() < 1) throw usage_error("t series must carry at least the linear term");
    std::vector<double> T = t_series.coeffs;
    if (T[0] == 0.0 && sp.mu != 0.0) T[0] = saddle(sp).t0; // offset form: restore the saddle value
    return detail::integrand_core(which, sp.mu, T, T.size() - 2);
}

// f_n = c_0^(n) by iterating c_m^(n+1) = m c_{m+1}^(n) + mu (m+1) c_{m+2}^(n)
// from c^(0) = a.
inline std::vector<double> f_from_a_recursive(const std::vector<double>& a, double mu, int N) {
    if (a.size() < static_cast<std::size_t>(2 * N + 1)) throw usage_error("need a_k through k = 2N");
    std::vector<double> f(N + 1, 0.0);
    std::vector<double> c = a;
    f[0] = c[0];
    for (int n = 1; n <= N; ++n) {
        std::vector<double> next(c.size() - 2);
        for (std::size_t m = 0; m < next.size(); ++m)
            next[m] = static_cast<double>(m) * c[m + 1] + mu * static_cast<double>(m + 1) * c[m + 2];
        c = std::move(next);
        f[n] = c[0];
    }
    return f;
}

// Same by the closed form f_n = sum_k T(n,k) mu^k a_{k+n}.
inline std::vector<double> f_from_a_stirling(const std::vector<double>& a, double mu, int N,
                                             const StirlingTable& tbl) {
    if (a.size() < static_cast<std::size_t>(2 * N + 1)) throw usage_error("need a_k through k = 2N");
    if (static_cast<int>(tbl.T.size()) - 1 < N) throw usage_error("Stirling table too small");
    std::vector<double> f(N + 1, 0.0);
    f[0] = a[0];
    for (int n = 1; n <= N; ++n) {
        double acc = 0.0;
        double mp = mu;
        for (int k = 1; k <= n; ++k) {
            acc += static_cast<double>(tbl.T[n][k - 1]) * mp * a[k + n];
            mp *= mu;
        }
        f[n] = acc;
    }
    return f;
}

namespace detail {

inline double closed_form_tilde(Which which, int n, double mu, double tau) {
    if (which == Which::M) {
        switch (n) {
            case 1: return f_tilde_1_closed(mu, tau);
            case 2: return f_tilde_2_closed(mu, tau);
            case 3: return f_tilde_3_closed(mu, tau);
            case 4: return f_tilde_4_closed(mu, tau);
        }
    } else {
        switch (n) {
            case 1: return p_tilde_1_closed(mu, tau);
            case 2: return p_tilde_2_closed(mu, tau);
            case 3: return p_tilde_3_closed(mu, tau);
            case 4: return p_tilde_4_closed(mu, tau);
        }
    }
    return 0.0;
}

} // namespace detail

inline CoefficientSet coefficient_set(Which which, const ScaledParameters& sp, int N) {
    if (N < 0 || N > MAX_TERMS) throw usage_error("term count outside [0,8]");
    SaddleData sd = saddle(sp);
    CoefficientSet cs;
    cs.mu = sp.mu;
    cs.beta = sp.beta;
    cs.tau = sd.tau;
    cs.which = which;

    double lead = which == Which::M ? sd.f0 : sd.p0;
    if (sp.mu == 0.0) {
        cs.t_series = {0.0, {0.0, sd.tau * sd.p0}};
        cs.a = {1.0};
        cs.f.assign(N + 1, 0.0);
        cs.f[0] = 1.0;
        cs.f_tilde = cs.f;
        return cs;
    }
    if (std::fabs(sp.mu) < SMALL_MU_THRESHOLD) {
        cs.t_series = {sp.mu, {sd.t0, sd.tau * sd.p0}};
        cs.a = {lead};
        cs.f_tilde.assign(N + 1, 0.0);
        cs.f_tilde[0] = 1.0;
        for (int n = 1; n <= std::min(N, 4); ++n)
            cs.f_tilde[n] = detail::closed_form_tilde(which, n, sp.mu, sd.tau);
        cs.f.resize(N + 1);
        for (int n = 0; n <= N; ++n) cs.f[n] = cs.f_tilde[n] * lead;
        return cs;
    }

    int K = 2 * N + 1;
    auto [phi, psi] = detail::scaled_derivative_arrays(sp.mu, sd.tau, K + 2);
    TruncatedSeries v = invert_transformation(phi, psi, K);
    std::vector<double> T(K + 1);
    T[0] = sd.t0;
    for (int k = 1; k <= K; ++k) T[k] = sd.t0 * v.coeffs[k];
    std::vector<double> A = detail::integrand_core(which, 1.0, T, K - 1);

    std::vector<double> a(A.size());
    std::vector<double> t_lit(K + 1);
    t_lit[0] = sd.t0;
    double mp = 1.0;
    for (int k = 0; k <= K; ++k) {
        if (k < static_cast<int>(A.size())) a[k] = A[k] / mp;
        t_lit[k] = T[k] / mp;
        mp *= sp.mu;
    }
    cs.t_series = {sp.mu, std::move(t_lit)};
    cs.a = std::move(a);
    cs.f = f_from_a_recursive(cs.a, sp.mu, N);
    cs.f_tilde.resize(N + 1);
    for (int n = 0; n <= N; ++n) cs.f_tilde[n] = cs.f[n] / cs.f[0];
    return cs;
}

} // namespace kummer
