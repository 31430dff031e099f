#pragma once

#include <cmath>
#include <vector>

#include "kummer/coefficients.hpp"
#include "kummer/double_double.hpp"
#include "kummer/errors.hpp"
#include "kummer/scaling.hpp"

namespace kummer {

struct ExpansionResult {
    double value = 0.0;          // signed zero when not representable
    double log_magnitude = 0.0;  // ln|result|
    int sign = 1;
    int terms_used = 0;
    double last_term_ratio = 0.0; // |last summed term| / |partial sum|
    bool domain_ok = true;        // domain_check at the default rho
    Status status = Status::ok;
};

// Terms f~_n/z^n carry lambda = b-a, not mu, as the effective expansion
// variable of their rounding noise: the pipeline coefficient error grows
// like eps/mu^n while z^n shrinks it back, leaving ~eps/lambda^n. Below
// |lambda| = 4 that floor exceeds the 1e-13 regime the tables probe, so the
// evaluator switches to the stored closed forms (exact in mu), which are
// available through n = 4; beyond that the omitted terms are below double
// noise in this band.
inline constexpr double EVAL_BAND_LAMBDA = 4.0;

namespace detail {

struct CoreEval {
    int sign = 1;
    double log_plain = 0.0; // front factors in plain double
    dd log_full;            // front factors in double-double
    int terms_used = 0;
    double last_term_ratio = 0.0;
    bool domain_ok = true;
};

// Shared engine for the scaled functions. b_exp is the expansion's own
// second parameter and may be <= 0: the residual identities need the
// literal-argument function U~(a,b,z), whose expansion parameter is b-1.
// tau stays positive and the quadratic saddle derivative stays positive for
// any real beta as long as alpha > 0, so the machinery is well defined.
inline CoreEval eval_scaled_core(Which which, double a, double b_exp, double z, int N) {
    if (N < 0 || N > MAX_TERMS) throw usage_error("term count outside [0,8]");
    if (!(std::isfinite(a) && a > 0.0) || !(std::isfinite(z) && z > 0.0) || !std::isfinite(b_exp))
        throw domain_error("require a > 0, z > 0, b finite");
    ScaledParameters sp{a / z, b_exp / z, (b_exp - a) / z, b_exp - a};
    SaddleData sd = saddle(sp);

    CoreEval out;
    out.domain_ok = domain_check(sp);

    std::vector<double> ft(N + 1, 0.0);
    ft[0] = 1.0;
    if (sp.mu == 0.0) {
        out.terms_used = 1;
    } else if (std::fabs(sp.lambda) <= EVAL_BAND_LAMBDA) {
        int top = std::min(N, 4);
        for (int n = 1; n <= top; ++n) ft[n] = closed_form_tilde(which, n, sp.mu, sd.tau);
        out.terms_used = top + 1;
    } else {
        int K = 2 * N + 1;
        auto [phi, psi] = scaled_derivative_arrays(sp.mu, sd.tau, K + 2);
        TruncatedSeries v = invert_transformation(phi, psi, K);
        std::vector<double> T(K + 1);
        T[0] = sd.t0;
        for (int k = 1; k <= K; ++k) T[k] = sd.t0 * v.coeffs[k];
        std::vector<double> A = integrand_core(which, 1.0, T, K - 1);
        std::vector<double> acoef(A.size());
        double mp = 1.0;
        for (std::size_t k = 0; k < A.size(); ++k) {
            acoef[k] = A[k] / mp;
            mp *= sp.mu;
        }
        std::vector<double> f = f_from_a_recursive(acoef, sp.mu, N);
        for (int n = 1; n <= N; ++n) ft[n] = f[n] / f[0];
        out.terms_used = N + 1;
    }

    // Sum smallest terms first.
    double zp = std::pow(z, N);
    double sum = 0.0;
    double top_term = 0.0;
    for (int n = N; n >= 0; --n) {
        double c = ft[n];
        if (which == Which::U && (n & 1)) c = -c;
        double term = c / zp;
        if (n == N) top_term = term;
        sum += term;
        zp /= z;
    }
    out.sign = sum < 0.0 ? -1 : 1;
    out.last_term_ratio = sum != 0.0 ? std::fabs(top_term / sum) : 0.0;

    double asign = which == Which::M ? -1.0 : 1.0;
    double lead = which == Which::M ? sd.f0 : sd.p0;
    out.log_plain = asign * z * sd.A + std::log(lead) + std::log(std::fabs(sum));

    // Rebuild the front factors in double-double: at z*A ~ 1e3 the plain
    // assembly alone costs ~1e-13 of the final value.
    dd zd(z);
    dd alpha = dd(a) / zd;
    dd beta = dd(b_exp) / zd;
    dd mu = (dd(b_exp) - dd(a)) / zd;
    dd disc = (beta - 1.0) * (beta - 1.0) + 4.0 * alpha;
    dd tau = 2.0 / (beta + 1.0 + sqrt(disc));
    dd t0 = mu * tau;
    dd A = mu * (tau - log(tau) - 1.0) - alpha * log1p(-t0);
    dd f0 = 1.0 / sqrt(beta * mu * tau * tau - 2.0 * t0 + 1.0);
    dd lead_dd = which == Which::M ? f0 : (1.0 - t0) * f0;
    out.log_full = asign * (zd * A) + log(lead_dd) + log(dd(std::fabs(sum)));
    return out;
}

inline ExpansionResult finish(const CoreEval& core, dd log_total) {
    ExpansionResult r;
    r.sign = core.sign;
    r.terms_used = core.terms_used;
    r.last_term_ratio = core.last_term_ratio;
    r.domain_ok = core.domain_ok;
    r.log_magnitude = to_double(log_total);
    if (r.log_magnitude > 709.78) {
        r.status = Status::overflow;
        r.value = std::copysign(0.0, core.sign);
    } else if (r.log_magnitude < -745.1) {
        r.status = Status::underflow;
        r.value = std::copysign(0.0, core.sign);
    } else {
        r.value = core.sign * to_double(exp(log_total));
        r.status = Status::ok;
    }
    return r;
}

} // namespace detail

inline ExpansionResult eval_M_scaled(const Parameters& p, int N) {
    scale(p); // validates
    auto core = detail::eval_scaled_core(Which::M, p.a, p.b, p.z, N);
    return detail::finish(core, core.log_full);
}

// Evaluates U~(a, b+1, z): the second argument of the underlying U is p.b+1.
inline ExpansionResult eval_U_scaled(const Parameters& p, int N) {
    scale(p);
    auto core = detail::eval_scaled_core(Which::U, p.a, p.b, p.z, N);
    return detail::finish(core, core.log_full);
}

inline ExpansionResult eval_M(const Parameters& p, int N) {
    scale(p);
    auto core = detail::eval_scaled_core(Which::M, p.a, p.b, p.z, N);
    dd log_total = dd(p.z) + lgamma(p.b) - lgamma(p.a) + (dd(p.a) - dd(p.b)) * log(dd(p.z)) + core.log_full;
    return detail::finish(core, log_total);
}

// U(a, b+1, z) = z^{-a} U~(a, b+1, z).
inline ExpansionResult eval_U(const Parameters& p, int N) {
    scale(p);
    auto core = detail::eval_scaled_core(Which::U, p.a, p.b, p.z, N);
    dd log_total = core.log_full - dd(p.a) * log(dd(p.z));
    return detail::finish(core, log_total);
}

} // namespace kummer
