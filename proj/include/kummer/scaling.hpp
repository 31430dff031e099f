#pragma once

#include <cmath>

#include "kummer/errors.hpp"
#include "kummer/stable.hpp"

namespace kummer {

struct Parameters {
    double a = 0.0;
    double b = 0.0;
    double z = 0.0;
};

struct ScaledParameters {
    double alpha = 0.0;  // a/z
    double beta = 0.0;   // b/z
    double mu = 0.0;     // (b-a)/z
    double lambda = 0.0; // b-a
};

struct SaddleData {
    double t0 = 0.0;  // saddle point, carries the sign of mu
    double tau = 0.0; // t0/mu, finite and positive at mu = 0
    double A = 0.0;   // phase
    double f0 = 0.0;  // leading amplitude, M expansion
    double p0 = 0.0;  // leading amplitude, U expansion
};

inline ScaledParameters scale(const Parameters& p) {
    if (!(std::isfinite(p.a) && std::isfinite(p.b) && std::isfinite(p.z)) ||
        !(p.a > 0.0 && p.b > 0.0 && p.z > 0.0))
        throw domain_error("parameters must be finite and positive");
    return {p.a / p.z, p.b / p.z, (p.b - p.a) / p.z, p.b - p.a};
}

// tau from the quotient form only; t0 = mu*tau keeps full precision as
// mu -> 0, where the subtractive root would cancel.
inline SaddleData saddle(const ScaledParameters& sp) {
    double disc = (sp.beta - 1.0) * (sp.beta - 1.0) + 4.0 * sp.alpha;
    if (!(disc > 0.0)) throw numerical_error("saddle discriminant not positive: invariant violation");
    double tau = 2.0 / (sp.beta + 1.0 + std::sqrt(disc));
    double t0 = sp.mu * tau;
    if (t0 >= 1.0) throw domain_error("saddle at or beyond t=1");
    double A = sp.mu * (tau - std::log(tau) - 1.0) - sp.alpha * log1p_stable(-t0);
    double f0 = 1.0 / std::sqrt(sp.beta * sp.mu * tau * tau - 2.0 * t0 + 1.0);
    double p0 = (1.0 - t0) * f0;
    return {t0, tau, A, f0, p0};
}

// alpha >= rho^2 - rho + (1-rho) beta, in the factored form (1-rho)(beta-rho)
// whose rounding keeps the boundary case on the accepting side.
inline bool domain_check(const ScaledParameters& sp, double rho = 0.8) {
    if (!(rho > 0.0 && rho < 1.0)) throw domain_error("rho must lie in (0,1)");
    return sp.alpha >= (1.0 - rho) * (sp.beta - rho);
}

} // namespace kummer
