#pragma once

#include <cmath>

#include "kummer/double_double.hpp"
#include "kummer/errors.hpp"

namespace kummer {

// ln(1+x) via 2 atanh(x/(2+x)) for |x| <= 1/2, plain log otherwise. The
// atanh form keeps full relative precision near x = 0 where the argument of
// the front factor ln(1 - mu*tau) suffers cancellation.
inline double log1p_stable(double x) {
    if (!(x > -1.0)) throw domain_error("log1p_stable requires x > -1");
    if (std::fabs(x) > 0.5) return std::log(1.0 + x);
    double z = x / (2.0 + x);
    double z2 = z * z;
    double sum = z;
    double term = z;
    for (int k = 3; k < 60; k += 2) {
        term *= z2;
        double contrib = term / k;
        sum += contrib;
        if (std::fabs(contrib) < 0x1p-60 * std::fabs(sum)) break;
    }
    return 2.0 * sum;
}

// ln Gamma(b) - ln Gamma(a), each term from the extended-precision log-gamma
// so the difference of two large values keeps ~16 correct digits.
inline double log_gamma_ratio(double b, double a) {
    if (!(a > 0.0) || !(b > 0.0)) throw domain_error("log_gamma_ratio requires positive arguments");
    if (a == b) return 0.0;
    return to_double(lgamma(b) - lgamma(a));
}

} // namespace kummer
