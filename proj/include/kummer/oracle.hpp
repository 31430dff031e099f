#pragma once

// Implementation-independent references, converged in double-double:
// oracle_M sums the convergent Kummer series, oracle_U integrates the
// Laplace representation U(a,b,z) = 1/Gamma(a) int_0^inf e^{-zt} t^{a-1}
// (1+t)^{b-a-1} dt with tanh-sinh panels. Both return logs; accuracy is
// capped by the double-double arithmetic at ~31 digits.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "kummer/double_double.hpp"
#include "kummer/errors.hpp"
#include "kummer/scaling.hpp"

namespace kummer {

struct OracleResult {
    double value = 0.0;         // 0 when outside double range
    double log_magnitude = 0.0; // ln(result)
    dd log_full;                // same, extended precision
};

namespace detail {

inline OracleResult finish_oracle(dd log_full) {
    OracleResult r;
    r.log_full = log_full;
    r.log_magnitude = to_double(log_full);
    if (r.log_magnitude > -745.1 && r.log_magnitude < 709.78) r.value = to_double(exp(log_full));
    return r;
}

struct PanelResult {
    dd sum;            // h * sum of w * exp(logf - gmax)
    double gmax = 0.0; // log offset used for this panel
};

// Tanh-sinh quadrature of exp(logf) over (c,d). Nodes are placed via the
// complement xc = 1 - |x| = 2 e^{-2theta}/(1 + e^{-2theta}), theta =
// (pi/2) sinh(q), so endpoint distances keep full dd precision; that is
// what resolves the t^{a-1} endpoint behavior and edge peaks. Levels halve
// h and add the odd nodes; |theta| <= 45 bounds the node set (beyond it
// contributions are below dd noise).
inline PanelResult tanh_sinh_panel(const std::function<dd(dd)>& logf, dd c, dd d, int digits) {
    dd half = (d - c) * 0.5;
    PanelResult pr;

    double gmax = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 8; ++i) {
        dd t = c + half * (0.04 + 0.24 * i);
        gmax = std::max(gmax, logf(t).hi);
    }
    gmax = std::max(gmax, logf(c + half * 1e-6).hi);
    gmax = std::max(gmax, logf(d - half * 1e-6).hi);
    pr.gmax = gmax;
    dd gmax_dd(gmax);

    const double theta_cut = 45.0;
    auto node_pair = [&](double q) -> dd {
        dd eq = exp(dd(q));
        dd emq = exp(dd(-q));
        dd sinh_q = (eq - emq) * 0.5;
        dd cosh_q = (eq + emq) * 0.5;
        dd theta = DD_HALF_PI * sinh_q;
        dd em2t = exp(-2.0 * theta);
        dd xc = 2.0 * em2t / (1.0 + em2t);
        dd w = DD_HALF_PI * cosh_q * (xc * (2.0 - xc)); // sech^2(theta) = xc(2-xc)
        dd acc = exp(logf(c + half * xc) - gmax_dd);
        if (q > 0.0) acc = acc + exp(logf(d - half * xc) - gmax_dd);
        return w * acc;
    };
    auto theta_of = [](double q) { return 0.5 * M_PI * std::sinh(q); };

    double tol = std::max(std::pow(10.0, -(digits + 2)), 1e-29);
    const int max_level = 10;
    dd S;
    double last_delta = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int level = 0; level <= max_level; ++level) {
        double h = std::ldexp(1.0, -level);
        dd acc;
        if (level == 0) {
            acc = node_pair(0.0);
            for (int k = 1; theta_of(k * h) <= theta_cut; ++k) acc = acc + node_pair(k * h);
            S = acc * h;
            continue;
        }
        for (int k = 0; theta_of((2 * k + 1) * h) <= theta_cut; ++k)
            acc = acc + node_pair((2 * k + 1) * h);
        dd S_new = S * 0.5 + acc * h;
        last_delta = std::fabs((S_new - S).hi);
        S = S_new;
        if (level >= 3 && last_delta <= tol * std::fabs(S.hi)) {
            converged = true;
            break;
        }
    }
    if (!converged && !(last_delta <= 1e-15 * std::fabs(S.hi)))
        throw numerical_error("tanh-sinh quadrature did not converge");
    pr.sum = S;
    return pr;
}

} // namespace detail

inline OracleResult oracle_M(const Parameters& p, int precision_digits = 30) {
    if (precision_digits < 30) throw usage_error("oracle precision below 30 digits");
    scale(p); // validates positivity
    dd term(1.0), sum(1.0);
    dd zd(p.z);
    long scale_pow = 0;
    double stop = std::pow(10.0, -(precision_digits + 2));
    const int kmax = 100000;
    for (int k = 1;; ++k) {
        if (k > kmax) throw numerical_error("Kummer series did not converge");
        double km1 = k - 1.0;
        term = term * ((dd(p.a) + km1) / (dd(p.b) + km1)) * zd / static_cast<double>(k);
        sum = sum + term;
        if (sum.hi > 1e300) {
            sum = {std::ldexp(sum.hi, -512), std::ldexp(sum.lo, -512)};
            term = {std::ldexp(term.hi, -512), std::ldexp(term.lo, -512)};
            scale_pow += 512;
        }
        if (k > p.z && std::fabs(term.hi) < stop * sum.hi) break;
    }
    return detail::finish_oracle(log(sum) + DD_LN2 * static_cast<double>(scale_pow));
}

inline OracleResult oracle_U(const Parameters& p, int precision_digits = 30) {
    double a = p.a, b = p.b, z = p.z;
    if (!(std::isfinite(a) && a > 0.0) || !(std::isfinite(z) && z > 0.0) || !std::isfinite(b))
        throw domain_error("oracle_U requires a > 0, z > 0, b finite");
    int digits = precision_digits;

    dd zd(z);
    dd am1 = dd(a) - 1.0;
    dd bam1 = dd(b) - dd(a) - 1.0;
    auto logf = [=](dd t) {
        dd r = -(zd * t);
        if (a != 1.0) r = r + am1 * log(t);
        r = r + bam1 * log1p(t);
        return r;
    };

    // Interior maximum of the exponent from z t^2 + (z-b+2) t - (a-1) = 0.
    double ca = z - b + 2.0;
    double disc = ca * ca + 4.0 * z * (a - 1.0);
    double tstar = disc > 0.0 ? (-ca + std::sqrt(disc)) / (2.0 * z) : 0.0;
    double tref = tstar > 0.0 ? tstar : 1.0 / z;

    auto L_plain = [&](double t) {
        double r = -z * t;
        if (a != 1.0) r += (a - 1.0) * std::log(t);
        return r + (b - a - 1.0) * std::log1p(t);
    };
    double drop = (digits + 10) * std::log(10.0) + 10.0;
    double target = L_plain(tref) - drop;
    double T = tref + drop / z;
    for (int it = 0; it < 60; ++it) {
        double deriv = -z + (a - 1.0) / T + (b - a - 1.0) / (1.0 + T);
        if (!(deriv < 0.0)) {
            T *= 2.0;
            continue;
        }
        double Tn = T - (L_plain(T) - target) / deriv;
        if (!(Tn > tref)) Tn = 0.5 * (T + tref);
        if (!std::isfinite(Tn)) break;
        double move = std::fabs(Tn - T);
        T = Tn;
        if (move <= 1e-10 * T) break;
    }

    struct Panel {
        dd c, d;
        std::function<dd(dd)> f;
    };
    std::vector<Panel> panels;
    if (a < 1.0) {
        // Substitute t = u^{1/a} on (0, min(1,T)): the t^{a-1} endpoint
        // factor becomes the constant 1/a.
        dd ainv = 1.0 / dd(a);
        auto logf_sub = [=](dd u) {
            dd t = exp(log(u) * ainv);
            return -(zd * t) + bam1 * log1p(t) - log(dd(a));
        };
        double t1 = std::min(1.0, T);
        panels.push_back({dd(0.0), exp(log(dd(t1)) * dd(a)), logf_sub});
        if (T > 1.0) panels.push_back({dd(1.0), dd(T), logf});
    } else if (tstar > 0.0 && tstar < T) {
        panels.push_back({dd(0.0), dd(tstar), logf});
        panels.push_back({dd(tstar), dd(T), logf});
    } else {
        panels.push_back({dd(0.0), dd(T), logf});
    }

    std::vector<detail::PanelResult> results;
    double G = -std::numeric_limits<double>::infinity();
    for (const Panel& pn : panels) {
        results.push_back(detail::tanh_sinh_panel(pn.f, pn.c, pn.d, digits));
        G = std::max(G, results.back().gmax);
    }
    dd total;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        dd half = (panels[i].d - panels[i].c) * 0.5;
        total = total + results[i].sum * half * exp(dd(results[i].gmax) - G);
    }
    return detail::finish_oracle(dd(G) + log(total) - lgamma(a));
}

} // namespace kummer
