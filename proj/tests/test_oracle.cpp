#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kummer/double_double.hpp"
#include "kummer/errors.hpp"
#include "kummer/evaluation.hpp"
#include "kummer/oracle.hpp"

using kummer::dd;
using kummer::OracleResult;
using kummer::Parameters;

namespace {

// a M(a,b) U(a+1,b+1) + (a/b) M(a+1,b+1) U(a,b) = e^z Gamma(b) / (z^b Gamma(a)),
// evaluated fully in extended precision.
double wronski_identity_residual(double a, double b, double z) {
    OracleResult m = kummer::oracle_M({a, b, z});
    OracleResult m1 = kummer::oracle_M({a + 1.0, b + 1.0, z});
    OracleResult u = kummer::oracle_U({a, b, z});
    OracleResult u1 = kummer::oracle_U({a + 1.0, b + 1.0, z});
    dd rhs = dd(z) + kummer::lgamma(b) - kummer::lgamma(a) - dd(b) * log(dd(z));
    dd t1 = exp(log(dd(a)) + m.log_full + u1.log_full - rhs);
    dd t2 = exp(log(dd(a) / dd(b)) + m1.log_full + u.log_full - rhs);
    return std::fabs(to_double(t1 + t2 - 1.0));
}

} // namespace

TEST_CASE("oracle_M reference values") {
    OracleResult r = kummer::oracle_M({1.0, 1.0, 5.0});
    CHECK(to_double(abs(r.log_full - dd(5.0))) <= 1e-26);
    CHECK(std::fabs(r.value - std::exp(5.0)) <= 1e-14 * std::exp(5.0));

    // M(1,2,10) = (e^10 - 1)/10
    OracleResult s = kummer::oracle_M({1.0, 2.0, 10.0});
    CHECK(std::fabs(s.value - 2202.5465794806718) <= 1e-13 * 2202.5465794806718);

    OracleResult t = kummer::oracle_M({99.0, 500.0, 500.0});
    CHECK(std::fabs(t.log_magnitude - 154.884348261770440637065847213) <= 1e-12);

    OracleResult u = kummer::oracle_M({3.7, 5.2, 11.0});
    CHECK(std::fabs(u.log_magnitude - 9.09843351501925660730816758679) <= 1e-12);

    CHECK_THROWS_AS(kummer::oracle_M({1.0, 1.0, 5.0}, 29), kummer::usage_error);
    CHECK_THROWS_AS(kummer::oracle_M({0.0, 1.0, 5.0}), kummer::domain_error);
    CHECK_THROWS_AS(kummer::oracle_M({1.0, -1.0, 5.0}), kummer::domain_error);
    CHECK_THROWS_AS(kummer::oracle_M({1.0, 1.0, 0.0}), kummer::domain_error);
}

TEST_CASE("oracle_U reference values") {
    OracleResult r = kummer::oracle_U({2.0, 3.0, 10.0});
    CHECK(std::fabs(r.value - 0.01) <= 1e-13 * 0.01);
    CHECK(to_double(abs(r.log_full + 2.0 * log(dd(10.0)))) <= 1e-24);

    // U(1,1,1) = e E_1(1)
    OracleResult s = kummer::oracle_U({1.0, 1.0, 1.0});
    CHECK(std::fabs(s.log_magnitude - -0.516931959002045610865034743325) <= 1e-13);
    CHECK(std::fabs(s.value - 0.5963473623231940743410785) <= 1e-13 * 0.5963473623231940743410785);

    OracleResult t = kummer::oracle_U({130.0, 26.1, 100.0});
    CHECK(std::fabs(t.log_magnitude - -673.303560540912657659880377487) <= 5e-13);
    CHECK(std::fabs(t.value - 3.872389298555866468200017e-293) <= 1e-12 * 3.872389298555866468200017e-293);

    // a < 1 runs through the substituted endpoint panel
    OracleResult v = kummer::oracle_U({0.5, 1.7, 100.0});
    CHECK(std::fabs(v.log_magnitude - -2.30159149890491646158770758829) <= 1e-13);

    // small z pushes the truncation point past t = 1
    OracleResult w = kummer::oracle_U({0.5, 0.7, 0.5});
    CHECK(std::fabs(w.log_magnitude - -0.00623702744806893103517343384586) <= 1e-13);
    CHECK(std::fabs(w.value - 0.9937823824333390110853159) <= 1e-13 * 0.9937823824333390110853159);

    OracleResult x = kummer::oracle_U({3.7, 5.2, 11.0});
    CHECK(std::fabs(x.log_magnitude - -8.72927589347615279612798547201) <= 1e-13);

    CHECK_THROWS_AS(kummer::oracle_U({0.0, 1.0, 1.0}), kummer::domain_error);
    CHECK_THROWS_AS(kummer::oracle_U({1.0, 1.0, -1.0}), kummer::domain_error);
}

TEST_CASE("oracles satisfy the Wronskian identity in extended precision") {
    CHECK(wronski_identity_residual(2.0, 3.0, 10.0) <= 1e-25);
    CHECK(wronski_identity_residual(0.5, 0.7, 100.0) <= 1e-25);
    CHECK(wronski_identity_residual(99.0, 500.0, 500.0) <= 1e-25);
    CHECK(wronski_identity_residual(130.0, 25.1, 100.0) <= 1e-25);
    CHECK(wronski_identity_residual(3.0, 1000.0, 1.0) <= 1e-25);
    CHECK(wronski_identity_residual(5.0, 2.0, 800.0) <= 1e-25);
}

TEST_CASE("expansion tracks the oracle") {
    struct Gate {
        double a;
        double tol;
    };
    const Gate gates[]{{99.0, 2e-12}, {199.0, 4.6e-13}, {299.0, 1.1e-12}, {399.0, 3.9e-14},
                       {499.0, 4e-15}};
    for (const Gate& g : gates) {
        Parameters p{g.a, 500.0, 500.0};
        kummer::ExpansionResult e = kummer::eval_M(p, 4);
        OracleResult o = kummer::oracle_M(p);
        CHECK(std::fabs(e.log_magnitude - o.log_magnitude) <= g.tol);
    }

    kummer::ExpansionResult eu = kummer::eval_U({99.0, 500.0, 500.0}, 4);
    OracleResult ou = kummer::oracle_U({99.0, 501.0, 500.0});
    CHECK(std::fabs(eu.log_magnitude - ou.log_magnitude) <= 2e-12);

    // one term only: crude but sane
    kummer::ExpansionResult e0 = kummer::eval_M({99.0, 500.0, 500.0}, 0);
    OracleResult o0 = kummer::oracle_M({99.0, 500.0, 500.0});
    double err = std::fabs(std::expm1(e0.log_magnitude - o0.log_magnitude));
    CHECK(err >= 1e-6);
    CHECK(err <= 2e-3);
}
