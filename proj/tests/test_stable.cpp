#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kummer/errors.hpp"
#include "kummer/stable.hpp"

TEST_CASE("log1p_stable small arguments") {
    CHECK(kummer::log1p_stable(0.0) == 0.0);

    // ln(1+1e-12) = 1e-12 - 5e-25 + O(1e-37)
    CHECK(std::fabs(kummer::log1p_stable(1e-12) - (1e-12 - 5e-25)) < 1e-26);

    CHECK(std::fabs(kummer::log1p_stable(0.5) - 0.4054651081081644) < 1e-15);
    CHECK(std::fabs(kummer::log1p_stable(-0.5) - std::log(0.5)) < 5e-16);
}

TEST_CASE("log1p_stable large arguments and domain") {
    // above the series cutoff this is the plain logarithm
    CHECK(kummer::log1p_stable(0.75) == std::log(1.75));
    CHECK(kummer::log1p_stable(9.0) == std::log(10.0));

    CHECK_THROWS_AS(kummer::log1p_stable(-1.0), kummer::domain_error);
    CHECK_THROWS_AS(kummer::log1p_stable(-1.5), kummer::domain_error);
}

TEST_CASE("log_gamma_ratio") {
    CHECK(kummer::log_gamma_ratio(7.25, 7.25) == 0.0);
    CHECK(std::fabs(kummer::log_gamma_ratio(2.0, 1.0)) < 1e-25);

    // ln G(500) - ln G(99)
    CHECK(std::fabs(kummer::log_gamma_ratio(500.0, 99.0) - 2250.5767648422931) < 5e-12);

    // ln G(1) - ln G(3) = -ln 2
    CHECK(std::fabs(kummer::log_gamma_ratio(1.0, 3.0) + std::log(2.0)) < 1e-14);

    CHECK_THROWS_AS(kummer::log_gamma_ratio(0.0, 1.0), kummer::domain_error);
    CHECK_THROWS_AS(kummer::log_gamma_ratio(1.0, -2.0), kummer::domain_error);
}
