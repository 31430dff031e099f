#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "kummer/verify.hpp"

using kummer::Parameters;
using kummer::ResidualKind;
using kummer::ResidualReport;
using kummer::TableSelector;
using kummer::Which;

TEST_CASE("recurrence residuals land in the expected bands") {
    ResidualReport m = kummer::recurrence_residual(Which::M, {99.0, 500.0, 500.0}, 4);
    CHECK(m.kind == ResidualKind::recurrence_M);
    CHECK(m.a == 99.0);
    CHECK(m.b == 500.0);
    CHECK(m.z == 500.0);
    CHECK(m.N == 4);
    CHECK(m.residual <= 1e-12);

    ResidualReport u = kummer::recurrence_residual(Which::U, {299.0, 500.0, 500.0}, 2);
    CHECK(u.kind == ResidualKind::recurrence_U);
    CHECK(u.residual >= 1.8e-13);
    CHECK(u.residual <= 1.8e-11);

    // a = b mixes the exact mu = 0 evaluation with its neighbours
    CHECK(kummer::recurrence_residual(Which::M, {250.0, 250.0, 500.0}, 4).residual <= 1e-12);
    CHECK(kummer::recurrence_residual(Which::M, {40.0, 40.0, 100.0}, 4).residual <= 1e-12);
}

TEST_CASE("wronskian residuals") {
    CHECK(kummer::wronskian_residual({101.0, 101.0, 500.0}, 4).residual <= 1e-13);
    CHECK(kummer::wronskian_residual({501.0, 501.0, 500.0}, 4).residual <= 1e-12);

    double r = kummer::wronskian_residual({0.5, 0.7, 100.0}, 4).residual;
    CHECK(r >= 2e-12);
    CHECK(r <= 1e-10);

    CHECK(kummer::wronskian_residual({50.5, 100.7, 1.0}, 4).residual <= 1e-11);
}

TEST_CASE("residual does not depend on which member normalizes") {
    for (double a : {499.0, 501.0}) {
        const double b = 500.0, z = 500.0;
        const int N = 2;
        auto m1 = kummer::detail::mt(a + 1.0, b + 1.0, z, N);
        auto m2 = kummer::detail::mt(a, b, z, N);
        auto m3 = kummer::detail::mt(a + 1.0, b, z, N);

        double r1 = std::fabs((m1.sign * std::exp(m1.log - m3.log) +
                               (a / z) * m2.sign * std::exp(m2.log - m3.log)) *
                                  m3.sign -
                              1.0);
        double r2 = std::fabs(m3.sign * std::exp(m3.log - m1.log) -
                              (a / z) * m2.sign * std::exp(m2.log - m1.log) - m1.sign);
        CHECK(r2 <= 4.0 * r1 + 5e-15);
        CHECK(r1 <= 4.0 * r2 + 5e-15);
    }
}

TEST_CASE("residuals shrink as terms are added") {
    for (Which which : {Which::M, Which::U}) {
        for (double a : {99.0, 199.0, 299.0, 399.0, 499.0, 501.0, 601.0, 701.0, 801.0, 901.0}) {
            double r0 = kummer::recurrence_residual(which, {a, 500.0, 500.0}, 0).residual;
            double r1 = kummer::recurrence_residual(which, {a, 500.0, 500.0}, 1).residual;
            double r2 = kummer::recurrence_residual(which, {a, 500.0, 500.0}, 2).residual;
            CHECK(r1 <= 0.5 * r0 + 1e-15);
            CHECK(r2 <= r1 + 1e-13);
        }
    }
}

TEST_CASE("error_table layout") {
    std::vector<kummer::ErrorTable> t1 = kummer::error_table({});
    REQUIRE(t1.size() == 2);
    CHECK(t1[0].title == "recurrence-M");
    CHECK(t1[1].title == "recurrence-U");
    for (const auto& t : t1) {
        REQUIRE(t.columns.size() == 6);
        CHECK(t.columns[0] == "a");
        CHECK(t.columns[1] == "n0");
        CHECK(t.columns[5] == "n4");
        REQUIRE(t.rows.size() == 10);
        CHECK(t.rows[0][0] == 99.0);
        CHECK(t.rows[9][0] == 901.0);
        for (const auto& row : t.rows) REQUIRE(row.size() == 6);
    }
    CHECK(t1[0].rows[0][1] ==
          kummer::recurrence_residual(Which::M, {99.0, 500.0, 500.0}, 0).residual);

    TableSelector sel2;
    sel2.id = TableSelector::Id::table2;
    std::vector<kummer::ErrorTable> t2 = kummer::error_table(sel2);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].title == "wronskian");
    REQUIRE(t2[0].columns.size() == 6);
    CHECK(t2[0].columns[1] == "b101");
    CHECK(t2[0].columns[5] == "b901");
    REQUIRE(t2[0].rows.size() == 5);

    TableSelector sub;
    sub.a_list = {99.0, 199.0};
    sub.n_list = {2};
    std::vector<kummer::ErrorTable> ts = kummer::error_table(sub);
    REQUIRE(ts[0].columns.size() == 2);
    CHECK(ts[0].columns[1] == "n2");
    REQUIRE(ts[0].rows.size() == 2);
    REQUIRE(ts[0].rows[0].size() == 2);
}

TEST_CASE("moderate z keeps the wronskian identity tight") {
    TableSelector sel;
    sel.id = TableSelector::Id::table2;
    sel.z = 50.0;
    std::vector<kummer::ErrorTable> t = kummer::error_table(sel);
    for (const auto& row : t[0].rows)
        for (std::size_t j = 1; j < row.size(); ++j) CHECK(row[j] <= 1e-10);
}

TEST_CASE("renderers") {
    TableSelector sel;
    sel.a_list = {99.0};
    std::vector<kummer::ErrorTable> t = kummer::error_table(sel);
    std::string csv = kummer::render_csv(t[0]);
    CHECK(csv.rfind("a,n0,n1,n2,n3,n4\n", 0) == 0);
    CHECK(csv.find("99,") != std::string::npos);

    std::string text = kummer::render_text(t[0]);
    CHECK(text.rfind("recurrence-M\n", 0) == 0);
    CHECK(text.find("n4") != std::string::npos);

    TableSelector sel2;
    sel2.id = TableSelector::Id::table2;
    sel2.b_list = {101.0};
    sel2.a_list = {101.0};
    std::string csv2 = kummer::render_csv(kummer::error_table(sel2)[0]);
    CHECK(csv2.rfind("a,b101\n", 0) == 0);
}
