#pragma once

// Self-consistency probes: three-term recurrence residuals and the
// Wronskian residual among contiguous scaled functions, plus the residual
// tables over the reference grids. Front factors here stay in plain double
// on purpose: the residuals are meant to measure the 16-digit working
// precision of the expansion machinery itself, and assembling the fronts in
// extended precision would report a different (smaller) quantity than the
// tables these grids reproduce.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/evaluation.hpp"

namespace kummer {

enum class ResidualKind { recurrence_M, recurrence_U, wronskian };

struct ResidualReport {
    ResidualKind kind = ResidualKind::wronskian;
    double a = 0.0, b = 0.0, z = 0.0;
    int N = 0;
    double residual = 0.0;
};

namespace detail {

struct ScaledValue {
    double sign;
    double log;
};

// M~ with literal arguments.
inline ScaledValue mt(double a, double b, double z, int N) {
    CoreEval c = eval_scaled_core(Which::M, a, b, z, N);
    return {static_cast<double>(c.sign), c.log_plain};
}

// U~ with literal arguments: U~(a,b,z) is the expansion at second parameter
// b-1, which may be <= 0; the core accepts that.
inline ScaledValue ut(double a, double b, double z, int N) {
    CoreEval c = eval_scaled_core(Which::U, a, b - 1.0, z, N);
    return {static_cast<double>(c.sign), c.log_plain};
}

} // namespace detail

// |(z M~(a+1,b+1,z) + a M~(a,b,z)) / (z M~(a+1,b,z)) - 1| for M;
// |(a U~(a+1,b,z) + z U~(a,b-1,z)) / (z U~(a,b,z)) - 1| for U.
inline ResidualReport recurrence_residual(Which which, const Parameters& p, int N) {
    scale(p);
    ResidualReport r;
    r.kind = which == Which::M ? ResidualKind::recurrence_M : ResidualKind::recurrence_U;
    r.a = p.a;
    r.b = p.b;
    r.z = p.z;
    r.N = N;
    if (which == Which::M) {
        auto m1 = detail::mt(p.a + 1.0, p.b + 1.0, p.z, N);
        auto m2 = detail::mt(p.a, p.b, p.z, N);
        auto m3 = detail::mt(p.a + 1.0, p.b, p.z, N);
        double lhs = m1.sign * std::exp(m1.log - m3.log) +
                     (p.a / p.z) * m2.sign * std::exp(m2.log - m3.log);
        r.residual = std::fabs(lhs * m3.sign - 1.0);
    } else {
        auto u1 = detail::ut(p.a + 1.0, p.b, p.z, N);
        auto u2 = detail::ut(p.a, p.b - 1.0, p.z, N);
        auto u3 = detail::ut(p.a, p.b, p.z, N);
        double lhs = (p.a / p.z) * u1.sign * std::exp(u1.log - u3.log) +
                     u2.sign * std::exp(u2.log - u3.log);
        r.residual = std::fabs(lhs * u3.sign - 1.0);
    }
    return r;
}

// |(a/z) M~(a,b,z) U~(a+1,b+1,z) + M~(a+1,b+1,z) U~(a,b,z) - 1|.
inline ResidualReport wronskian_residual(const Parameters& p, int N) {
    scale(p);
    auto m = detail::mt(p.a, p.b, p.z, N);
    auto u1 = detail::ut(p.a + 1.0, p.b + 1.0, p.z, N);
    auto m1 = detail::mt(p.a + 1.0, p.b + 1.0, p.z, N);
    auto u = detail::ut(p.a, p.b, p.z, N);
    double lhs = (p.a / p.z) * m.sign * u1.sign * std::exp(m.log + u1.log) +
                 m1.sign * u.sign * std::exp(m1.log + u.log);
    return {ResidualKind::wronskian, p.a, p.b, p.z, N, std::fabs(lhs - 1.0)};
}

struct TableSelector {
    enum class Id { table1, table2 };
    Id id = Id::table1;
    double z = 500.0;
    double b = 500.0;               // fixed b of the table1 grid
    std::vector<double> a_list;     // empty = grid default
    std::vector<double> b_list;     // table2 columns; empty = default
    std::vector<int> n_list;        // empty = default (0..4 / {4})
};

struct ErrorTable {
    std::string title;
    std::vector<std::string> columns;      // first column label, then data columns
    std::vector<std::vector<double>> rows; // rows[i][0] = a; then residuals
};

inline std::vector<ErrorTable> error_table(const TableSelector& sel) {
    std::vector<ErrorTable> out;
    if (sel.id == TableSelector::Id::table1) {
        std::vector<double> as = sel.a_list;
        if (as.empty()) as = {99, 199, 299, 399, 499, 501, 601, 701, 801, 901};
        std::vector<int> ns = sel.n_list;
        if (ns.empty()) ns = {0, 1, 2, 3, 4};
        for (Which which : {Which::M, Which::U}) {
            ErrorTable t;
            t.title = which == Which::M ? "recurrence-M" : "recurrence-U";
            t.columns.push_back("a");
            for (int n : ns) t.columns.push_back("n" + std::to_string(n));
            for (double a : as) {
                std::vector<double> row{a};
                for (int n : ns)
                    row.push_back(recurrence_residual(which, {a, sel.b, sel.z}, n).residual);
                t.rows.push_back(std::move(row));
            }
            out.push_back(std::move(t));
        }
    } else {
        std::vector<double> as = sel.a_list;
        std::vector<double> bs = sel.b_list;
        if (as.empty()) as = {101, 301, 501, 701, 901};
        if (bs.empty()) bs = {101, 301, 501, 701, 901};
        int N = sel.n_list.empty() ? 4 : sel.n_list.front();
        ErrorTable t;
        t.title = "wronskian";
        t.columns.push_back("a");
        for (double b : bs) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "b%g", b);
            t.columns.push_back(buf);
        }
        for (double a : as) {
            std::vector<double> row{a};
            for (double b : bs) row.push_back(wronskian_residual({a, b, sel.z}, N).residual);
            t.rows.push_back(std::move(row));
        }
        out.push_back(std::move(t));
    }
    return out;
}

inline std::string render_csv(const ErrorTable& t) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) s += ',';
        s += t.columns[i];
    }
    s += '\n';
    char buf[40];
    for (const auto& row : t.rows) {
        std::snprintf(buf, sizeof buf, "%g", row[0]);
        s += buf;
        for (std::size_t j = 1; j < row.size(); ++j) {
            std::snprintf(buf, sizeof buf, ",%.1e", row[j]);
            s += buf;
        }
        s += '\n';
    }
    return s;
}

inline std::string render_text(const ErrorTable& t) {
    std::string s = t.title + "\n";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%8s", t.columns[0].c_str());
    s += buf;
    for (std::size_t i = 1; i < t.columns.size(); ++i) {
        std::snprintf(buf, sizeof buf, " %9s", t.columns[i].c_str());
        s += buf;
    }
    s += '\n';
    for (const auto& row : t.rows) {
        std::snprintf(buf, sizeof buf, "%8g", row[0]);
        s += buf;
        for (std::size_t j = 1; j < row.size(); ++j) {
            std::snprintf(buf, sizeof buf, " %9.1e", row[j]);
            s += buf;
        }
        s += '\n';
    }
    return s;
}

} // namespace kummer
