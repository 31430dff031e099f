#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kummer/coefficients.hpp"
#include "kummer/errors.hpp"
#include "kummer/evaluation.hpp"
#include "kummer/oracle.hpp"
#include "kummer/verify.hpp"

namespace kummer {

struct CliConfig {
    std::string subcommand;
    double a = 1.0, b = 1.0, z = 1.0;
    Which which = Which::M;
    int terms = 4; // overridable via KUMMER_TERMS
    bool scaled = false;
    std::string format = "text";
    double rho = 0.8;
    int precision_digits = 30;
    std::string table_id = "table1";
};

namespace detail {

inline const char* kind_name(ResidualKind k) {
    switch (k) {
        case ResidualKind::recurrence_M: return "recurrence-M";
        case ResidualKind::recurrence_U: return "recurrence-U";
        default: return "wronskian";
    }
}

inline nlohmann::json eval_json(const ExpansionResult& r) {
    return {{"value", r.value},
            {"log_magnitude", r.log_magnitude},
            {"sign", r.sign},
            {"terms_used", r.terms_used},
            {"last_term_ratio", r.last_term_ratio},
            {"domain_ok", r.domain_ok}};
}

inline void print_eval_text(std::ostream& out, const ExpansionResult& r) {
    nlohmann::json jv = r.value, jl = r.log_magnitude, jt = r.last_term_ratio;
    out << "value           = " << jv.dump() << "\n"
        << "log_magnitude   = " << jl.dump() << "\n"
        << "sign            = " << r.sign << "\n"
        << "terms_used      = " << r.terms_used << "\n"
        << "last_term_ratio = " << jt.dump() << "\n"
        << "domain_ok       = " << (r.domain_ok ? "true" : "false") << "\n"
        << "status          = " << to_string(r.status) << "\n";
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    std::string which_str = "m";

    CLI::App app{"Kummer functions M(a,b,z) and U(a,b+1,z) by uniform asymptotic expansion"};
    app.require_subcommand(1);

    auto add_point = [&](CLI::App* sub) {
        sub->add_option("--a", cfg.a, "parameter a > 0")->required();
        sub->add_option("--b", cfg.b, "parameter b > 0 (for --which u this is the b of U(a,b+1,z))")
            ->required();
        sub->add_option("--z", cfg.z, "argument z > 0")->required();
        sub->add_option("--terms", cfg.terms, "number of correction terms N, 0..8")
            ->envname("KUMMER_TERMS");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate M or U at a point");
    add_point(eval);
    eval->add_option("--which", which_str, "function: m or u")->check(CLI::IsMember({"m", "u", "M", "U"}));
    eval->add_flag("--scaled", cfg.scaled, "return the scaled function (M~ or U~)");
    eval->add_option("--rho", cfg.rho, "domain-check threshold for t0");
    add_format(eval);

    CLI::App* coeffs = app.add_subcommand("coeffs", "dump the expansion coefficient set");
    add_point(coeffs);
    coeffs->add_option("--which", which_str, "function: m or u")
        ->check(CLI::IsMember({"m", "u", "M", "U"}));
    add_format(coeffs);

    CLI::App* check = app.add_subcommand("check", "recurrence and Wronskian residuals at a point");
    add_point(check);
    add_format(check);

    CLI::App* table = app.add_subcommand("table", "reproduce the residual reference tables");
    table->add_option("--id", cfg.table_id, "table1 or table2")
        ->check(CLI::IsMember({"table1", "table2"}));
    table->add_option("--z", cfg.z, "override z (default 500)");
    add_format(table);

    try {
        // CLI11's vector overload consumes a reversed argument list.
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    cfg.which = (which_str == "u" || which_str == "U") ? Which::U : Which::M;

    try {
        if (eval->parsed()) {
            Parameters p{cfg.a, cfg.b, cfg.z};
            ExpansionResult r;
            if (cfg.scaled)
                r = cfg.which == Which::M ? eval_M_scaled(p, cfg.terms) : eval_U_scaled(p, cfg.terms);
            else
                r = cfg.which == Which::M ? eval_M(p, cfg.terms) : eval_U(p, cfg.terms);
            r.domain_ok = domain_check(scale(p), cfg.rho);
            if (cfg.format == "json")
                out << detail::eval_json(r).dump(2) << "\n";
            else
                detail::print_eval_text(out, r);
        } else if (coeffs->parsed()) {
            Parameters p{cfg.a, cfg.b, cfg.z};
            CoefficientSet cs = coefficient_set(cfg.which, scale(p), cfg.terms);
            nlohmann::json j{{"mu", cs.mu},
                             {"beta", cs.beta},
                             {"tau", cs.tau},
                             {"which", cs.which == Which::M ? "M" : "U"},
                             {"f", cs.f},
                             {"f_tilde", cs.f_tilde}};
            if (cfg.format == "json") {
                out << j.dump(2) << "\n";
            } else {
                out << "mu      = " << nlohmann::json(cs.mu).dump() << "\n"
                    << "beta    = " << nlohmann::json(cs.beta).dump() << "\n"
                    << "tau     = " << nlohmann::json(cs.tau).dump() << "\n"
                    << "which   = " << (cs.which == Which::M ? "M" : "U") << "\n"
                    << "f       = " << nlohmann::json(cs.f).dump() << "\n"
                    << "f_tilde = " << nlohmann::json(cs.f_tilde).dump() << "\n";
            }
        } else if (check->parsed()) {
            Parameters p{cfg.a, cfg.b, cfg.z};
            std::vector<ResidualReport> reports{recurrence_residual(Which::M, p, cfg.terms),
                                                recurrence_residual(Which::U, p, cfg.terms),
                                                wronskian_residual(p, cfg.terms)};
            if (cfg.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : reports)
                    arr.push_back({{"kind", detail::kind_name(r.kind)},
                                   {"a", r.a},
                                   {"b", r.b},
                                   {"z", r.z},
                                   {"N", r.N},
                                   {"residual", r.residual}});
                out << arr.dump(2) << "\n";
            } else {
                char buf[160];
                for (const auto& r : reports) {
                    std::snprintf(buf, sizeof buf, "%-12s a=%g b=%g z=%g N=%d residual=%.3e\n",
                                  detail::kind_name(r.kind), r.a, r.b, r.z, r.N, r.residual);
                    out << buf;
                }
            }
        } else if (table->parsed()) {
            TableSelector sel;
            sel.id = cfg.table_id == "table2" ? TableSelector::Id::table2 : TableSelector::Id::table1;
            if (table->count("--z") > 0) sel.z = cfg.z;
            auto tables = error_table(sel);
            if (cfg.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& t : tables)
                    arr.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& t : tables) {
                    out << (cfg.format == "csv" ? render_csv(t) : render_text(t));
                    if (&t != &tables.back()) out << "\n";
                }
            }
        }
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        err << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace kummer
