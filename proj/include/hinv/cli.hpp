#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hinv/catalog.hpp"
#include "hinv/constraints.hpp"
#include "hinv/heisenberg.hpp"
#include "hinv/io.hpp"

namespace hinv {
namespace cli {

// exit codes: 0 all checks pass, 1 a check failed, 2 input/parse error
constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

namespace detail {

inline std::map<std::string, Rational> parse_param_flags(const std::vector<std::string>& flags) {
    std::map<std::string, Rational> out;
    for (const auto& f : flags) {
        auto eq = f.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--param expects name=value, got: " + f);
        out[f.substr(0, eq)] = parse_rational(f.substr(eq + 1));
    }
    return out;
}

inline std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json read_json(const std::string& path) {
    return json::parse(read_text(path));  // throws json::parse_error
}

inline void print_bivector_text(const Bivector& B, std::ostream& out) {
    out << "n = " << B.n() << "\n";
    if (!B.space().params().empty()) {
        out << "params =";
        for (const auto& p : B.space().params()) out << " " << p;
        out << "\n";
    }
    for (const auto& [ij, p] : B.upper_entries())
        out << "P[" << ij.first << "][" << ij.second << "] = " << p.str() << "\n";
}

inline void print_report(const VerificationReport& r, std::ostream& out) {
    out << r.check << ": " << (r.pass ? "pass" : "FAIL");
    if (!r.pass && r.witness) {
        out << " at (";
        for (std::size_t i = 0; i < r.witness->indices.size(); ++i)
            out << (i ? "," : "") << r.witness->indices[i];
        out << "): " << r.witness->value.str();
    }
    out << "\n";
}

inline json report_to_json(const VerificationReport& r) {
    json j{{"check", r.check}, {"pass", r.pass}};
    if (r.witness) {
        j["witness"] = {{"indices", r.witness->indices}, {"poly", r.witness->value.str()}};
    }
    return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heisenberg-invariant polynomial Poisson structures: "
                 "construction, verification, and classification"};
    app.require_subcommand(1);

    // catalog
    std::string cat_name, cat_format = "text";
    std::vector<std::string> cat_params;
    auto* cat = app.add_subcommand("catalog", "emit a named structure");
    cat->add_option("--name", cat_name, "entry name (q3, q4, q51, q52, linear5, q6sum, h3cubic)")
        ->required();
    cat->add_option("--param", cat_params, "parameter value name=p/q (repeatable)");
    cat->add_option("--format", cat_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // verify
    std::string ver_input, ver_checks = "jacobi,sigma,tau,unimodular", ver_casimir,
                ver_format = "text";
    auto* ver = app.add_subcommand("verify", "run checks on a bivector JSON file");
    ver->add_option("--input", ver_input, "bivector JSON file, or - for stdin")->required();
    ver->add_option("--checks", ver_checks, "comma list from jacobi,sigma,tau,unimodular");
    ver->add_option("--casimir", ver_casimir, "file with a polynomial to test as a Casimir");
    ver->add_option("--format", ver_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // constraints
    int con_n = 0, con_degree = 2;
    auto* con = app.add_subcommand("constraints",
                                   "emit the Jacobi constraint system of the generic tensor");
    con->add_option("--n", con_n, "coordinate count (>= 3)")->required();
    con->add_option("--degree", con_degree, "entry degree (default 2)");

    // equiv
    std::string eq_a, eq_b;
    auto* eqc = app.add_subcommand("equiv", "compare the linear spans of two constraint systems");
    eqc->add_option("--a", eq_a, "first constraint-system JSON file")->required();
    eqc->add_option("--b", eq_b, "second constraint-system JSON file")->required();

    // bracket
    std::string br_input, br_f, br_g, br_gfile;
    auto* br = app.add_subcommand("bracket", "evaluate the bracket of two polynomials");
    br->add_option("--input", br_input, "bivector JSON file, or - for stdin")->required();
    br->add_option("--f", br_f, "first polynomial")->required();
    br->add_option("--g", br_g, "second polynomial");
    br->add_option("--g-file", br_gfile, "file containing the second polynomial");

    std::vector<const char*> argv;
    argv.push_back("hinv");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (cat->parsed()) {
            Bivector B = catalog_lookup(cat_name, detail::parse_param_flags(cat_params));
            if (cat_format == "json")
                out << bivector_to_json(B).dump(2) << "\n";
            else
                detail::print_bivector_text(B, out);
            return exit_ok;
        }

        if (ver->parsed()) {
            Bivector B = bivector_from_json(detail::read_json(ver_input));
            std::vector<VerificationReport> reports;
            std::stringstream names(ver_checks);
            std::string name;
            while (std::getline(names, name, ',')) {
                if (name.empty()) continue;
                if (name == "jacobi")
                    reports.push_back(is_poisson(B));
                else if (name == "sigma")
                    reports.push_back(is_sigma_invariant(B));
                else if (name == "tau")
                    reports.push_back(is_tau_invariant(B));
                else if (name == "unimodular")
                    reports.push_back(is_unimodular_div(B));
                else
                    throw std::invalid_argument("unknown check: " + name);
            }
            if (!ver_casimir.empty()) {
                Poly f = parse_poly(detail::read_text(ver_casimir), B.space());
                reports.push_back(is_casimir(B, f));
            }
            bool all_pass = true;
            if (ver_format == "json") {
                json j = json::array();
                for (const auto& r : reports) {
                    j.push_back(detail::report_to_json(r));
                    all_pass = all_pass && r.pass;
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& r : reports) {
                    detail::print_report(r, out);
                    all_pass = all_pass && r.pass;
                }
            }
            return all_pass ? exit_ok : exit_check_failed;
        }

        if (con->parsed()) {
            if (con_n < 3) {
                err << "constraints: --n must be >= 3\n";
                return exit_input_error;
            }
            ConstraintSystem S =
                jacobi_constraints(generic_invariant_homogeneous(con_n, con_degree));
            out << constraints_to_json(S).dump(2) << "\n";
            return exit_ok;
        }

        if (eqc->parsed()) {
            ConstraintSystem A = constraints_from_json(detail::read_json(eq_a));
            ConstraintSystem B = constraints_from_json(detail::read_json(eq_b));
            bool same = span_equivalent(A, B);
            out << (same ? "equivalent" : "not equivalent") << "\n";
            return same ? exit_ok : exit_check_failed;
        }

        if (br->parsed()) {
            Bivector B = bivector_from_json(detail::read_json(br_input));
            if (br_g.empty() == br_gfile.empty())
                throw std::invalid_argument("bracket: exactly one of --g / --g-file required");
            Poly f = parse_poly(br_f, B.space());
            Poly g = parse_poly(br_g.empty() ? detail::read_text(br_gfile) : br_g, B.space());
            out << bracket(B, f, g).str() << "\n";
            return exit_ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

}  // namespace cli
}  // namespace hinv
