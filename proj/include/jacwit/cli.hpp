// Copyright 2026 The jacwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JACWIT_CLI_HPP
#define JACWIT_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jacwit/certificate_json.hpp"
#include "jacwit/endo.hpp"
#include "jacwit/fuzz.hpp"
#include "jacwit/parse.hpp"
#include "jacwit/problem.hpp"
#include "jacwit/witness.hpp"

namespace jacwit {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int hypothesis_violated = 2;
inline constexpr int input_error = 3;
}  // namespace exit_code

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string describe(const JacobianClass& c) {
    switch (c.kind) {
        case JacobianClass::Kind::unit: return "unit (" + to_string(c.value) + ")";
        case JacobianClass::Kind::zero: return "zero";
        case JacobianClass::Kind::non_constant: {
            std::string s = "non-constant in";
            for (auto v : c.variables) s += " x" + std::to_string(v + 1);
            return s;
        }
    }
    return "?";
}

inline void print_report(const VerificationReport& rep, std::ostream& out) {
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    for (const auto& v : rep.values)
        out << "d/dx" << (v.index + 1) << " at P = " << to_string(v.value) << (v.value.is_zero() ? "" : "  <-- nonzero")
            << "\n";
    out << (rep.pass ? "PASS" : "FAIL") << "\n";
}

inline int cmd_jac(const std::string& file, std::ostream& out) {
    const Endomorphism phi = parse_problem(read_file(file)).endo();
    const Polynomial J = jacobian(phi);
    out << "J = " << print_canonical(J) << "\n";
    out << "class: " << describe(classify(J)) << "\n";
    return exit_code::ok;
}

inline int cmd_witness(const std::string& file, std::string mode, const std::string& out_path, std::ostream& out) {
    const ProblemFile pf = parse_problem(read_file(file));
    if (mode.empty()) mode = pf.mode.value_or(pf.m == 1 ? "rlinear" : "tame");
    const Endomorphism phi = pf.endo();
    const PipelineResult r = mode == "rlinear" ? theorem_rlinear(phi) : theorem_tame(phi);

    out << "pipeline: " << r.pipeline << "\n";
    if (r.shift)
        out << "sigma shift: x" << (r.shift->variable + 1) << " -> x" << (r.shift->variable + 1) << " + x"
            << (r.shift->by + 1) << "\n";
    out << "coordinate: " << print_canonical(r.coordinate) << "\n";
    out << "image: " << print_canonical(r.image) << "\n";
    out << "modulus: " << to_string(r.certificate.modulus) << "\n";
    out << "point: (";
    for (std::size_t j = 0; j < r.certificate.point.size(); ++j)
        out << (j ? ", " : "") << to_string(r.certificate.point[j]);
    out << ")\n";
    const VerificationReport rep = verify_certificate(r.certificate);
    out << "verify: " << (rep.pass ? "pass" : "FAIL") << "\n";

    const std::string text = certificate_text(r.certificate);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw FormatError("cannot write '" + out_path + "'");
        f << text;
        out << "certificate written to " << out_path << "\n";
    }
    return rep.pass ? exit_code::ok : exit_code::verification_failed;
}

inline int cmd_verify(const std::string& file, std::ostream& out) {
    const Certificate cert = parse_certificate(read_file(file));
    const VerificationReport rep = verify_certificate(cert);
    print_report(rep, out);
    return rep.pass ? exit_code::ok : exit_code::verification_failed;
}

inline int cmd_compose(const std::string& a, const std::string& b, std::ostream& out) {
    const Endomorphism sigma = parse_problem(read_file(a)).endo();
    const Endomorphism phi = parse_problem(read_file(b)).endo();
    out << print_problem(compose(sigma, phi));
    return exit_code::ok;
}

inline int cmd_apply(const std::string& file, const std::string& expr, std::ostream& out) {
    const Endomorphism phi = parse_problem(read_file(file)).endo();
    out << print_canonical(apply_endo(phi, parse_poly(expr, phi.nvars()))) << "\n";
    return exit_code::ok;
}

inline int cmd_fuzz(const FuzzConfig& cfg, std::ostream& out) {
    if (cfg.n < 2) throw DimensionError("fuzz needs --n >= 2");
    const FuzzSummary s = run_fuzz(cfg);
    out << "fuzz seed=" << cfg.seed << " trials=" << cfg.trials << " n=" << cfg.n << " deg=" << cfg.deg << "\n";
    for (const auto& p : s.properties) {
        out << p.name << ": passed=" << p.passed << " failed=" << p.failed << " skipped=" << p.skipped << "\n";
        for (const auto& f : p.failures) out << "  " << f << "\n";
    }
    out << (s.all_passed() ? "all properties passed" : "FAILURES") << "\n";
    return s.all_passed() ? exit_code::ok : exit_code::verification_failed;
}

}  // namespace detail

/// Entry point shared by the jacwit tool and the tests. Exit codes: 0 success,
/// 1 verification failure, 2 hypothesis violated (unit Jacobian), 3 input error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Jacobian and non-coordinate witnesses for polynomial endomorphisms", "jacwit"};
    app.require_subcommand(1);

    std::string file, file_b, mode, out_path, expr;
    FuzzConfig fuzz;

    auto* jac = app.add_subcommand("jac", "print J(phi) and its class");
    jac->add_option("file", file, "endomorphism file")->required();

    auto* witness = app.add_subcommand("witness", "build a coordinate whose image is certified not to be one");
    witness->add_option("file", file, "endomorphism file")->required();
    witness->add_option("--mode", mode, "tame | rlinear")->check(CLI::IsMember({"tame", "rlinear"}));
    witness->add_option("--out", out_path, "write the certificate JSON here");

    auto* verify = app.add_subcommand("verify", "re-check a certificate");
    verify->add_option("certificate", file, "certificate JSON")->required();

    auto* comp = app.add_subcommand("compose", "print compose(A, B): A's components substituted into B's");
    comp->add_option("fileA", file, "sigma")->required();
    comp->add_option("fileB", file_b, "phi")->required();

    auto* apply = app.add_subcommand("apply", "print phi(p)");
    apply->add_option("file", file, "endomorphism file")->required();
    apply->add_option("--poly", expr, "polynomial expression")->required();

    auto* fz = app.add_subcommand("fuzz", "run the seeded property suite");
    fz->add_option("--seed", fuzz.seed, "seed");
    fz->add_option("--trials", fuzz.trials, "trials per property");
    fz->add_option("--n", fuzz.n, "number of variables")->check(CLI::Range(2, 3));
    fz->add_option("--deg", fuzz.deg, "maximum degree")->check(CLI::Range(1, 4));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::input_error;
    }

    try {
        if (*jac) return detail::cmd_jac(file, out);
        if (*witness) return detail::cmd_witness(file, mode, out_path, out);
        if (*verify) return detail::cmd_verify(file, out);
        if (*comp) return detail::cmd_compose(file, file_b, out);
        if (*apply) return detail::cmd_apply(file, expr, out);
        if (*fz) return detail::cmd_fuzz(fuzz, out);
    } catch (const JacobianUnit& e) {
        err << e.what() << "\n";
        return exit_code::hypothesis_violated;
    } catch (const NotNormalized& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return exit_code::hypothesis_violated;
    } catch (const HypothesisViolated& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return exit_code::hypothesis_violated;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    }
    return exit_code::input_error;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<const char*> argv{"jacwit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace jacwit

#endif  // JACWIT_CLI_HPP
