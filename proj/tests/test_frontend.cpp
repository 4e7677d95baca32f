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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jacwit/certificate_json.hpp"
#include "jacwit/cli.hpp"
#include "jacwit/parse.hpp"
#include "jacwit/problem.hpp"
#include "jacwit/random.hpp"
#include "oracles.hpp"

using namespace jacwit;
using oracle::c;
using oracle::x;

namespace fs = std::filesystem;

namespace {

std::string problem(const std::string& name) { return std::string(JACWIT_PROBLEMS_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "jacwit_frontend_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

}  // namespace

TEST(Parse, Examples) {
    EXPECT_EQ(parse_poly("x1^2 - x2^2", 2), x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2));
    EXPECT_EQ(parse_poly("3/2*x1^2 - x3", 3), c(3, 3, 2) * x(3, 1) * x(3, 1) - x(3, 3));
    EXPECT_EQ(parse_poly("-(x1 + 1)^2", 1), -(x(1, 1) + c(1, 1)) * (x(1, 1) + c(1, 1)));
    EXPECT_EQ(parse_poly("2 * 3 - 6", 2), Polynomial(2));
    EXPECT_EQ(parse_poly("x1 - -x1", 1), c(1, 2) * x(1, 1));
    EXPECT_EQ(parse_poly("4/6", 1), c(1, 2, 3));
    EXPECT_EQ(parse_upoly("t^2 - 3"), UPoly(std::vector<Rational>{-3, 0, 1}));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
    try {
        parse_poly("2x1", 1);
        FAIL() << "implicit multiplication accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 2u);
    }
    try {
        parse_poly("(x1 + 1", 1);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 8u);
    }
    EXPECT_THROW(parse_poly("x1^", 1), ParseError);
    EXPECT_THROW(parse_poly("x1^-1", 1), ParseError);
    EXPECT_THROW(parse_poly("1/0", 1), ParseError);
    EXPECT_THROW(parse_poly("", 1), ParseError);
    EXPECT_THROW(parse_poly("x1 +* x2", 2), ParseError);
}

TEST(Parse, UnknownVariables) {
    try {
        parse_poly("x1 +\n  y", 2);
        FAIL();
    } catch (const UnknownVariable& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
    try {
        parse_poly("x1 + x9", 2);
        FAIL();
    } catch (const UnknownVariable& e) {
        EXPECT_EQ(e.column(), 6u);
    }
    EXPECT_THROW(parse_poly("x0", 2), UnknownVariable);
    EXPECT_THROW(parse_upoly("x^2"), UnknownVariable);
}

TEST(Print, Examples) {
    EXPECT_EQ(print_canonical(x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2)), "x1^2 - x2^2");
    EXPECT_EQ(print_canonical(c(3, 3, 2) * x(3, 1) * x(3, 1) - x(3, 3)), "3/2*x1^2 - x3");
    EXPECT_EQ(print_canonical(Polynomial(2)), "0");
    EXPECT_EQ(print_canonical(c(2, -1) - x(2, 2) + x(2, 1) * x(2, 2)), "x1*x2 - x2 - 1");
    EXPECT_EQ(to_string(parse_upoly("t + 1/2")), "t + 1/2");
}

TEST(Print, RoundTripProperty) {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
        const auto p = rand_poly(rng, n, 4, 7);
        EXPECT_EQ(parse_poly(print_canonical(p), n), p) << print_canonical(p);
    }
}

TEST(ProblemFile, ParsesAndPrints) {
    const auto pf = parse_problem("# comment\nn = 2\nm = 1\nmode = rlinear\nf1 = x1*x3 + x1  # trailing\nf2 = x2\n");
    EXPECT_EQ(pf.n, 2u);
    EXPECT_EQ(pf.m, 1u);
    EXPECT_EQ(pf.mode, std::optional<std::string>("rlinear"));
    EXPECT_EQ(pf.endo(), Endomorphism(2, 1, {x(3, 1) * x(3, 3) + x(3, 1), x(3, 2)}));
    const auto again = parse_problem(print_problem(pf.endo(), pf.mode));
    EXPECT_EQ(again.endo(), pf.endo());
    EXPECT_EQ(again.mode, pf.mode);
}

TEST(ProblemFile, Errors) {
    EXPECT_THROW(parse_problem("f1 = x1\nf2 = x2\n"), FormatError);
    EXPECT_THROW(parse_problem("n = 2\nf1 = x1\n"), FormatError);
    EXPECT_THROW(parse_problem("n = 2\nf1 = x1\nf1 = x2\nf2 = x2\n"), FormatError);
    EXPECT_THROW(parse_problem("n = 2\nf1 = x1\nf2 = x2\nf3 = x1\n"), FormatError);
    EXPECT_THROW(parse_problem("n = 2\nmode = fast\nf1 = x1\nf2 = x2\n"), FormatError);
    EXPECT_THROW(parse_problem("n = 2\nfoo = 1\nf1 = x1\nf2 = x2\n"), FormatError);
    EXPECT_THROW(parse_problem("n = 2\njunk\n"), FormatError);
    EXPECT_THROW(parse_problem("n = 1\nf1 = x1\n"), DimensionError);
    try {
        parse_problem("n = 2\nf1 = x1 + y\nf2 = x2\n");
        FAIL();
    } catch (const UnknownVariable& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 11u);
    }
}

TEST(CertificateJson, RoundTrip) {
    const auto q2 = x(3, 3) * x(3, 3) - c(3, 2), q3 = x(3, 3) * x(3, 3) - c(3, 3);
    for (const Endomorphism& phi : {Endomorphism(2, 0, {x(2, 1) + x(2, 1) * x(2, 1), x(2, 2)}),
                                    Endomorphism(3, 0, {x(3, 1) * q2, x(3, 2) * q3, x(3, 3)})}) {
        const auto cert = theorem_tame(phi).certificate;
        const std::string text = certificate_text(cert);
        const auto back = parse_certificate(text);
        EXPECT_EQ(certificate_text(back), text);
        EXPECT_EQ(back.point, cert.point);
        EXPECT_EQ(back.target, cert.target);
        EXPECT_EQ(back.claimed_zero, cert.claimed_zero);
    }
}

TEST(CertificateJson, OneBasedIndices) {
    const auto cert = theorem_tame(Endomorphism(2, 0, {x(2, 1) + x(2, 1) * x(2, 1), x(2, 2)})).certificate;
    const auto j = to_json(cert);
    EXPECT_EQ(j["claimed_zero"], Json::array({1, 2}));
    EXPECT_EQ(j["provenance"]["sigma_shift"]["variable"], 1);
    EXPECT_EQ(j["provenance"]["sigma_shift"]["by"], 2);
    EXPECT_EQ(j["modulus"], "t + 1/2");
    EXPECT_EQ(j["point"], Json::array({"0", "-1/2"}));
}

TEST(CertificateJson, Malformed) {
    EXPECT_THROW(parse_certificate("{"), FormatError);
    EXPECT_THROW(parse_certificate("[]"), FormatError);
    EXPECT_THROW(parse_certificate(R"({"nvars": 2, "modulus": "t", "point": ["0", "0"]})"), FormatError);
    EXPECT_THROW(parse_certificate(R"({"nvars": 2, "modulus": "t", "point": ["0", "0"], "target": "x1 +", "claimed_zero": [1]})"),
                 FormatError);
    EXPECT_THROW(parse_certificate(R"({"nvars": 2, "modulus": "t", "point": ["0", "0"], "target": "x1", "claimed_zero": [0]})"),
                 FormatError);
    EXPECT_THROW(parse_certificate(R"({"nvars": 2, "modulus": 7, "point": ["0", "0"], "target": "x1", "claimed_zero": [1]})"),
                 FormatError);
}

TEST(Cli, ExitCodes) {
    std::string out;
    EXPECT_EQ(cli({"witness", problem("x1x2.endo")}, &out), exit_code::ok);
    EXPECT_NE(out.find("coordinate: x1"), std::string::npos);
    EXPECT_EQ(cli({"witness", problem("shift.endo")}), exit_code::ok);
    EXPECT_EQ(cli({"witness", problem("rlinear.endo")}), exit_code::ok);
    EXPECT_EQ(cli({"witness", problem("elementary.endo")}), exit_code::hypothesis_violated);
    EXPECT_EQ(cli({"witness", problem("does-not-exist.endo")}), exit_code::input_error);
    EXPECT_EQ(cli({"frobnicate"}), exit_code::input_error);
    EXPECT_EQ(cli({"witness", problem("x1x2.endo"), "--mode", "other"}), exit_code::input_error);
    EXPECT_EQ(cli({"fuzz", "--n", "7"}), exit_code::input_error);

    const auto bad = scratch("bad.endo");
    write(bad, "n = 2\nf1 = x1 +\nf2 = x2\n");
    EXPECT_EQ(cli({"jac", bad.string()}), exit_code::input_error);
}

TEST(Cli, VerifyRoundTripAndTamper) {
    const auto cert = scratch("x1x2.json");
    EXPECT_EQ(cli({"witness", problem("x1x2.endo"), "--out", cert.string()}), exit_code::ok);
    std::string out;
    EXPECT_EQ(cli({"verify", cert.string()}, &out), exit_code::ok);
    EXPECT_NE(out.find("PASS"), std::string::npos);

    auto j = Json::parse(detail::read_file(cert.string()));
    j["point"] = Json::array({"1", "1"});
    const auto tampered = scratch("x1x2_tampered.json");
    write(tampered, j.dump(2));
    EXPECT_EQ(cli({"verify", tampered.string()}, &out), exit_code::verification_failed);
    EXPECT_NE(out.find("FAIL"), std::string::npos);

    const auto junk = scratch("junk.json");
    write(junk, "not json");
    EXPECT_EQ(cli({"verify", junk.string()}), exit_code::input_error);
}

TEST(Cli, JacComposeApply) {
    std::string out;
    EXPECT_EQ(cli({"jac", problem("x1x2.endo")}, &out), exit_code::ok);
    EXPECT_NE(out.find("J = x2"), std::string::npos);
    EXPECT_EQ(cli({"compose", problem("sigma.endo"), problem("square.endo")}, &out), exit_code::ok);
    const auto composed = parse_problem(out).endo();
    EXPECT_EQ(composed[0], pow(x(2, 1) + x(2, 2) * x(2, 2), 2));
    EXPECT_EQ(cli({"apply", problem("x1x2.endo"), "--poly", "x1 + x2"}, &out), exit_code::ok);
    EXPECT_EQ(out, "x1*x2 + x2\n");
}

TEST(Random, Deterministic) {
    EXPECT_EQ(rand_poly(11, 3, 3, 3), rand_poly(11, 3, 3, 3));
    EXPECT_EQ(tame_to_endo(rand_tame_word(12, 3, 5)), tame_to_endo(rand_tame_word(12, 3, 5)));
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    const auto ex = rand_poly(13, 3, 3, 3, {4, std::size_t{1}});
    EXPECT_FALSE(ex.involves(1));
}

TEST(Fuzz, DeterministicAndPassing) {
    FuzzConfig cfg;
    cfg.seed = 3;
    cfg.trials = 15;
    const auto a = run_fuzz(cfg), b = run_fuzz(cfg);
    ASSERT_EQ(a.properties.size(), b.properties.size());
    for (std::size_t i = 0; i < a.properties.size(); ++i) {
        EXPECT_EQ(a.properties[i].passed, b.properties[i].passed);
        EXPECT_EQ(a.properties[i].skipped, b.properties[i].skipped);
    }
    EXPECT_TRUE(a.all_passed());
    std::string out;
    EXPECT_EQ(cli({"fuzz", "--seed", "3", "--trials", "10", "--n", "3", "--deg", "2"}, &out), exit_code::ok);
    EXPECT_NE(out.find("all properties passed"), std::string::npos);
}
