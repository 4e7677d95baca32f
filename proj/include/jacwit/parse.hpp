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

#ifndef JACWIT_PARSE_HPP
#define JACWIT_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jacwit/error.hpp"
#include "jacwit/poly.hpp"
#include "jacwit/rational.hpp"
#include "jacwit/upoly.hpp"

namespace jacwit {

// Grammar (whitespace-insensitive, no implicit multiplication):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' nat)?
//   base   := rational | var | '(' expr ')'
//   rational := nat ('/' nat)?
//   var    := 'x' nat            (1-based; or a single symbol such as 't')

struct ExprAst {
    enum class Kind { number, variable, negate, add, subtract, multiply, power };

    Kind kind;
    Rational value;            ///< number
    std::size_t variable = 0;  ///< 0-based
    std::uint32_t exponent = 0;
    std::vector<ExprAst> children;
    std::size_t line = 1;
    std::size_t column = 1;
};

struct ParseOptions {
    std::size_t nvars;
    /// Empty: variables are x1..xN. Otherwise the only variable, mapped to x1.
    std::string symbol;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, ParseOptions opts) : s_(text), opts_(std::move(opts)) {}

    ExprAst parse() {
        skip_ws();
        ExprAst e = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    ExprAst node(ExprAst::Kind k) const {
        ExprAst a{k, 0, 0, 0, {}, line_, col_};
        return a;
    }

    std::string digits() {
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            out += s_[pos_];
            advance();
        }
        return out;
    }

    ExprAst expr() {
        ExprAst lhs = term();
        for (;;) {
            if (peek('+') || peek('-')) {
                ExprAst op = node(s_[pos_] == '+' ? ExprAst::Kind::add : ExprAst::Kind::subtract);
                advance();
                op.children.push_back(std::move(lhs));
                op.children.push_back(term());
                lhs = std::move(op);
            } else {
                return lhs;
            }
        }
    }

    ExprAst term() {
        ExprAst lhs = factor();
        while (peek('*')) {
            ExprAst op = node(ExprAst::Kind::multiply);
            advance();
            op.children.push_back(std::move(lhs));
            op.children.push_back(factor());
            lhs = std::move(op);
        }
        return lhs;
    }

    ExprAst factor() {
        if (peek('-')) {
            ExprAst op = node(ExprAst::Kind::negate);
            advance();
            op.children.push_back(factor());
            return op;
        }
        ExprAst b = base();
        if (peek('^')) {
            ExprAst op = node(ExprAst::Kind::power);
            advance();
            skip_ws();
            const std::string d = digits();
            if (d.empty()) fail("expected a non-negative integer exponent");
            if (d.size() > 6) fail("exponent too large");
            op.exponent = static_cast<std::uint32_t>(std::stoul(d));
            op.children.push_back(std::move(b));
            return op;
        }
        return b;
    }

    ExprAst base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            advance();
            ExprAst e = expr();
            if (!peek(')')) fail("expected ')'");
            advance();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ExprAst n = node(ExprAst::Kind::number);
            Integer num(digits());
            Integer den = 1;
            if (peek('/')) {
                advance();
                skip_ws();
                const std::string d = digits();
                if (d.empty()) fail("expected a denominator");
                den = Integer(d);
                if (den == 0) fail("zero denominator");
            }
            n.value = Rational(num, den);
            n.value.canonicalize();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return var();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    ExprAst var() {
        ExprAst v = node(ExprAst::Kind::variable);
        const std::size_t line = line_, col = col_;
        std::string name;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
            name += s_[pos_];
            advance();
        }
        if (!opts_.symbol.empty()) {
            if (name != opts_.symbol) throw UnknownVariable("unknown variable '" + name + "'", line, col);
            v.variable = 0;
            return v;
        }
        if (name.size() < 2 || name[0] != 'x' || name.find_first_not_of("0123456789", 1) != std::string::npos ||
            name.size() > 8)
            throw UnknownVariable("unknown variable '" + name + "'", line, col);
        const std::size_t idx = std::stoul(name.substr(1));
        if (idx == 0 || idx > opts_.nvars)
            throw UnknownVariable("variable '" + name + "' outside x1..x" + std::to_string(opts_.nvars), line, col);
        v.variable = idx - 1;
        return v;
    }

    std::string_view s_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace detail

inline ExprAst parse_expr(std::string_view text, const ParseOptions& opts) {
    return detail::ExprParser(text, opts).parse();
}

inline Polynomial lower(const ExprAst& e, std::size_t nvars) {
    switch (e.kind) {
        case ExprAst::Kind::number: return Polynomial::constant(nvars, e.value);
        case ExprAst::Kind::variable: return Polynomial::variable(nvars, e.variable);
        case ExprAst::Kind::negate: return -lower(e.children[0], nvars);
        case ExprAst::Kind::add: return lower(e.children[0], nvars) + lower(e.children[1], nvars);
        case ExprAst::Kind::subtract: return lower(e.children[0], nvars) - lower(e.children[1], nvars);
        case ExprAst::Kind::multiply: return lower(e.children[0], nvars) * lower(e.children[1], nvars);
        case ExprAst::Kind::power: return pow(lower(e.children[0], nvars), e.exponent);
    }
    return Polynomial(nvars);
}

/// Parses an expression in x1..xN.
inline Polynomial parse_poly(std::string_view text, std::size_t nvars) {
    return lower(parse_expr(text, {nvars, {}}), nvars);
}

/// Parses a univariate expression in `symbol`.
inline UPoly parse_upoly(std::string_view text, const std::string& symbol = "t") {
    return to_univariate(lower(parse_expr(text, {1, symbol}), 1), 0);
}

/// Graded-lex order, explicit '*' and '^', coefficients as p/q: "3/2*x1^2 - x3 + 1".
inline std::string print_canonical(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t j = 0; j < m.nvars(); ++j) {
            if (m[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(j + 1);
            if (m[j] > 1) mono += "^" + std::to_string(m[j]);
        }
        if (mono.empty()) out += to_string(mag);
        else if (mag == 1) out += mono;
        else out += to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace jacwit

#endif  // JACWIT_PARSE_HPP
