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

#ifndef JACWIT_PROBLEM_HPP
#define JACWIT_PROBLEM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jacwit/endo.hpp"
#include "jacwit/error.hpp"
#include "jacwit/parse.hpp"

namespace jacwit {

// Line-oriented endomorphism file:
//
//   # comment
//   n = 2
//   m = 0
//   mode = tame        (optional: tame | rlinear)
//   f1 = x1*x2
//   f2 = x2

struct ProblemFile {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Polynomial> components;
    std::optional<std::string> mode;

    Endomorphism endo() const { return {n, m, components}; }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::size_t parse_count(std::string_view v, std::size_t line, const char* key) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string_view::npos || v.size() > 4)
        throw FormatError("line " + std::to_string(line) + ": " + key + " must be a non-negative integer");
    return std::stoul(std::string(v));
}

inline std::size_t trim_left_size(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    return b == std::string_view::npos ? 0 : s.size() - b;
}

}  // namespace detail

inline ProblemFile parse_problem(std::string_view text) {
    struct Raw {
        std::string expr;
        std::size_t line;
        std::size_t column;
    };
    std::optional<std::size_t> n, m;
    std::optional<std::string> mode;
    std::map<std::size_t, Raw> raw;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (detail::trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw FormatError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string_view key = detail::trim(line.substr(0, eq));
        const std::string_view rest = line.substr(eq + 1);
        const std::string_view value = detail::trim(rest);
        const std::size_t column = eq + 2 + (rest.size() - detail::trim_left_size(rest));

        if (key == "n") {
            n = detail::parse_count(value, line_no, "n");
        } else if (key == "m") {
            m = detail::parse_count(value, line_no, "m");
        } else if (key == "mode") {
            if (value != "tame" && value != "rlinear")
                throw FormatError("line " + std::to_string(line_no) + ": mode must be 'tame' or 'rlinear'");
            mode = std::string(value);
        } else if (key.size() >= 2 && key[0] == 'f' &&
                   key.find_first_not_of("0123456789", 1) == std::string_view::npos && key.size() <= 5) {
            const std::size_t idx = std::stoul(std::string(key.substr(1)));
            if (idx == 0) throw FormatError("line " + std::to_string(line_no) + ": components are numbered from f1");
            if (!raw.emplace(idx, Raw{std::string(value), line_no, column}).second)
                throw FormatError("line " + std::to_string(line_no) + ": duplicate component f" + std::to_string(idx));
        } else {
            throw FormatError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (!n) throw FormatError("missing 'n = ...'");
    ProblemFile pf;
    pf.n = *n;
    pf.m = m.value_or(0);
    pf.mode = mode;
    for (const auto& [idx, r] : raw)
        if (idx > pf.n) throw FormatError("line " + std::to_string(r.line) + ": component f" + std::to_string(idx) + " exceeds n");
    for (std::size_t i = 1; i <= pf.n; ++i) {
        auto it = raw.find(i);
        if (it == raw.end()) throw FormatError("missing component f" + std::to_string(i));
        try {
            pf.components.push_back(parse_poly(it->second.expr, pf.n + pf.m));
        } catch (const UnknownVariable& e) {
            throw UnknownVariable(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), it->second.line,
                                  it->second.column + e.column() - 1);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), it->second.line,
                             it->second.column + e.column() - 1);
        }
    }
    pf.endo();  // validates n >= 2, m <= 1
    return pf;
}

inline std::string print_problem(const Endomorphism& phi, const std::optional<std::string>& mode = std::nullopt) {
    std::ostringstream os;
    os << "n = " << phi.n() << "\n";
    os << "m = " << phi.m() << "\n";
    if (mode) os << "mode = " << *mode << "\n";
    for (std::size_t i = 0; i < phi.n(); ++i) os << "f" << (i + 1) << " = " << print_canonical(phi[i]) << "\n";
    return os.str();
}

}  // namespace jacwit

#endif  // JACWIT_PROBLEM_HPP
