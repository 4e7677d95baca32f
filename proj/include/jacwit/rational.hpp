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

#ifndef JACWIT_RATIONAL_HPP
#define JACWIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace jacwit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" (or "p" when q = 1).
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace jacwit

#endif  // JACWIT_RATIONAL_HPP
