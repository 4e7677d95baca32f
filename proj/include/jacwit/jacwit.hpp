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

#ifndef JACWIT_JACWIT_HPP
#define JACWIT_JACWIT_HPP

#include "jacwit/certificate_json.hpp"
#include "jacwit/endo.hpp"
#include "jacwit/error.hpp"
#include "jacwit/matrix.hpp"
#include "jacwit/number_field.hpp"
#include "jacwit/parse.hpp"
#include "jacwit/poly.hpp"
#include "jacwit/problem.hpp"
#include "jacwit/random.hpp"
#include "jacwit/rational.hpp"
#include "jacwit/upoly.hpp"
#include "jacwit/witness.hpp"

#endif  // JACWIT_JACWIT_HPP
