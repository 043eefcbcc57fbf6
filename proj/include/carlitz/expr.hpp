// Copyright 2026 The carlitz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <string>

#include "carlitz/apoly.hpp"
#include "carlitz/carlitz_basis.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

// Arithmetic expressions over integers, + - * / ^ and parentheses, with the
// names t (theta), g (the generator of F_q), x (polynomial variable) and p
// (pi = 1/t). Exponents are integer literals. Each parser accepts the names
// that make sense in its ring and raises DomainError "bad-expression" for the
// rest.

APoly parse_apoly(const FiniteField& f, const std::string& text);     // t, g
KFrac parse_kfrac(const FiniteField& f, const std::string& text);     // t, g
XPolyK parse_xpoly(const FiniteField& f, const std::string& text);    // x, t, g
// t, p, g; divisions to relative precision prec
LaurentSeries parse_laurent(const FiniteField& f, const std::string& text, std::int64_t prec);

}  // namespace carlitz
