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

#include "carlitz/error.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/padic.hpp"

namespace carlitz {

// (x, y) in C_inf^* x Z_p, restricted to x in k_inf (or a finite extension).
struct SInfinityPoint {
    LaurentSeries x;
    PadicInteger y;

    SInfinityPoint(LaurentSeries x_, PadicInteger y_) : x(std::move(x_)), y(std::move(y_)) {
        if (x.is_zero()) throw DomainError("lseries", "zero-x", "x must be nonzero");
    }

    // s_i = (pi^-i, i)
    static SInfinityPoint s(const FiniteField& f, std::int64_t i) {
        return {LaurentSeries::monomial(f, 1, -i), PadicInteger::from_int(f.order(), i)};
    }

    SInfinityPoint operator+(const SInfinityPoint& o) const { return {x * o.x, y + o.y}; }

    friend bool operator==(const SInfinityPoint& a, const SInfinityPoint& b) { return a.x == b.x && a.y == b.y; }
};

}  // namespace carlitz
