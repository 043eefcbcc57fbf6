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
#include <vector>

#include "carlitz/carlitz_basis.hpp"
#include "carlitz/laurent.hpp"

namespace carlitz {

// Coefficients of f in one of the bases g, ghat, G, Ghat.
struct ExpansionCoefficients {
    Family basis;
    std::uint64_t level;          // the m used for the sums
    std::vector<KFrac> coeffs;    // length deg f + 1
    XPolyK reconstruct(const CarlitzBasis& cb) const;
};

// Via sums over A_{<m}; needs q^m > deg f.
ExpansionCoefficients expand(const CarlitzBasis& cb, const XPolyK& f, Family basis, std::uint64_t m);
// Via sums over the monics of degree m.
ExpansionCoefficients expand_monic(const CarlitzBasis& cb, const XPolyK& f, Family basis, std::uint64_t m);

// Smallest m with q^m > deg f (at least 1).
std::uint64_t minimal_level(const CarlitzBasis& cb, std::int64_t deg);

struct Interpolation {
    XPolyK lhs;  // (-1)^m (D_m/L_m) f
    XPolyK rhs;  // sum of f(a) e_m(x)/(x-a), or f(h)(e_m(x)-D_m)/(x-h) over monics
    bool holds() const { return lhs == rhs; }
};

Interpolation interpolate(const CarlitzBasis& cb, const XPolyK& f, std::uint64_t m, bool monic = false);

// a_{f,i} computed at level e+1, where e is the top q-adic digit position of i.
KFrac stable_coefficient(const CarlitzBasis& cb, const XPolyK& f, std::uint64_t i);

enum class OrthoMode { AllBelow, Monic };

// sum of ghat_l(a) g_j(a) over A_{<m} or over the monics of degree m.
KFrac orthogonality_sum(const CarlitzBasis& cb, std::uint64_t l, std::uint64_t j, std::uint64_t m, OrthoMode mode);
// The closed form: (-1)^m D_m/L_m when l + j = q^m - 1, else 0.
KFrac orthogonality_expected(const CarlitzBasis& cb, std::uint64_t l, std::uint64_t j, std::uint64_t m);

struct DigitBasisLevel {
    std::uint64_t n;
    std::uint32_t q;
    // Row j is the digit product of the coordinate functions for index j,
    // column v is the point of F_q^n with index v.
    std::vector<std::vector<FiniteField::Elem>> eval;
    std::uint64_t rank;
    bool invertible() const { return rank == eval.size(); }
};

inline constexpr std::uint64_t kDigitBasisLimit = 1024;

DigitBasisLevel digit_basis_check(const FiniteField& f, std::uint64_t n);

// Coefficients A_{f,i} of f in the G basis, each at its own minimal level,
// with their images in k_v = F_q((t)).
struct WagnerExpansion {
    std::vector<KFrac> coeffs;
    std::int64_t precision = 32;  // relative precision of the v-adic images
    std::vector<LaurentSeries> vadic() const;
    XPolyK reconstruct(const CarlitzBasis& cb) const;
};

WagnerExpansion wagner_coefficients(const CarlitzBasis& cb, const XPolyK& f, std::uint64_t count,
                                    std::int64_t precision = 32);

// f(x) for f with k coefficients at a point of A.
KFrac eval_at(const XPolyK& f, const APoly& a);

}  // namespace carlitz
