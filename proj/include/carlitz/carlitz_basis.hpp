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
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "carlitz/apoly.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/matrix.hpp"
#include "carlitz/poly.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

enum class Family { e, g, G, ghat, Ghat };

Family parse_family(const std::string& s);
std::string family_name(Family f);

using XPolyA = Poly<APoly>;
using XPolyK = Poly<KFrac>;

// Factorial tables and the Carlitz polynomial families over A = F_q[t].
// Tables grow lazily; everything returned is immutable. Safe to share.
class CarlitzBasis {
public:
    // max_index bounds the polynomial family cache; 0 means q^3.
    explicit CarlitzBasis(const FiniteField& f, std::uint64_t max_index = 0);

    const FiniteField& field() const noexcept { return *f_; }
    std::uint32_t q() const noexcept { return f_->order(); }
    std::uint64_t max_index() const noexcept { return max_index_; }

    // [i] = t^(q^i) - t, i >= 1.
    APoly bracket(std::uint64_t i) const;
    APoly D(std::uint64_t i) const;
    APoly L(std::uint64_t i) const;
    // Pi(j) = prod_t D_t^(c_t).
    APoly factorial(std::uint64_t j) const;

    // e_t(x) = sum_j lin[j] x^(q^j).
    std::vector<APoly> e_linear(std::uint64_t t) const;

    // x-polynomials. The G families have coefficients in k.
    XPolyA e_poly(std::uint64_t t) const;
    XPolyA g_poly(std::uint64_t j) const;
    XPolyA ghat_poly(std::uint64_t j) const;
    XPolyK G_poly(std::uint64_t j) const;
    XPolyK Ghat_poly(std::uint64_t j) const;
    XPolyK family_poly(Family fam, std::uint64_t j) const;

    // Values at points of A.
    APoly e_at(std::uint64_t t, const APoly& x) const;
    APoly g_at(std::uint64_t j, const APoly& x) const;
    APoly ghat_at(std::uint64_t j, const APoly& x) const;
    KFrac G_at(std::uint64_t j, const APoly& x) const;
    KFrac Ghat_at(std::uint64_t j, const APoly& x) const;
    // Any family at a point of k.
    KFrac eval(Family fam, std::uint64_t j, const KFrac& x) const;
    // Any family at a point of k_infinity (coefficients of G families are
    // embedded to relative precision rel_prec).
    LaurentSeries eval(Family fam, std::uint64_t j, const LaurentSeries& x, std::int64_t rel_prec) const;

private:
    void check_index(std::uint64_t j) const;

    const FiniteField* f_;
    std::uint64_t max_index_;
    mutable std::mutex mu_;
    mutable std::vector<APoly> D_;
    mutable std::vector<APoly> L_;
    mutable std::vector<std::vector<APoly>> lin_;
    mutable std::map<std::pair<int, std::uint64_t>, XPolyA> cache_;
};

// Moore, bracket-Vandermonde and Wronskian matrices for x_0..x_m in A_{<m+1}.
struct MatrixTriple {
    std::uint64_t m;
    std::vector<APoly> x;
    Matrix<APoly> M, V, W;
};

MatrixTriple matrix_triple(const CarlitzBasis& cb, const std::vector<APoly>& x);

struct VandermondeFactorial {
    std::uint64_t m;
    APoly detV;
    APoly detM;                // det M(1, t, ..., t^m)
    APoly pi_literal;          // Pi((q^m - 1)/(q - 1))
    APoly pi_shifted;          // Pi((q^(m+1) - 1)/(q - 1))
    bool literal_holds() const { return detV == pi_literal; }
    bool shifted_holds() const { return detV == pi_shifted; }
};

VandermondeFactorial vandermonde_factorial(const CarlitzBasis& cb, std::uint64_t m);

struct FrobeniusExpansion {
    APoly sum;    // sum_j d_j f * [i]^j
    APoly power;  // f^(q^i)
    bool holds() const { return sum == power; }
};

FrobeniusExpansion frobenius_expand(const CarlitzBasis& cb, const APoly& f, std::uint64_t i);

}  // namespace carlitz
