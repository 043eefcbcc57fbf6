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
#include <limits>
#include <string>
#include <vector>

#include "carlitz/apoly.hpp"
#include "carlitz/finite_field.hpp"
#include "carlitz/padic.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

// Which uniformizer the exponents refer to: pi = 1/t at infinity, or t
// itself at the finite prime (t).
enum class Uniformizer { Pi, Theta };

// Truncated Laurent series sum_{j >= lead} c_j u^j over a finite field.
//
// Coefficients are known for exponents below abs_precision(); kExact means
// the stored coefficients are the whole series. A nonzero series always has
// coeffs()[0] != 0. A series with no known nonzero coefficient is zero: the
// exact zero when kExact, otherwise "zero to precision".
class LaurentSeries {
public:
    using Elem = FiniteField::Elem;
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

    LaurentSeries() = default;
    explicit LaurentSeries(const FiniteField& f, Uniformizer u = Uniformizer::Pi) : f_(&f), u_(u) {}
    LaurentSeries(const FiniteField& f, std::int64_t lead, std::vector<Elem> coeffs,
                  std::int64_t abs_prec = kExact, Uniformizer u = Uniformizer::Pi);

    static LaurentSeries zero_to(const FiniteField& f, std::int64_t abs_prec, Uniformizer u = Uniformizer::Pi);
    static LaurentSeries monomial(const FiniteField& f, Elem c, std::int64_t e, Uniformizer u = Uniformizer::Pi);
    static LaurentSeries one(const FiniteField& f, Uniformizer u = Uniformizer::Pi) { return monomial(f, 1, 0, u); }
    // t = pi^-1, so a polynomial of degree d starts at pi^-d.
    static LaurentSeries from_apoly_at_infinity(const APoly& a);
    static LaurentSeries from_apoly_at_theta(const APoly& a);
    static LaurentSeries from_kfrac_at_infinity(const KFrac& a, std::int64_t rel_prec);
    static LaurentSeries from_kfrac_at_theta(const KFrac& a, std::int64_t rel_prec);

    const FiniteField& field() const noexcept { return *f_; }
    Uniformizer uniformizer() const noexcept { return u_; }
    bool is_exact() const noexcept { return prec_ == kExact; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_exact_zero() const noexcept { return c_.empty() && prec_ == kExact; }
    bool is_one() const noexcept { return prec_ == kExact && lead_ == 0 && c_.size() == 1 && c_[0] == 1; }
    // Lead exponent; for zero, the absolute precision (kExact for exact zero).
    std::int64_t valuation() const noexcept { return c_.empty() ? prec_ : lead_; }
    std::int64_t lead() const noexcept { return lead_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    std::int64_t abs_precision() const noexcept { return prec_; }
    // kExact when exact.
    std::int64_t rel_precision() const noexcept;
    // Coefficient of u^e; throws when e is beyond the known range.
    Elem coeff(std::int64_t e) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
    LaurentSeries scale(Elem c) const;
    // Multiply by u^k.
    LaurentSeries shift(std::int64_t k) const;
    LaurentSeries pow(std::uint64_t e) const;
    // x^Q for Q a power of the characteristic (additive, so exponents and
    // precision scale by Q).
    LaurentSeries frobenius(std::uint64_t Q) const;
    // Inverse to relative precision rel_prec (exact for monomials).
    LaurentSeries inverse(std::int64_t rel_prec) const;
    LaurentSeries div(const LaurentSeries& o, std::int64_t rel_prec) const { return *this * o.inverse(rel_prec); }

    // Forget everything at exponents >= abs_prec.
    LaurentSeries truncate(std::int64_t abs_prec) const;
    // Treat the known coefficients as the exact series.
    LaurentSeries as_exact() const;
    // Same series over an extension of the coefficient field.
    LaurentSeries lift(const FiniteField& ext) const;
    LaurentSeries with_uniformizer(Uniformizer u) const;

    LaurentSeries zero_like() const { return LaurentSeries(*f_, u_); }
    LaurentSeries one_like() const { return one(*f_, u_); }

    // Representation equality: same known coefficients and same precision.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) noexcept {
        return a.f_ == b.f_ && a.u_ == b.u_ && a.prec_ == b.prec_ && a.c_ == b.c_ && (a.c_.empty() || a.lead_ == b.lead_);
    }

    std::string to_string() const;

private:
    void normalize();

    const FiniteField* f_ = nullptr;
    Uniformizer u_ = Uniformizer::Pi;
    std::int64_t lead_ = 0;
    std::vector<Elem> c_;
    std::int64_t prec_ = kExact;
};

// a == b at every exponent below min(precisions).
bool equal_to_precision(const LaurentSeries& a, const LaurentSeries& b);

struct Decomposition {
    std::int64_t deg;
    FiniteField::Elem sgn;
    LaurentSeries one_unit;
};

// alpha = sgn * pi^-deg * <alpha>.
Decomposition decompose(const LaurentSeries& alpha);

// Size guard for the exact branch of one_unit_power.
inline constexpr std::uint64_t kExactPowerLimit = 1u << 16;

// u^y for a one-unit u, via prod_j (u^{q^j})^{c_j}. Exact when u is exact, y
// is a nonnegative integer and the result degree stays under kExactPowerLimit;
// otherwise correct to absolute precision N.
LaurentSeries one_unit_power(const LaurentSeries& u, const PadicInteger& y, std::int64_t N);

}  // namespace carlitz
