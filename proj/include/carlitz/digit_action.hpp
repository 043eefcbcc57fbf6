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
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/error.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/measure.hpp"
#include "carlitz/padic.hpp"
#include "carlitz/sinfinity.hpp"

namespace carlitz {

// Finitely supported permutation of the digit positions {0, 1, ...} in base q.
class DigitPermutation {
public:
    explicit DigitPermutation(std::uint32_t q) : q_(q) {}
    // Pairs from -> to; must be a bijection of a finite set onto itself.
    DigitPermutation(std::uint32_t q, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

    static DigitPermutation identity(std::uint32_t q) { return DigitPermutation(q); }
    static DigitPermutation swap(std::uint32_t q, std::uint32_t i, std::uint32_t j);
    // "0:1,1:0"
    static DigitPermutation parse(std::uint32_t q, const std::string& text);

    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t operator()(std::uint32_t pos) const;
    const std::map<std::uint32_t, std::uint32_t>& support() const noexcept { return map_; }
    bool is_identity() const noexcept { return map_.empty(); }
    // One more than the largest moved position (0 for the identity).
    std::uint32_t bound() const noexcept { return map_.empty() ? 0 : map_.rbegin()->first + 1; }

    DigitPermutation inverse() const;
    // (this o other)(j) = this(other(j))
    DigitPermutation compose(const DigitPermutation& other) const;

    // rho_* on integers (any sign): digits permuted, tail kept.
    std::int64_t apply(std::int64_t n) const;

    std::string to_string() const;

    friend bool operator==(const DigitPermutation& a, const DigitPermutation& b) {
        return a.q_ == b.q_ && a.map_ == b.map_;
    }

private:
    void check_guard() const;

    std::uint32_t q_;
    std::map<std::uint32_t, std::uint32_t> map_;
};

PadicInteger rho_zp(const DigitPermutation& rho, const PadicInteger& y);
// -rho_*(-y)
PadicInteger rho_hat(const DigitPermutation& rho, const PadicInteger& y);

// y -> sum_j c_j binom(y, j) mod p, coefficients in k_inf (or an extension).
// Coefficients not stored are zero, except that every index outside the
// stored map may carry a term of valuation >= tail_valuation.
class MahlerFunction {
public:
    MahlerFunction() = default;
    explicit MahlerFunction(const FiniteField& f, std::int64_t tail_valuation = LaurentSeries::kExact)
        : f_(&f), tail_(tail_valuation) {}

    static MahlerFunction binomial(const FiniteField& f, std::uint64_t j);
    // y -> u^y = sum (u-1)^j binom(y, j), to absolute precision N.
    static MahlerFunction power(const LaurentSeries& u, std::int64_t N);

    const FiniteField& field() const noexcept { return *f_; }
    const std::map<std::uint64_t, LaurentSeries>& coeffs() const noexcept { return c_; }
    std::int64_t tail_valuation() const noexcept { return tail_; }
    bool is_exact() const noexcept { return tail_ == LaurentSeries::kExact; }

    void set(std::uint64_t j, const LaurentSeries& c);
    LaurentSeries coeff(std::uint64_t j) const;

    LaurentSeries eval(const PadicInteger& y) const;

    MahlerFunction operator+(const MahlerFunction& o) const;
    MahlerFunction scale(const LaurentSeries& s) const;
    // Product via binom(y,a) binom(y,b) = sum_k multinomial binom(y, a+b-k).
    MahlerFunction operator*(const MahlerFunction& o) const;

    friend bool operator==(const MahlerFunction& a, const MahlerFunction& b) {
        return a.f_ == b.f_ && a.tail_ == b.tail_ && a.c_ == b.c_;
    }

private:
    const FiniteField* f_ = nullptr;
    std::map<std::uint64_t, LaurentSeries> c_;
    std::int64_t tail_ = LaurentSeries::kExact;
};

// binom(y, j) mod p for y in Z_p (any base q = p^r digit stream).
std::uint32_t binom_mod_p(const PadicInteger& y, std::uint64_t j, std::uint32_t p);

// f^{rho1}: c_j moves to index rho_* j.
MahlerFunction act_function(const DigitPermutation& rho, const MahlerFunction& f);

// rho_*(u^i/i!) = u^{rho i}/(rho i)!. The output order is the least rho_* i
// over i >= N; a known nonzero coefficient landing at or beyond it is an
// error.
template <class R>
DPSeries<R> act_divided_power(const DigitPermutation& rho, const DPSeries<R>& h);

// Least rho_* j over integers j >= n.
std::int64_t min_image_from(const DigitPermutation& rho, std::int64_t n);

enum class NegativeExponents {
    Digit,  // rho_* acts on negative exponents through their digit streams
    Fixed,  // negative exponents are left in place
};

LaurentSeries act_kinfty(const DigitPermutation& rho, const LaurentSeries& x,
                         NegativeExponents conv = NegativeExponents::Digit);

SInfinityPoint act_sinfty(const DigitPermutation& rho, const SInfinityPoint& s,
                          NegativeExponents conv = NegativeExponents::Digit);

// Finite combination sum_i w_i delta_{alpha_i} with alpha_i in F_q[[pi]].
class DiracMeasureO {
public:
    DiracMeasureO() = default;
    void add(const LaurentSeries& weight, const LaurentSeries& point);
    static DiracMeasureO dirac(const LaurentSeries& point);

    const std::vector<std::pair<LaurentSeries, LaurentSeries>>& terms() const noexcept { return t_; }
    DiracMeasureO convolve(const DiracMeasureO& o) const;
    // integral of f
    LaurentSeries integrate(const std::function<LaurentSeries(const LaurentSeries&)>& f) const;

    friend bool operator==(const DiracMeasureO& a, const DiracMeasureO& b);

private:
    std::vector<std::pair<LaurentSeries, LaurentSeries>> t_;  // (weight, point), points distinct
};

// int f dmu^{rho2} = int f(rho_*^{-1} x) dmu, so delta_alpha -> delta_{rho_*^{-1} alpha}.
DiracMeasureO act_measure_rho2(const DigitPermutation& rho, const DiracMeasureO& mu);

// rho3: rho_* applied to every coefficient.
MahlerFunction act_rho3(const DigitPermutation& rho, const MahlerFunction& f);
DPSeries<LaurentSeries> act_rho3(const DigitPermutation& rho, const DPSeries<LaurentSeries>& h);
std::vector<LaurentSeries> act_rho3(const DigitPermutation& rho, const std::vector<LaurentSeries>& wagner_coeffs);

// Basis {1 = alpha_1, ..., alpha_m} of F_{q^m} over F_q, used as a basis of
// F_{q^m}((pi)) over k_inf.
class ExtendedActionContext {
public:
    ExtendedActionContext(const FiniteField& base, const FiniteField& ext, std::vector<FiniteField::Elem> basis);

    const FiniteField& base() const noexcept { return *base_; }
    const FiniteField& ext() const noexcept { return *ext_; }
    std::uint32_t degree() const noexcept { return m_; }
    const std::vector<FiniteField::Elem>& basis() const noexcept { return basis_; }

    // beta = sum_e k_e alpha_e
    std::vector<LaurentSeries> coordinates(const LaurentSeries& beta) const;
    LaurentSeries combine(const std::vector<LaurentSeries>& k) const;

private:
    std::vector<FiniteField::Elem> solve(FiniteField::Elem b) const;

    const FiniteField* base_;
    const FiniteField* ext_;
    std::uint32_t m_;
    std::vector<FiniteField::Elem> basis_;
    std::vector<std::vector<FiniteField::Elem>> inv_;  // inverse of the coordinate matrix
};

LaurentSeries extend_unramified(const ExtendedActionContext& ctx, const DigitPermutation& rho, const LaurentSeries& beta,
                                NegativeExponents conv = NegativeExponents::Digit);

// Both sums of the congruence as F_p streams indexed by binomial index.
struct MultinomialCongruence {
    std::map<std::uint64_t, std::uint32_t> s1, s2;
    bool holds() const { return s1 == s2; }
};

inline constexpr std::uint64_t kCongruenceLimit = 1u << 12;

MultinomialCongruence multinomial_congruence(const DigitPermutation& rho, std::uint64_t m, std::uint64_t n);

// ----------------------------------------------------------------------------

template <class R>
DPSeries<R> act_divided_power(const DigitPermutation& rho, const DPSeries<R>& h) {
    const auto N = static_cast<std::int64_t>(h.order());
    const auto out_order = static_cast<std::size_t>(min_image_from(rho, N));
    DPSeries<R> r(h.zero(), out_order);
    for (std::size_t i = 0; i < h.order(); ++i) {
        if (h.coeff(i).is_zero()) continue;
        const auto j = static_cast<std::size_t>(rho.apply(static_cast<std::int64_t>(i)));
        if (j >= out_order)
            throw DomainError("digit-action", "window-overflow",
                              "index " + std::to_string(i) + " maps outside the truncation window");
        r.coeff(j) = h.coeff(i);
    }
    return r;
}

}  // namespace carlitz
