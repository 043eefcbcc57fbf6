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
#include <utility>
#include <vector>

#include "carlitz/finite_field.hpp"

namespace carlitz {

// Element of A = F[t] over a finite field F, coefficients lowest degree first
// and trimmed so the last stored coefficient is nonzero.
class APoly {
public:
    using Elem = FiniteField::Elem;

    APoly() = default;
    explicit APoly(const FiniteField& f) : f_(&f) {}
    APoly(const FiniteField& f, std::vector<Elem> coeffs);

    static APoly constant(const FiniteField& f, Elem c);
    static APoly theta(const FiniteField& f) { return monomial(f, 1, 1); }
    static APoly monomial(const FiniteField& f, Elem c, std::size_t n);

    const FiniteField& field() const noexcept { return *f_; }
    bool has_field() const noexcept { return f_ != nullptr; }
    // -1 for zero.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    APoly operator+(const APoly& o) const;
    APoly operator-(const APoly& o) const;
    APoly operator-() const;
    APoly operator*(const APoly& o) const;
    APoly& operator+=(const APoly& o) { return *this = *this + o; }
    APoly& operator-=(const APoly& o) { return *this = *this - o; }
    APoly& operator*=(const APoly& o) { return *this = *this * o; }
    APoly scale(Elem c) const;
    APoly pow(std::uint64_t e) const;
    // Coefficientwise c -> c^(p^k) composed with t -> t^(p^k) is ordinary
    // exponentiation by p^k; this is the fast path for it.
    APoly pow_char(std::uint64_t pk) const;
    APoly shift(std::size_t n) const;

    // Euclidean division; throws DomainError on a zero divisor.
    std::pair<APoly, APoly> divmod(const APoly& d) const;
    APoly operator/(const APoly& d) const { return divmod(d).first; }
    APoly operator%(const APoly& d) const { return divmod(d).second; }
    // Quotient that must be exact; throws DomainError otherwise.
    APoly exact_div(const APoly& d) const;

    APoly monic() const;
    Elem eval(Elem x) const;
    // Composition f(g).
    APoly compose(const APoly& g) const;

    APoly zero_like() const { return APoly(*f_); }
    APoly one_like() const { return constant(*f_, 1); }

    friend bool operator==(const APoly& a, const APoly& b) noexcept { return a.f_ == b.f_ && a.c_ == b.c_; }
    // Total order: by degree, then coefficients from the top.
    friend bool operator<(const APoly& a, const APoly& b) noexcept;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    const FiniteField* f_ = nullptr;
    std::vector<Elem> c_;
};

// Monic gcd; gcd(0, 0) = 0.
APoly gcd(const APoly& a, const APoly& b);
APoly lcm(const APoly& a, const APoly& b);

// d-th divided derivative in t: t^i -> binom(i, j) t^(i-j) mod p.
APoly divided_derivative(const APoly& f, std::uint64_t j);
// [f, d_1 f, ..., d_deg f].
std::vector<APoly> divided_derivative_table(const APoly& f);

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

// The q^d monic polynomials of degree d. Index n gives lower coefficients
// equal to the base-q digits of n.
std::vector<APoly> enumerate_monic(const FiniteField& f, std::uint64_t d);
// The q^d polynomials of degree < d, zero first, same index convention.
std::vector<APoly> enumerate_below(const FiniteField& f, std::uint64_t d);
// The n-th element of enumerate_below(f, d) for any d > deg.
APoly poly_from_index(const FiniteField& f, std::uint64_t n);
std::uint64_t count_or_throw(std::uint64_t q, std::uint64_t d);

}  // namespace carlitz
