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
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace carlitz {

/// Finite field F_{b^r} built as base[w]/(modulus(w)) over a base field of
/// order b, or Z/p when there is no base.
///
/// Elements are indices in [0, order). The index of an element is the base-p
/// digit string of its coordinates over the prime field, so the same integer
/// names the same element of F_q inside every extension of F_q built with
/// extension(). Instances are interned and never destroyed; elements and
/// polynomials hold plain pointers to them.
class FiniteField {
public:
    using Elem = std::uint16_t;

    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Z/p.
    static const FiniteField& prime(std::uint32_t p);
    /// F_q with the built-in modulus for q (Conway choice where tabulated,
    /// otherwise the first primitive monic irreducible in index order).
    static const FiniteField& of_order(std::uint32_t q);
    /// F_{p^m} from a user modulus over F_p, coefficients lowest degree first.
    static const FiniteField& with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);
    /// Relative extension of `base` of degree m, with an automatically chosen
    /// monic irreducible modulus over the base.
    static const FiniteField& extension(const FiniteField& base, std::uint32_t m);
    /// Relative extension with an explicit monic modulus over `base`.
    static const FiniteField& extension(const FiniteField& base, std::vector<Elem> modulus);

    /// Trial division against every monic polynomial over `base` of degree
    /// at most deg/2.
    static bool is_irreducible(const FiniteField& base, std::span<const Elem> poly);

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t order() const noexcept { return order_; }
    /// Degree over the prime field.
    std::uint32_t degree() const noexcept { return degree_; }
    const FiniteField* base() const noexcept { return base_; }
    const FiniteField& prime_field() const noexcept { return *prime_; }
    std::uint32_t relative_degree() const noexcept { return static_cast<std::uint32_t>(modulus_.empty() ? 1 : modulus_.size() - 1); }
    /// Modulus over the base, lowest degree first, monic.
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return base_ == nullptr; }
    /// True when `sub` is this field or one of its bases.
    bool contains(const FiniteField& sub) const noexcept;

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    /// The class of w in base[w]/(modulus); for a prime field, 1.
    Elem generator() const noexcept { return gen_; }
    Elem primitive_element() const noexcept { return primitive_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= order_ - 1) s -= order_ - 1;
        return exp_[s];
    }
    /// Throws DomainError on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// n * 1 for an ordinary integer n.
    Elem from_int(std::int64_t n) const noexcept;
    /// a * n for an ordinary integer n.
    Elem scale(Elem a, std::uint64_t n) const noexcept { return mul(a, from_int(static_cast<std::int64_t>(n % p_))); }
    /// Discrete log base primitive_element(); a must be nonzero.
    std::uint32_t log(Elem a) const noexcept { return log_[a]; }

    /// Base-p coordinates over the prime field, length degree().
    std::vector<std::uint32_t> prime_coordinates(Elem a) const;
    Elem from_prime_coordinates(std::span<const std::uint32_t> c) const;
    /// Coordinates over the immediate base, length relative_degree().
    std::vector<Elem> base_coordinates(Elem a) const;
    Elem from_base_coordinates(std::span<const Elem> c) const;

    std::string to_string(Elem a) const;
    /// "F_9", "F_4/F_2" style name.
    std::string name() const;

private:
    FiniteField(std::uint32_t p, const FiniteField* base, std::vector<Elem> modulus);

    Elem slow_mul(Elem a, Elem b) const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t order_;
    std::uint32_t degree_;
    const FiniteField* base_;
    const FiniteField* prime_;
    std::vector<Elem> modulus_;
    Elem gen_ = 1;
    Elem primitive_ = 1;
    std::vector<Elem> neg_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_table_;  // order^2 entries when small and p odd
};

/// Value-semantic element of a finite field.
class FqElement {
public:
    FqElement() = default;
    FqElement(const FiniteField& f, FiniteField::Elem v) : field_(&f), v_(v) {}

    const FiniteField& field() const noexcept { return *field_; }
    FiniteField::Elem value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    FqElement operator+(const FqElement& o) const { return {*field_, field_->add(v_, o.v_)}; }
    FqElement operator-(const FqElement& o) const { return {*field_, field_->sub(v_, o.v_)}; }
    FqElement operator-() const { return {*field_, field_->neg(v_)}; }
    FqElement operator*(const FqElement& o) const { return {*field_, field_->mul(v_, o.v_)}; }
    FqElement operator/(const FqElement& o) const { return {*field_, field_->div(v_, o.v_)}; }
    FqElement inverse() const { return {*field_, field_->inv(v_)}; }
    FqElement pow(std::uint64_t e) const { return {*field_, field_->pow(v_, e)}; }
    FqElement zero_like() const { return {*field_, 0}; }
    FqElement one_like() const { return {*field_, 1}; }

    friend bool operator==(const FqElement& a, const FqElement& b) noexcept {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }

    std::string to_string() const { return field_->to_string(v_); }

private:
    const FiniteField* field_ = nullptr;
    FiniteField::Elem v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const FqElement& a) { return os << a.to_string(); }

/// a * n for an integer n in the prime field.
inline FqElement scale(const FqElement& a, std::uint64_t n) { return {a.field(), a.field().scale(a.value(), n)}; }

}  // namespace carlitz
