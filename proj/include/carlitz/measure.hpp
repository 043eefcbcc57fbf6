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
#include <utility>
#include <vector>

#include "carlitz/carlitz_basis.hpp"
#include "carlitz/carlitz_expansion.hpp"
#include "carlitz/error.hpp"
#include "carlitz/lucas.hpp"

namespace carlitz {

// Truncated divided power series sum_{i < N} d_i u^i/i! over a ring R of
// characteristic p (KFrac, APoly, LaurentSeries).
template <class R>
class DPSeries {
public:
    DPSeries() = default;
    DPSeries(const R& zero, std::size_t order) : zero_(zero), c_(order, zero) {}
    DPSeries(const R& zero, std::vector<R> coeffs) : zero_(zero), c_(std::move(coeffs)) {}

    static DPSeries one(const R& zero, std::size_t order) { return generator(zero, 0, order); }
    // u^i/i!
    static DPSeries generator(const R& zero, std::size_t i, std::size_t order) {
        DPSeries r(zero, order);
        if (i < order) r.c_[i] = zero.one_like();
        return r;
    }

    std::size_t order() const noexcept { return c_.size(); }
    const R& zero() const noexcept { return zero_; }
    const R& coeff(std::size_t i) const { return c_.at(i); }
    R& coeff(std::size_t i) { return c_.at(i); }
    const std::vector<R>& coeffs() const noexcept { return c_; }
    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    DPSeries operator+(const DPSeries& o) const {
        DPSeries r(zero_, std::min(order(), o.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    DPSeries operator-(const DPSeries& o) const {
        DPSeries r(zero_, std::min(order(), o.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    DPSeries scale(const R& s) const {
        DPSeries r(*this);
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    // (u^i/i!)(u^j/j!) = binom(i+j, i) u^(i+j)/(i+j)!
    DPSeries operator*(const DPSeries& o) const {
        const std::uint32_t p = zero_.field().characteristic();
        DPSeries r(zero_, std::min(order(), o.order()));
        for (std::size_t i = 0; i < r.order(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < r.order(); ++j) {
                if (o.c_[j].is_zero()) continue;
                const auto b = binom_mod_p(i + j, i, p);
                if (b == 0) continue;
                r.c_[i + j] = r.c_[i + j] + (c_[i] * o.c_[j]).scale(zero_.field().from_int(b));
            }
        }
        return r;
    }
    DPSeries truncate(std::size_t n) const {
        DPSeries r(*this);
        if (n < r.c_.size()) r.c_.resize(n, zero_);
        return r;
    }

    friend bool operator==(const DPSeries& a, const DPSeries& b) { return a.c_ == b.c_; }

private:
    R zero_;
    std::vector<R> c_;
};

inline constexpr std::size_t kDefaultOrder = 0;  // means q^3

// mu_j = integral of G_j for j < order.
struct MeasureMoments {
    std::vector<KFrac> moments;
    std::size_t order() const noexcept { return moments.size(); }
    friend bool operator==(const MeasureMoments& a, const MeasureMoments& b) { return a.moments == b.moments; }
};

std::size_t resolve_order(const CarlitzBasis& cb, std::size_t order);

MeasureMoments zero_measure(const CarlitzBasis& cb, std::size_t order = kDefaultOrder);
MeasureMoments dirac(const CarlitzBasis& cb, const APoly& a, std::size_t order = kDefaultOrder);
// sum_i w_i delta_{a_i}
MeasureMoments dirac_combination(const CarlitzBasis& cb, const std::vector<std::pair<KFrac, APoly>>& terms,
                                 std::size_t order = kDefaultOrder);
// The measure whose transform is u^i/i!.
MeasureMoments generator_measure(const CarlitzBasis& cb, std::size_t i, std::size_t order = kDefaultOrder);

DPSeries<KFrac> wagner_transform(const MeasureMoments& mu);
MeasureMoments inverse_wagner(const DPSeries<KFrac>& h);
MeasureMoments convolve(const MeasureMoments& mu, const MeasureMoments& nu);

// Integral of f = sum a_i G_i against mu.
KFrac integrate(const MeasureMoments& mu, const WagnerExpansion& f);
// (mu * f)(x) = integral of f(x + y) dmu(y).
WagnerExpansion convolve_function(const MeasureMoments& mu, const WagnerExpansion& f);

// f = sum a_i G_i  ->  sum a_i z^i
struct TatePolynomial {
    std::vector<KFrac> coeffs;
    friend bool operator==(const TatePolynomial& a, const TatePolynomial& b) { return a.coeffs == b.coeffs; }
};

TatePolynomial hat_transform(const WagnerExpansion& f);
WagnerExpansion inverse_hat(const TatePolynomial& g);
// d_i z^k = binom(k, i) z^(k-i)
TatePolynomial divided_derivative_z(const TatePolynomial& g, std::uint64_t i);

}  // namespace carlitz
