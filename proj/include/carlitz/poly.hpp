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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace carlitz {

// Polynomial in x over a ring R (APoly, KFrac, LaurentSeries). R has no
// global zero, so a prototype zero is carried along.
template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(R zero) : zero_(std::move(zero)) {}
    Poly(R zero, std::vector<R> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

    static Poly x(const R& zero) { return Poly(zero, {zero, zero.one_like()}); }
    static Poly constant(const R& c) { return Poly(c.zero_like(), {c}); }

    const R& zero() const noexcept { return zero_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<R>& coeffs() const noexcept { return c_; }
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    const R& leading() const { return c_.back(); }

    Poly operator+(const Poly& o) const {
        std::vector<R> r(std::max(c_.size(), o.c_.size()), zero_);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < c_.size() && i < o.c_.size()) r[i] = c_[i] + o.c_[i];
            else if (i < c_.size()) r[i] = c_[i];
            else r[i] = o.c_[i];
        }
        return Poly(zero_, std::move(r));
    }
    Poly operator-() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(-c);
        return Poly(zero_, std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (c_.empty() || o.c_.empty()) return Poly(zero_);
        std::vector<R> r(c_.size() + o.c_.size() - 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                if (!o.c_[j].is_zero()) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Poly(zero_, std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scale(const R& s) const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(c * s);
        return Poly(zero_, std::move(r));
    }
    Poly pow(std::uint64_t e) const {
        Poly result = constant(zero_.one_like());
        Poly base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    // Division by a monic divisor (leading coefficient one).
    std::pair<Poly, Poly> divmod_monic(const Poly& d) const {
        std::vector<R> rem = c_;
        if (rem.size() < d.c_.size()) return {Poly(zero_), *this};
        std::vector<R> quo(rem.size() - d.c_.size() + 1, zero_);
        const std::size_t dd = d.c_.size() - 1;
        for (std::size_t k = rem.size(); k-- > dd;) {
            if (rem[k].is_zero()) continue;
            const R c = rem[k];
            const std::size_t s = k - dd;
            quo[s] = c;
            for (std::size_t i = 0; i <= dd; ++i) rem[s + i] = rem[s + i] - c * d.c_[i];
        }
        return {Poly(zero_, std::move(quo)), Poly(zero_, std::move(rem))};
    }

    R eval(const R& x) const {
        R r = zero_;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    // Map every coefficient through fn, e.g. to change the coefficient ring.
    template <class S, class Fn>
    Poly<S> map(const S& zero, Fn fn) const {
        std::vector<S> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(fn(c));
        return Poly<S>(zero, std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = c_[k].to_string();
            if (k == 0) {
                out += cs;
                continue;
            }
            if (!c_[k].is_one()) out += "(" + cs + ")*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    R zero_;
    std::vector<R> c_;
};

}  // namespace carlitz
