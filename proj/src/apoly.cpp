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


#include "carlitz/apoly.hpp"

#include <algorithm>
#include <sstream>

#include "carlitz/error.hpp"
#include "carlitz/lucas.hpp"

namespace carlitz {

APoly::APoly(const FiniteField& f, std::vector<Elem> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= f.order()) throw DomainError("field-tower", "bad-coefficient", "coefficient outside " + f.name());
    trim();
}

APoly APoly::constant(const FiniteField& f, Elem c) { return APoly(f, {c}); }

APoly APoly::monomial(const FiniteField& f, Elem c, std::size_t n) {
    if (c == 0) return APoly(f);
    std::vector<Elem> v(n + 1, 0);
    v[n] = c;
    return APoly(f, std::move(v));
}

void APoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

APoly APoly::operator+(const APoly& o) const {
    APoly r(*f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->add(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

APoly APoly::operator-(const APoly& o) const {
    APoly r(*f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->sub(coeff(i), o.coeff(i));
    r.trim();
    return r;
}

APoly APoly::operator-() const {
    APoly r(*this);
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

APoly APoly::operator*(const APoly& o) const {
    if (c_.empty() || o.c_.empty()) return APoly(*f_);
    APoly r(*f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Elem a = c_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(a, o.c_[j]));
        }
    }
    r.trim();
    return r;
}

APoly APoly::scale(Elem c) const {
    APoly r(*this);
    for (auto& x : r.c_) x = f_->mul(x, c);
    r.trim();
    return r;
}

APoly APoly::pow_char(std::uint64_t pk) const {
    if (c_.empty()) return *this;
    APoly r(*f_);
    r.c_.assign((c_.size() - 1) * pk + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * pk] = f_->pow(c_[i], pk);
    return r;
}

APoly APoly::pow(std::uint64_t e) const {
    APoly result = one_like();
    APoly base = *this;
    // Split off the largest power of p dividing e so Frobenius does the work.
    const std::uint64_t p = f_->characteristic();
    std::uint64_t pk = 1;
    while (e > 0 && e % p == 0) {
        e /= p;
        pk *= p;
    }
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return pk == 1 ? result : result.pow_char(pk);
}

APoly APoly::shift(std::size_t n) const {
    if (c_.empty()) return *this;
    APoly r(*f_);
    r.c_.assign(n, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::pair<APoly, APoly> APoly::divmod(const APoly& d) const {
    if (d.is_zero()) throw DomainError("field-tower", "division-by-zero", "division by the zero polynomial");
    APoly rem(*this);
    if (rem.c_.size() < d.c_.size()) return {APoly(*f_), rem};
    APoly quo(*f_);
    quo.c_.assign(rem.c_.size() - d.c_.size() + 1, 0);
    const Elem inv_lead = f_->inv(d.c_.back());
    const std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = rem.c_.size(); k-- > dd;) {
        const Elem top = rem.c_[k];
        if (top == 0) continue;
        const Elem c = f_->mul(top, inv_lead);
        const std::size_t s = k - dd;
        quo.c_[s] = c;
        for (std::size_t i = 0; i <= dd; ++i) rem.c_[s + i] = f_->sub(rem.c_[s + i], f_->mul(c, d.c_[i]));
    }
    quo.trim();
    rem.trim();
    return {quo, rem};
}

APoly APoly::exact_div(const APoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw DomainError("field-tower", "inexact-division", "division leaves a remainder");
    return q;
}

APoly APoly::monic() const {
    if (c_.empty()) return *this;
    return scale(f_->inv(c_.back()));
}

APoly::Elem APoly::eval(Elem x) const {
    Elem r = 0;
    for (std::size_t k = c_.size(); k-- > 0;) r = f_->add(f_->mul(r, x), c_[k]);
    return r;
}

APoly APoly::compose(const APoly& g) const {
    APoly r(*f_);
    for (std::size_t k = c_.size(); k-- > 0;) r = r * g + constant(*f_, c_[k]);
    return r;
}

bool operator<(const APoly& a, const APoly& b) noexcept {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t k = a.c_.size(); k-- > 0;)
        if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    return false;
}

std::string APoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string coef = f_->to_string(c_[k]);
        if (coef.find('+') != std::string::npos || coef.find('*') != std::string::npos) coef = "(" + coef + ")";
        if (k == 0) {
            os << coef;
            continue;
        }
        if (c_[k] != 1) os << coef << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

APoly gcd(const APoly& a, const APoly& b) {
    APoly x = a, y = b;
    while (!y.is_zero()) {
        APoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

APoly lcm(const APoly& a, const APoly& b) {
    if (a.is_zero() || b.is_zero()) return a.zero_like();
    return (a * b).exact_div(gcd(a, b)).monic();
}

APoly divided_derivative(const APoly& f, std::uint64_t j) {
    const auto& cs = f.coeffs();
    if (j >= cs.size()) return f.zero_like();
    const FiniteField& F = f.field();
    std::vector<APoly::Elem> out(cs.size() - j, 0);
    for (std::size_t i = j; i < cs.size(); ++i) {
        const auto b = binom_mod_p(i, j, F.characteristic());
        if (b != 0) out[i - j] = F.mul(cs[i], F.from_int(b));
    }
    return APoly(F, std::move(out));
}

std::vector<APoly> divided_derivative_table(const APoly& f) {
    std::vector<APoly> out;
    const std::int64_t d = std::max<std::int64_t>(f.degree(), 0);
    for (std::int64_t j = 0; j <= d; ++j) out.push_back(divided_derivative(f, static_cast<std::uint64_t>(j)));
    return out;
}

std::uint64_t count_or_throw(std::uint64_t q, std::uint64_t d) {
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < d; ++i) {
        n *= q;
        if (n > kEnumerationLimit)
            throw GuardError("field-tower", "enumeration-too-large",
                             "q^d = " + std::to_string(q) + "^" + std::to_string(d) + " exceeds 10^7");
    }
    return n;
}

APoly poly_from_index(const FiniteField& f, std::uint64_t n) {
    std::vector<APoly::Elem> c;
    for (; n > 0; n /= f.order()) c.push_back(static_cast<APoly::Elem>(n % f.order()));
    return APoly(f, std::move(c));
}

std::vector<APoly> enumerate_below(const FiniteField& f, std::uint64_t d) {
    const std::uint64_t n = count_or_throw(f.order(), d);
    std::vector<APoly> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(poly_from_index(f, i));
    return out;
}

std::vector<APoly> enumerate_monic(const FiniteField& f, std::uint64_t d) {
    const std::uint64_t n = count_or_throw(f.order(), d);
    std::vector<APoly> out;
    out.reserve(n);
    const APoly lead = APoly::monomial(f, 1, d);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(lead + poly_from_index(f, i));
    return out;
}

}  // namespace carlitz
