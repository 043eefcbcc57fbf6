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


#include "carlitz/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "carlitz/error.hpp"

namespace carlitz {

namespace {

using I64 = std::int64_t;
constexpr I64 kX = LaurentSeries::kExact;

I64 sat_add(I64 a, I64 b) { return (a == kX || b == kX) ? kX : a + b; }

}  // namespace

LaurentSeries::LaurentSeries(const FiniteField& f, I64 lead, std::vector<Elem> coeffs, I64 abs_prec, Uniformizer u)
    : f_(&f), u_(u), lead_(lead), c_(std::move(coeffs)), prec_(abs_prec) {
    if (prec_ != kX) {
        const I64 keep = std::max<I64>(0, prec_ - lead_);
        if (static_cast<I64>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
    }
    normalize();
}

void LaurentSeries::normalize() {
    std::size_t z = 0;
    while (z < c_.size() && c_[z] == 0) ++z;
    if (z == c_.size()) {
        c_.clear();
        lead_ = 0;
        return;
    }
    if (z > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
        lead_ += static_cast<I64>(z);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LaurentSeries LaurentSeries::zero_to(const FiniteField& f, I64 abs_prec, Uniformizer u) {
    LaurentSeries r(f, u);
    r.prec_ = abs_prec;
    return r;
}

LaurentSeries LaurentSeries::monomial(const FiniteField& f, Elem c, I64 e, Uniformizer u) {
    return LaurentSeries(f, e, {c}, kX, u);
}

LaurentSeries LaurentSeries::from_apoly_at_infinity(const APoly& a) {
    std::vector<Elem> c(a.coeffs().rbegin(), a.coeffs().rend());
    return LaurentSeries(a.field(), -a.degree(), std::move(c), kX, Uniformizer::Pi);
}

LaurentSeries LaurentSeries::from_apoly_at_theta(const APoly& a) {
    return LaurentSeries(a.field(), 0, a.coeffs(), kX, Uniformizer::Theta);
}

LaurentSeries LaurentSeries::from_kfrac_at_infinity(const KFrac& a, I64 rel_prec) {
    if (a.is_integral()) return from_apoly_at_infinity(a.num());
    return from_apoly_at_infinity(a.num()).div(from_apoly_at_infinity(a.den()), rel_prec);
}

LaurentSeries LaurentSeries::from_kfrac_at_theta(const KFrac& a, I64 rel_prec) {
    if (a.is_integral()) return from_apoly_at_theta(a.num());
    return from_apoly_at_theta(a.num()).div(from_apoly_at_theta(a.den()), rel_prec);
}

I64 LaurentSeries::rel_precision() const noexcept {
    if (prec_ == kX) return kX;
    return prec_ - valuation();
}

LaurentSeries::Elem LaurentSeries::coeff(I64 e) const {
    if (e >= prec_) throw DomainError("field-tower", "precision-exceeded", "coefficient beyond known precision");
    if (c_.empty() || e < lead_) return 0;
    const I64 i = e - lead_;
    return i < static_cast<I64>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (f_ != o.f_) throw DomainError("field-tower", "field-mismatch", "series over different fields");
    const I64 P = std::min(prec_, o.prec_);
    if (c_.empty() && o.c_.empty()) return zero_to(*f_, P, u_);
    I64 lo = kX, hi = std::numeric_limits<I64>::min();
    for (const auto* s : {this, &o}) {
        if (s->c_.empty()) continue;
        lo = std::min(lo, s->lead_);
        hi = std::max(hi, s->lead_ + static_cast<I64>(s->c_.size()));
    }
    if (P != kX) hi = std::min(hi, P);
    if (lo >= hi) return zero_to(*f_, P, u_);
    std::vector<Elem> r(static_cast<std::size_t>(hi - lo), 0);
    for (const auto* s : {this, &o}) {
        for (std::size_t i = 0; i < s->c_.size(); ++i) {
            const I64 e = s->lead_ + static_cast<I64>(i);
            if (e >= hi) break;
            auto& slot = r[static_cast<std::size_t>(e - lo)];
            slot = f_->add(slot, s->c_[i]);
        }
    }
    return LaurentSeries(*f_, lo, std::move(r), P, u_);
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r(*this);
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (f_ != o.f_) throw DomainError("field-tower", "field-mismatch", "series over different fields");
    if (is_exact_zero() || o.is_exact_zero()) return zero_like();
    const I64 va = valuation(), vb = o.valuation();
    const I64 P = std::min(sat_add(va, o.prec_), sat_add(vb, prec_));
    if (c_.empty() || o.c_.empty()) return zero_to(*f_, P, u_);
    const I64 lead = va + vb;
    I64 n = static_cast<I64>(c_.size() + o.c_.size() - 1);
    if (P != kX) n = std::min(n, P - lead);
    std::vector<Elem> r(static_cast<std::size_t>(std::max<I64>(n, 0)), 0);
    for (std::size_t i = 0; i < c_.size() && static_cast<I64>(i) < n; ++i) {
        const Elem a = c_[i];
        if (a == 0) continue;
        const std::size_t jmax = std::min(o.c_.size(), static_cast<std::size_t>(n - static_cast<I64>(i)));
        for (std::size_t j = 0; j < jmax; ++j)
            if (o.c_[j] != 0) r[i + j] = f_->add(r[i + j], f_->mul(a, o.c_[j]));
    }
    return LaurentSeries(*f_, lead, std::move(r), P, u_);
}

LaurentSeries LaurentSeries::scale(Elem c) const {
    if (c == 0) return is_exact() ? zero_like() : zero_to(*f_, sat_add(valuation(), rel_precision()), u_);
    LaurentSeries r(*this);
    for (auto& x : r.c_) x = f_->mul(x, c);
    return r;
}

LaurentSeries LaurentSeries::shift(I64 k) const {
    LaurentSeries r(*this);
    if (!r.c_.empty()) r.lead_ += k;
    r.prec_ = sat_add(prec_, k);
    return r;
}

LaurentSeries LaurentSeries::frobenius(std::uint64_t Q) const {
    const I64 q = static_cast<I64>(Q);
    if (c_.empty()) return zero_to(*f_, prec_ == kX ? kX : prec_ * q, u_);
    std::vector<Elem> r((c_.size() - 1) * Q + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * Q] = f_->pow(c_[i], Q);
    return LaurentSeries(*f_, lead_ * q, std::move(r), prec_ == kX ? kX : prec_ * q, u_);
}

LaurentSeries LaurentSeries::pow(std::uint64_t e) const {
    const std::uint64_t p = f_->characteristic();
    std::uint64_t Q = 1;
    while (e > 0 && e % p == 0) {
        e /= p;
        Q *= p;
    }
    LaurentSeries result = one_like();
    LaurentSeries base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return Q == 1 ? result : result.frobenius(Q);
}

LaurentSeries LaurentSeries::inverse(I64 rel_prec) const {
    if (c_.empty()) throw DomainError("field-tower", "division-by-zero", "inverse of a zero series");
    if (c_.size() == 1 && prec_ == kX) return monomial(*f_, f_->inv(c_[0]), -lead_, u_);
    I64 n = rel_prec;
    if (prec_ != kX) n = std::min(n, rel_precision());
    if (n <= 0 || n == kX) throw DomainError("field-tower", "bad-precision", "inverse needs a positive finite precision");
    const Elem inv0 = f_->inv(c_[0]);
    std::vector<Elem> b(static_cast<std::size_t>(n), 0);
    b[0] = inv0;
    for (I64 k = 1; k < n; ++k) {
        Elem s = 0;
        const I64 top = std::min<I64>(k, static_cast<I64>(c_.size()) - 1);
        for (I64 i = 1; i <= top; ++i)
            s = f_->add(s, f_->mul(c_[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(k - i)]));
        b[static_cast<std::size_t>(k)] = f_->neg(f_->mul(s, inv0));
    }
    return LaurentSeries(*f_, -lead_, std::move(b), -lead_ + n, u_);
}

LaurentSeries LaurentSeries::truncate(I64 abs_prec) const {
    if (abs_prec >= prec_) return *this;
    return LaurentSeries(*f_, lead_, c_, abs_prec, u_);
}

LaurentSeries LaurentSeries::as_exact() const { return LaurentSeries(*f_, lead_, c_, kX, u_); }

LaurentSeries LaurentSeries::lift(const FiniteField& ext) const {
    if (!ext.contains(*f_)) throw DomainError("field-tower", "field-mismatch", ext.name() + " does not contain " + f_->name());
    LaurentSeries r(*this);
    r.f_ = &ext;
    return r;
}

LaurentSeries LaurentSeries::with_uniformizer(Uniformizer u) const {
    LaurentSeries r(*this);
    r.u_ = u;
    return r;
}

std::string LaurentSeries::to_string() const {
    const std::string var = u_ == Uniformizer::Pi ? "p" : "t";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const I64 e = lead_ + static_cast<I64>(i);
        if (!first) os << "+";
        first = false;
        std::string coef = f_->to_string(c_[i]);
        if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
        if (e == 0) {
            os << coef;
            continue;
        }
        if (c_[i] != 1) os << coef << "*";
        os << var;
        if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    if (first) os << "0";
    if (prec_ != kX) os << "+O(" << var << "^" << prec_ << ")";
    return os.str();
}

bool equal_to_precision(const LaurentSeries& a, const LaurentSeries& b) {
    const auto d = a - b;
    return d.is_zero();
}

Decomposition decompose(const LaurentSeries& alpha) {
    if (alpha.is_zero()) throw DomainError("field-tower", "no-decomposition", "zero has no sign or degree");
    const auto sgn = alpha.coeffs()[0];
    const auto inv = alpha.field().inv(sgn);
    auto unit = alpha.scale(inv).shift(-alpha.lead());
    return {-alpha.lead(), sgn, unit};
}

LaurentSeries one_unit_power(const LaurentSeries& u, const PadicInteger& y, std::int64_t N) {
    if (u.is_zero() || u.lead() != 0 || u.coeffs()[0] != 1)
        throw DomainError("field-tower", "not-one-unit", "base is not congruent to 1 mod the uniformizer");
    if (u.is_one()) return u;
    const std::uint64_t q = y.base();
    if (u.is_exact() && y.is_nonnegative_integer()) {
        const auto deg = static_cast<std::uint64_t>(u.coeffs().size() - 1);
        const auto yv = y.to_int();
        if (deg == 0) return u.one_like();
        if (yv && static_cast<std::uint64_t>(*yv) <= kExactPowerLimit / deg) {
            LaurentSeries result = u.one_like();
            LaurentSeries cur = u;
            for (std::size_t j = 0; j < y.head().size(); ++j) {
                if (y.head()[j] != 0) result *= cur.pow(y.head()[j]);
                if (j + 1 < y.head().size()) cur = cur.frobenius(q);
            }
            return result;
        }
    }
    if (N <= 0) throw DomainError("field-tower", "bad-precision", "precision must be positive");
    N = std::min(N, u.abs_precision());
    const LaurentSeries ut = u.truncate(N);
    const LaurentSeries w1 = ut - ut.one_like();
    if (w1.is_zero()) return ut.one_like().truncate(N);
    const std::int64_t w = w1.valuation();
    LaurentSeries result = ut.one_like().truncate(N);
    LaurentSeries cur = ut;
    std::int64_t reach = w;  // valuation of cur - 1
    for (std::size_t j = 0; reach < N; ++j) {
        const auto c = y.digit(j);
        if (c != 0) result = (result * cur.pow(c)).truncate(N);
        cur = cur.frobenius(q).truncate(N);
        reach *= static_cast<std::int64_t>(q);
    }
    return result;
}

}  // namespace carlitz
