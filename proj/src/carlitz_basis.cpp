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


#include "carlitz/carlitz_basis.hpp"

#include <algorithm>

#include "carlitz/error.hpp"
#include "carlitz/lucas.hpp"

namespace carlitz {

Family parse_family(const std::string& s) {
    if (s == "e") return Family::e;
    if (s == "g") return Family::g;
    if (s == "G") return Family::G;
    if (s == "ghat") return Family::ghat;
    if (s == "Ghat") return Family::Ghat;
    throw DomainError("carlitz-basis", "bad-family", "unknown family '" + s + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::e: return "e";
        case Family::g: return "g";
        case Family::G: return "G";
        case Family::ghat: return "ghat";
        case Family::Ghat: return "Ghat";
    }
    return "?";
}

CarlitzBasis::CarlitzBasis(const FiniteField& f, std::uint64_t max_index) : f_(&f), max_index_(max_index) {
    if (max_index_ == 0) max_index_ = ipow(f.order(), 3);
    D_.push_back(APoly::constant(f, 1));
    L_.push_back(APoly::constant(f, 1));
    lin_.push_back({APoly::constant(f, 1)});
}

APoly CarlitzBasis::bracket(std::uint64_t i) const {
    if (i == 0) throw DomainError("carlitz-basis", "bad-index", "[0] is undefined");
    if (i > 20) throw GuardError("carlitz-basis", "index-too-large", "q^i too large for [i]");
    const std::uint64_t qi = ipow(q(), i);
    if (qi > (1u << 24)) throw GuardError("carlitz-basis", "index-too-large", "q^i too large for [i]");
    return APoly::monomial(*f_, 1, qi) - APoly::theta(*f_);
}

APoly CarlitzBasis::D(std::uint64_t i) const {
    std::lock_guard lock(mu_);
    while (D_.size() <= i) {
        const std::uint64_t n = D_.size();
        D_.push_back(bracket(n) * D_.back().pow(q()));
    }
    return D_[i];
}

APoly CarlitzBasis::L(std::uint64_t i) const {
    std::lock_guard lock(mu_);
    while (L_.size() <= i) {
        const std::uint64_t n = L_.size();
        L_.push_back(bracket(n) * L_.back());
    }
    return L_[i];
}

APoly CarlitzBasis::factorial(std::uint64_t j) const {
    APoly r = APoly::constant(*f_, 1);
    const auto c = digits(j, q());
    for (std::size_t t = 0; t < c.size(); ++t)
        if (c[t] != 0) r *= D(t).pow(c[t]);
    return r;
}

std::vector<APoly> CarlitzBasis::e_linear(std::uint64_t t) const {
    {
        std::lock_guard lock(mu_);
        if (t < lin_.size()) return lin_[t];
    }
    // D() takes the lock itself, so gather what the recurrence needs first.
    std::vector<APoly> prev = e_linear(t - 1);
    const APoly dq = D(t - 1).pow(q() - 1);
    std::vector<APoly> cur(t + 1, APoly(*f_));
    for (std::uint64_t j = 0; j <= t; ++j) {
        APoly v(*f_);
        if (j >= 1) v = prev[j - 1].pow(q());
        if (j < t) v -= dq * prev[j];
        cur[j] = v;
    }
    std::lock_guard lock(mu_);
    if (lin_.size() == t) lin_.push_back(cur);
    return cur;
}

void CarlitzBasis::check_index(std::uint64_t j) const {
    if (j > max_index_)
        throw GuardError("carlitz-basis", "index-too-large",
                         "family index " + std::to_string(j) + " exceeds table bound " + std::to_string(max_index_));
}

XPolyA CarlitzBasis::e_poly(std::uint64_t t) const {
    const auto lin = e_linear(t);
    const APoly zero(*f_);
    std::vector<APoly> c(ipow(q(), t) + 1, zero);
    for (std::uint64_t j = 0; j <= t; ++j) c[ipow(q(), j)] = lin[j];
    return XPolyA(zero, std::move(c));
}

XPolyA CarlitzBasis::g_poly(std::uint64_t j) const {
    check_index(j);
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find({0, j}); it != cache_.end()) return it->second;
    }
    const APoly zero(*f_);
    XPolyA r = XPolyA::constant(zero.one_like());
    const auto c = digits(j, q());
    for (std::size_t t = 0; t < c.size(); ++t)
        if (c[t] != 0) r *= e_poly(t).pow(c[t]);
    std::lock_guard lock(mu_);
    cache_.emplace(std::make_pair(0, j), r);
    return r;
}

XPolyA CarlitzBasis::ghat_poly(std::uint64_t j) const {
    check_index(j);
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find({1, j}); it != cache_.end()) return it->second;
    }
    const APoly zero(*f_);
    XPolyA r = XPolyA::constant(zero.one_like());
    const auto c = digits(j, q());
    for (std::size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0) continue;
        XPolyA factor = e_poly(t).pow(c[t]);
        if (c[t] == q() - 1) factor = factor - XPolyA::constant(D(t).pow(q() - 1));
        r *= factor;
    }
    std::lock_guard lock(mu_);
    cache_.emplace(std::make_pair(1, j), r);
    return r;
}

namespace {

XPolyK divide_by(const XPolyA& p, const APoly& d) {
    const KFrac zero(p.zero().field());
    return p.map<KFrac>(zero, [&](const APoly& c) { return KFrac(c, d); });
}

}  // namespace

XPolyK CarlitzBasis::G_poly(std::uint64_t j) const { return divide_by(g_poly(j), factorial(j)); }
XPolyK CarlitzBasis::Ghat_poly(std::uint64_t j) const { return divide_by(ghat_poly(j), factorial(j)); }

XPolyK CarlitzBasis::family_poly(Family fam, std::uint64_t j) const {
    const APoly one = APoly::constant(*f_, 1);
    switch (fam) {
        case Family::e: return divide_by(e_poly(j), one);
        case Family::g: return divide_by(g_poly(j), one);
        case Family::ghat: return divide_by(ghat_poly(j), one);
        case Family::G: return G_poly(j);
        case Family::Ghat: return Ghat_poly(j);
    }
    throw DomainError("carlitz-basis", "bad-family", "unknown family");
}

namespace {

// The families at a point of any ring R, given e_t(x) for each t and an
// embedding of A into R.
template <class R, class ET, class Embed>
R family_value(const CarlitzBasis& cb, Family fam, std::uint64_t j, const R& x, ET e_at, Embed embed) {
    const std::uint32_t q = cb.q();
    if (fam == Family::e) return e_at(j);
    const auto c = digits(j, q);
    R r = x.one_like();
    for (std::size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0) continue;
        const R et = e_at(t);
        R v = et.pow(c[t]);
        const bool dual = fam == Family::ghat || fam == Family::Ghat;
        if (dual && c[t] == q - 1) v = v - embed(cb.D(t).pow(q - 1));
        r = r * v;
    }
    return r;
}

}  // namespace

APoly CarlitzBasis::e_at(std::uint64_t t, const APoly& x) const {
    const auto lin = e_linear(t);
    APoly r(*f_);
    APoly xp = x;
    for (std::uint64_t j = 0; j <= t; ++j) {
        r += lin[j] * xp;
        if (j < t) xp = xp.pow(q());
    }
    return r;
}

APoly CarlitzBasis::g_at(std::uint64_t j, const APoly& x) const {
    return family_value<APoly>(
        *this, Family::g, j, x, [&](std::uint64_t t) { return e_at(t, x); }, [](const APoly& a) { return a; });
}

APoly CarlitzBasis::ghat_at(std::uint64_t j, const APoly& x) const {
    return family_value<APoly>(
        *this, Family::ghat, j, x, [&](std::uint64_t t) { return e_at(t, x); }, [](const APoly& a) { return a; });
}

KFrac CarlitzBasis::G_at(std::uint64_t j, const APoly& x) const { return KFrac(g_at(j, x), factorial(j)); }
KFrac CarlitzBasis::Ghat_at(std::uint64_t j, const APoly& x) const { return KFrac(ghat_at(j, x), factorial(j)); }

KFrac CarlitzBasis::eval(Family fam, std::uint64_t j, const KFrac& x) const {
    auto et = [&](std::uint64_t t) {
        const auto lin = e_linear(t);
        KFrac r = x.zero_like();
        KFrac xp = x;
        for (std::uint64_t i = 0; i <= t; ++i) {
            r += KFrac(lin[i]) * xp;
            if (i < t) xp = xp.pow(q());
        }
        return r;
    };
    KFrac v = family_value<KFrac>(*this, fam, j, x, et, [](const APoly& a) { return KFrac(a); });
    if (fam == Family::G || fam == Family::Ghat) v = v / KFrac(factorial(j));
    return v;
}

LaurentSeries CarlitzBasis::eval(Family fam, std::uint64_t j, const LaurentSeries& x, std::int64_t rel_prec) const {
    auto embed = [&](const APoly& a) {
        auto s = LaurentSeries::from_apoly_at_infinity(a);
        return x.field().contains(*f_) ? s.lift(x.field()) : s;
    };
    auto et = [&](std::uint64_t t) {
        const auto lin = e_linear(t);
        LaurentSeries r = x.zero_like();
        LaurentSeries xp = x;
        for (std::uint64_t i = 0; i <= t; ++i) {
            r += embed(lin[i]) * xp;
            if (i < t) xp = xp.frobenius(q());
        }
        return r;
    };
    LaurentSeries v = family_value<LaurentSeries>(*this, fam, j, x, et, embed);
    if (fam == Family::G || fam == Family::Ghat) v = v.div(embed(factorial(j)), rel_prec);
    return v;
}

MatrixTriple matrix_triple(const CarlitzBasis& cb, const std::vector<APoly>& x) {
    if (x.empty()) throw DomainError("carlitz-basis", "bad-input", "need at least one element");
    const std::uint64_t m = x.size() - 1;
    for (const auto& xi : x)
        if (xi.degree() > static_cast<std::int64_t>(m))
            throw DomainError("carlitz-basis", "degree-violation", "inputs must lie in A_{<m+1}");
    const FiniteField& F = cb.field();
    const APoly zero(F);
    MatrixTriple t{m, x, Matrix<APoly>(m + 1, m + 1, zero), Matrix<APoly>(m + 1, m + 1, zero),
                   Matrix<APoly>(m + 1, m + 1, zero)};
    for (std::uint64_t i = 0; i <= m; ++i) {
        const APoly br = i == 0 ? zero : cb.bracket(i);
        APoly pw = zero.one_like();
        for (std::uint64_t j = 0; j <= m; ++j) {
            t.M(i, j) = x[j].pow(ipow(cb.q(), i));
            t.V(i, j) = pw;
            pw *= br;
            t.W(i, j) = divided_derivative(x[j], i);
        }
    }
    if (!(t.M == t.V * t.W)) throw DomainError("carlitz-basis", "identity-failed", "M != VW");
    return t;
}

VandermondeFactorial vandermonde_factorial(const CarlitzBasis& cb, std::uint64_t m) {
    if (m == 0) throw DomainError("carlitz-basis", "bad-index", "m must be positive");
    std::vector<APoly> x;
    for (std::uint64_t j = 0; j <= m; ++j) x.push_back(APoly::monomial(cb.field(), 1, j));
    const auto t = matrix_triple(cb, x);
    const std::uint64_t qm = ipow(cb.q(), m);
    return {m, bareiss_det(t.V), bareiss_det(t.M), cb.factorial((qm - 1) / (cb.q() - 1)),
            cb.factorial((qm * cb.q() - 1) / (cb.q() - 1))};
}

FrobeniusExpansion frobenius_expand(const CarlitzBasis& cb, const APoly& f, std::uint64_t i) {
    const APoly br = i == 0 ? APoly(cb.field()) : cb.bracket(i);
    APoly sum(cb.field());
    APoly pw = sum.one_like();
    const std::int64_t d = std::max<std::int64_t>(f.degree(), 0);
    for (std::int64_t j = 0; j <= d; ++j) {
        sum += divided_derivative(f, static_cast<std::uint64_t>(j)) * pw;
        pw *= br;
    }
    return {sum, f.pow(ipow(cb.q(), i))};
}

}  // namespace carlitz
