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


#include "carlitz/digit_action.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "carlitz/lucas.hpp"

namespace carlitz {

namespace {

using I64 = std::int64_t;
constexpr I64 kX = LaurentSeries::kExact;
constexpr std::uint64_t kBlockLimit = 1u << 20;

I64 sat_add(I64 a, I64 b) {
    if (a == kX || b == kX) return kX;
    return a + b;
}

I64 floor_div(I64 a, I64 b) {
    I64 d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

}  // namespace

DigitPermutation::DigitPermutation(std::uint32_t q, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs)
    : q_(q) {
    if (q < 2) throw DomainError("digit-action", "bad-base", "q must be >= 2");
    std::set<std::uint32_t> dom, img;
    for (const auto& [a, b] : pairs) {
        if (!dom.insert(a).second)
            throw DomainError("digit-action", "not-bijective", "position " + std::to_string(a) + " listed twice");
        if (!img.insert(b).second)
            throw DomainError("digit-action", "not-bijective", "image " + std::to_string(b) + " listed twice");
        if (a != b) map_[a] = b;
    }
    if (dom != img) throw DomainError("digit-action", "not-bijective", "domain and image differ");
    check_guard();
}

void DigitPermutation::check_guard() const {
    if (bound() > 20 || ipow(q_, bound()) > kBlockLimit)
        throw GuardError("digit-action", "support-too-large", "moved positions must satisfy q^bound <= 2^20");
}

DigitPermutation DigitPermutation::swap(std::uint32_t q, std::uint32_t i, std::uint32_t j) {
    if (i == j) return DigitPermutation(q);
    return DigitPermutation(q, {{i, j}, {j, i}});
}

DigitPermutation DigitPermutation::parse(std::uint32_t q, const std::string& text) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw DomainError("digit-action", "bad-permutation", "expected from:to, got '" + item + "'");
        try {
            std::size_t used = 0;
            const auto a = std::stoul(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("a");
            const auto rest = item.substr(colon + 1);
            const auto b = std::stoul(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("b");
            pairs.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        } catch (const std::logic_error&) {
            throw DomainError("digit-action", "bad-permutation", "expected from:to, got '" + item + "'");
        }
    }
    return DigitPermutation(q, pairs);
}

std::uint32_t DigitPermutation::operator()(std::uint32_t pos) const {
    const auto it = map_.find(pos);
    return it == map_.end() ? pos : it->second;
}

DigitPermutation DigitPermutation::inverse() const {
    DigitPermutation r(q_);
    for (const auto& [a, b] : map_) r.map_[b] = a;
    return r;
}

DigitPermutation DigitPermutation::compose(const DigitPermutation& other) const {
    if (other.q_ != q_) throw DomainError("digit-action", "base-mismatch", "permutations over different q");
    DigitPermutation r(q_);
    std::set<std::uint32_t> pts;
    for (const auto& kv : map_) pts.insert(kv.first);
    for (const auto& kv : other.map_) pts.insert(kv.first);
    for (auto j : pts) {
        const auto v = (*this)(other(j));
        if (v != j) r.map_[j] = v;
    }
    r.check_guard();
    return r;
}

I64 DigitPermutation::apply(I64 n) const {
    if (map_.empty()) return n;
    const auto K = bound();
    const auto Q = static_cast<I64>(ipow(q_, K));
    const I64 hi = floor_div(n, Q);
    I64 lo = n - hi * Q;
    I64 out = 0;
    for (std::uint32_t k = 0; k < K; ++k, lo /= q_)
        out += (lo % q_) * static_cast<I64>(ipow(q_, (*this)(k)));
    return hi * Q + out;
}

std::string DigitPermutation::to_string() const {
    std::string s;
    for (const auto& [a, b] : map_) {
        if (!s.empty()) s += ",";
        s += std::to_string(a) + ":" + std::to_string(b);
    }
    return s.empty() ? "id" : s;
}

PadicInteger rho_zp(const DigitPermutation& rho, const PadicInteger& y) {
    if (rho.q() != y.base()) throw DomainError("digit-action", "base-mismatch", "digit base differs from q");
    const std::size_t len = std::max<std::size_t>(y.head().size(), rho.bound());
    const auto inv = rho.inverse();
    std::vector<std::uint32_t> h(len);
    for (std::size_t k = 0; k < len; ++k) h[k] = y.digit(inv(static_cast<std::uint32_t>(k)));
    return PadicInteger(y.base(), std::move(h), y.tail());
}

PadicInteger rho_hat(const DigitPermutation& rho, const PadicInteger& y) { return -rho_zp(rho, -y); }

I64 min_image_from(const DigitPermutation& rho, I64 n) {
    if (rho.is_identity()) return n;
    const auto Q = static_cast<I64>(ipow(rho.q(), rho.bound()));
    // beyond the first full block every image is at least (hi+1) Q
    const I64 end = (floor_div(n, Q) + 1) * Q;
    I64 best = end;
    for (I64 i = n; i < end; ++i) best = std::min(best, rho.apply(i));
    return best;
}

// ---------------------------------------------------------------- Mahler

std::uint32_t binom_mod_p(const PadicInteger& y, std::uint64_t j, std::uint32_t p) {
    const std::uint32_t q = y.base();
    std::uint32_t r = 0;
    for (std::uint64_t t = 1; t < q; t *= p) ++r;
    std::uint64_t res = 1;
    for (std::uint64_t t = 0; j > 0; ++t, j /= p) {
        const auto jd = static_cast<std::uint32_t>(j % p);
        std::uint32_t yd = y.digit(static_cast<std::size_t>(t / r));
        for (std::uint64_t s = 0; s < t % r; ++s) yd /= p;
        yd %= p;
        if (jd > yd) return 0;
        res = res * small_binom_mod(yd, jd, p) % p;
    }
    return static_cast<std::uint32_t>(res);
}

void MahlerFunction::set(std::uint64_t j, const LaurentSeries& c) {
    if (c.is_exact_zero() || (c.is_zero() && c.abs_precision() >= tail_)) {
        c_.erase(j);
        return;
    }
    c_[j] = c;
}

LaurentSeries MahlerFunction::coeff(std::uint64_t j) const {
    const auto it = c_.find(j);
    if (it != c_.end()) return it->second;
    return tail_ == kX ? LaurentSeries(*f_) : LaurentSeries::zero_to(*f_, tail_);
}

MahlerFunction MahlerFunction::binomial(const FiniteField& f, std::uint64_t j) {
    MahlerFunction m(f);
    m.set(j, LaurentSeries::one(f));
    return m;
}

MahlerFunction MahlerFunction::power(const LaurentSeries& u, I64 N) {
    if (u.is_zero() || u.lead() != 0 || u.coeffs()[0] != 1)
        throw DomainError("digit-action", "not-one-unit", "base is not congruent to 1 mod pi");
    const LaurentSeries w = (u - u.one_like()).truncate(N);
    MahlerFunction m(u.field(), N);
    m.set(0, LaurentSeries::one(u.field()));
    if (w.is_exact_zero()) {
        m.tail_ = kX;
        return m;
    }
    if (w.is_zero()) return m;
    LaurentSeries c = LaurentSeries::one(u.field());
    for (std::uint64_t j = 1; static_cast<I64>(j) * w.valuation() < N; ++j) {
        c = (c * w).truncate(N);
        m.set(j, c);
    }
    return m;
}

LaurentSeries MahlerFunction::eval(const PadicInteger& y) const {
    const std::uint32_t p = f_->characteristic();
    LaurentSeries s = tail_ == kX ? LaurentSeries(*f_) : LaurentSeries::zero_to(*f_, tail_);
    for (const auto& [j, c] : c_) {
        const auto b = binom_mod_p(y, j, p);
        if (b != 0) s += c.scale(f_->from_int(b));
    }
    return s;
}

MahlerFunction MahlerFunction::operator+(const MahlerFunction& o) const {
    MahlerFunction r(*f_, std::min(tail_, o.tail_));
    for (const auto& [j, c] : c_) r.c_[j] = c;
    for (const auto& [j, c] : o.c_) {
        auto it = r.c_.find(j);
        r.set(j, it == r.c_.end() ? c : it->second + c);
    }
    return r;
}

MahlerFunction MahlerFunction::scale(const LaurentSeries& s) const {
    const I64 vs = s.valuation();
    MahlerFunction r(*f_, s.is_exact_zero() ? kX : sat_add(tail_, vs));
    for (const auto& [j, c] : c_) r.set(j, c * s);
    return r;
}

MahlerFunction MahlerFunction::operator*(const MahlerFunction& o) const {
    const std::uint32_t p = f_->characteristic();
    auto vmin = [](const MahlerFunction& m) {
        I64 v = m.tail_;
        for (const auto& kv : m.c_) v = std::min(v, kv.second.valuation());
        return v;
    };
    const I64 tail = std::min({sat_add(tail_, vmin(o)), sat_add(o.tail_, vmin(*this)), sat_add(tail_, o.tail_)});
    MahlerFunction r(*f_, tail);
    for (const auto& [a, ca] : c_)
        for (const auto& [b, cb] : o.c_) {
            const LaurentSeries prod = ca * cb;
            for (std::uint64_t k = 0; k <= std::min(a, b); ++k) {
                const auto w = multinomial3_mod_p(k, a - k, b - k, p);
                if (w == 0) continue;
                const auto idx = a + b - k;
                auto it = r.c_.find(idx);
                const LaurentSeries term = prod.scale(f_->from_int(w));
                r.set(idx, it == r.c_.end() ? term : it->second + term);
            }
        }
    return r;
}

MahlerFunction act_function(const DigitPermutation& rho, const MahlerFunction& f) {
    MahlerFunction r(f.field(), f.tail_valuation());
    for (const auto& [j, c] : f.coeffs()) r.set(static_cast<std::uint64_t>(rho.apply(static_cast<I64>(j))), c);
    return r;
}

// ---------------------------------------------------------------- k_inf

namespace {

I64 image(const DigitPermutation& rho, I64 e, NegativeExponents conv) {
    if (e < 0 && conv == NegativeExponents::Fixed) return e;
    return rho.apply(e);
}

}  // namespace

LaurentSeries act_kinfty(const DigitPermutation& rho, const LaurentSeries& x, NegativeExponents conv) {
    if (x.uniformizer() != Uniformizer::Pi)
        throw DomainError("digit-action", "bad-uniformizer", "the action is defined on pi-adic expansions");
    if (rho.is_identity()) return x;
    I64 out_prec = kX;
    if (!x.is_exact()) {
        const I64 P = x.abs_precision();
        out_prec = (P < 0 && conv == NegativeExponents::Fixed) ? P : min_image_from(rho, P);
    }
    if (x.is_zero()) return x.is_exact() ? x : LaurentSeries::zero_to(x.field(), out_prec);
    std::vector<std::pair<I64, FiniteField::Elem>> terms;
    I64 lo = std::numeric_limits<I64>::max(), hi = std::numeric_limits<I64>::min();
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        const I64 e = image(rho, x.lead() + static_cast<I64>(i), conv);
        if (e >= out_prec)
            throw DomainError("digit-action", "precision-window",
                              "exponent " + std::to_string(x.lead() + static_cast<I64>(i)) +
                                  " maps beyond the known precision");
        terms.emplace_back(e, x.coeffs()[i]);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    std::vector<FiniteField::Elem> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] = v;
    return LaurentSeries(x.field(), lo, std::move(c), out_prec);
}

SInfinityPoint act_sinfty(const DigitPermutation& rho, const SInfinityPoint& s, NegativeExponents conv) {
    return {act_kinfty(rho, s.x, conv), rho_hat(rho, s.y)};
}

// ---------------------------------------------------------------- measures on O

void DiracMeasureO::add(const LaurentSeries& weight, const LaurentSeries& point) {
    if (!point.is_zero() && point.valuation() < 0)
        throw DomainError("digit-action", "not-integral", "Dirac point outside F_q[[pi]]");
    for (auto it = t_.begin(); it != t_.end(); ++it)
        if (it->second == point) {
            it->first = it->first + weight;
            if (it->first.is_exact_zero()) t_.erase(it);
            return;
        }
    if (!weight.is_exact_zero()) t_.emplace_back(weight, point);
}

DiracMeasureO DiracMeasureO::dirac(const LaurentSeries& point) {
    DiracMeasureO m;
    m.add(LaurentSeries::one(point.field()), point);
    return m;
}

DiracMeasureO DiracMeasureO::convolve(const DiracMeasureO& o) const {
    DiracMeasureO r;
    for (const auto& [w1, a] : t_)
        for (const auto& [w2, b] : o.t_) r.add(w1 * w2, a + b);
    return r;
}

LaurentSeries DiracMeasureO::integrate(const std::function<LaurentSeries(const LaurentSeries&)>& f) const {
    if (t_.empty()) throw DomainError("digit-action", "empty-measure", "zero measure has no field context");
    LaurentSeries s(t_.front().first.field());
    for (const auto& [w, a] : t_) s += w * f(a);
    return s;
}

bool operator==(const DiracMeasureO& a, const DiracMeasureO& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (const auto& ta : a.t_) {
        bool found = false;
        for (const auto& tb : b.t_)
            if (ta.second == tb.second && ta.first == tb.first) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

DiracMeasureO act_measure_rho2(const DigitPermutation& rho, const DiracMeasureO& mu) {
    const auto inv = rho.inverse();
    DiracMeasureO r;
    for (const auto& [w, a] : mu.terms()) r.add(w, act_kinfty(inv, a));
    return r;
}

MahlerFunction act_rho3(const DigitPermutation& rho, const MahlerFunction& f) {
    MahlerFunction r(f.field(), f.is_exact() ? LaurentSeries::kExact : min_image_from(rho, f.tail_valuation()));
    for (const auto& [j, c] : f.coeffs()) r.set(j, act_kinfty(rho, c));
    return r;
}

DPSeries<LaurentSeries> act_rho3(const DigitPermutation& rho, const DPSeries<LaurentSeries>& h) {
    DPSeries<LaurentSeries> r(h.zero(), h.order());
    for (std::size_t i = 0; i < h.order(); ++i) r.coeff(i) = act_kinfty(rho, h.coeff(i));
    return r;
}

std::vector<LaurentSeries> act_rho3(const DigitPermutation& rho, const std::vector<LaurentSeries>& wagner_coeffs) {
    std::vector<LaurentSeries> r;
    r.reserve(wagner_coeffs.size());
    for (const auto& c : wagner_coeffs) r.push_back(act_kinfty(rho, c));
    return r;
}

// ---------------------------------------------------------------- unramified extensions

ExtendedActionContext::ExtendedActionContext(const FiniteField& base, const FiniteField& ext,
                                             std::vector<FiniteField::Elem> basis)
    : base_(&base), ext_(&ext), m_(ext.relative_degree()), basis_(std::move(basis)) {
    if (ext.base() != &base) throw DomainError("digit-action", "bad-extension", ext.name() + " is not built over " + base.name());
    if (basis_.size() != m_) throw DomainError("digit-action", "bad-basis", "basis size must equal the extension degree");
    if (basis_.front() != ext.one()) throw DomainError("digit-action", "bad-basis", "first basis element must be 1");
    // columns are the coordinates of alpha_e; invert by Gauss-Jordan
    std::vector<std::vector<FiniteField::Elem>> a(m_, std::vector<FiniteField::Elem>(2 * m_, 0));
    for (std::uint32_t e = 0; e < m_; ++e) {
        const auto c = ext.base_coordinates(basis_[e]);
        for (std::uint32_t r = 0; r < m_; ++r) a[r][e] = c[r];
    }
    for (std::uint32_t r = 0; r < m_; ++r) a[r][m_ + r] = 1;
    for (std::uint32_t col = 0; col < m_; ++col) {
        std::uint32_t piv = col;
        while (piv < m_ && a[piv][col] == 0) ++piv;
        if (piv == m_) throw DomainError("digit-action", "basis-singular", "basis elements are linearly dependent");
        std::swap(a[piv], a[col]);
        const auto inv = base.inv(a[col][col]);
        for (auto& v : a[col]) v = base.mul(v, inv);
        for (std::uint32_t r = 0; r < m_; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const auto f = a[r][col];
            for (std::uint32_t k = 0; k < 2 * m_; ++k) a[r][k] = base.sub(a[r][k], base.mul(f, a[col][k]));
        }
    }
    inv_.assign(m_, std::vector<FiniteField::Elem>(m_));
    for (std::uint32_t r = 0; r < m_; ++r)
        for (std::uint32_t k = 0; k < m_; ++k) inv_[r][k] = a[r][m_ + k];
}

std::vector<FiniteField::Elem> ExtendedActionContext::solve(FiniteField::Elem b) const {
    const auto c = ext_->base_coordinates(b);
    std::vector<FiniteField::Elem> k(m_, 0);
    for (std::uint32_t r = 0; r < m_; ++r)
        for (std::uint32_t s = 0; s < m_; ++s) k[r] = base_->add(k[r], base_->mul(inv_[r][s], c[s]));
    return k;
}

std::vector<LaurentSeries> ExtendedActionContext::coordinates(const LaurentSeries& beta) const {
    if (&beta.field() != ext_) throw DomainError("digit-action", "field-mismatch", "element not over " + ext_->name());
    std::vector<std::vector<FiniteField::Elem>> c(m_, std::vector<FiniteField::Elem>(beta.coeffs().size(), 0));
    for (std::size_t i = 0; i < beta.coeffs().size(); ++i) {
        const auto k = solve(beta.coeffs()[i]);
        for (std::uint32_t e = 0; e < m_; ++e) c[e][i] = k[e];
    }
    std::vector<LaurentSeries> out;
    for (std::uint32_t e = 0; e < m_; ++e)
        out.emplace_back(*base_, beta.lead(), std::move(c[e]), beta.abs_precision(), beta.uniformizer());
    return out;
}

LaurentSeries ExtendedActionContext::combine(const std::vector<LaurentSeries>& k) const {
    LaurentSeries s(*ext_);
    for (std::uint32_t e = 0; e < m_; ++e) s += k.at(e).lift(*ext_).scale(basis_[e]);
    return s;
}

LaurentSeries extend_unramified(const ExtendedActionContext& ctx, const DigitPermutation& rho, const LaurentSeries& beta,
                                NegativeExponents conv) {
    auto k = ctx.coordinates(beta);
    for (auto& c : k) c = act_kinfty(rho, c, conv);
    return ctx.combine(k);
}

MultinomialCongruence multinomial_congruence(const DigitPermutation& rho, std::uint64_t m, std::uint64_t n) {
    if (m > kCongruenceLimit || n > kCongruenceLimit)
        throw GuardError("digit-action", "index-too-large", "m, n must be <= 4096");
    std::uint32_t p = rho.q();
    for (std::uint32_t d = 2; d <= p; ++d)
        if (p % d == 0) {
            p = d;
            break;
        }
    MultinomialCongruence r;
    auto put = [p](std::map<std::uint64_t, std::uint32_t>& s, std::uint64_t idx, std::uint32_t w) {
        const auto v = (s[idx] + w) % p;
        if (v == 0) s.erase(idx);
        else s[idx] = v;
    };
    auto R = [&rho](std::uint64_t v) { return static_cast<std::uint64_t>(rho.apply(static_cast<I64>(v))); };
    for (std::uint64_t k = 0; k <= std::min(m, n); ++k)
        put(r.s1, R(m + n - k), multinomial3_mod_p(k, m - k, n - k, p));
    const auto rm = R(m), rn = R(n);
    for (std::uint64_t k = 0; k <= std::min(rm, rn); ++k)
        put(r.s2, rm + rn - k, multinomial3_mod_p(k, rm - k, rn - k, p));
    return r;
}

}  // namespace carlitz
