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


#include "carlitz/carlitz_expansion.hpp"

#include "carlitz/error.hpp"
#include "carlitz/lucas.hpp"
#include "carlitz/parallel.hpp"

namespace carlitz {

namespace {

FiniteField::Elem minus_one_pow(const FiniteField& F, std::uint64_t m) {
    return m % 2 == 0 ? F.one() : F.neg(F.one());
}

// Values at a of g_j (dual = false) or ghat_j (dual = true) for all j < n,
// each built from the value at j with its top digit removed.
std::vector<APoly> digit_family_values(const CarlitzBasis& cb, bool dual, const APoly& a, std::uint64_t n) {
    const std::uint32_t q = cb.q();
    std::vector<std::vector<APoly>> factor;  // factor[t][c] for 1 <= c < q
    std::vector<APoly> out(n, a.zero_like());
    if (n == 0) return out;
    out[0] = a.one_like();
    std::uint64_t qt = 1;
    for (std::uint64_t t = 0; qt < n; ++t, qt *= q) {
        const APoly e = cb.e_at(t, a);
        std::vector<APoly> row(q, a.one_like());
        for (std::uint32_t c = 1; c < q; ++c) row[c] = row[c - 1] * e;
        if (dual) row[q - 1] = row[q - 1] - cb.D(t).pow(q - 1);
        factor.push_back(std::move(row));
        for (std::uint64_t j = qt; j < std::min<std::uint64_t>(n, qt * q); ++j) {
            const auto c = static_cast<std::uint32_t>(j / qt);
            out[j] = out[j - c * qt] * factor[t][c];
        }
    }
    return out;
}

std::vector<APoly> points(const FiniteField& F, std::uint64_t m, bool monic) {
    return monic ? enumerate_monic(F, m) : enumerate_below(F, m);
}

ExpansionCoefficients expand_impl(const CarlitzBasis& cb, const XPolyK& f, Family basis, std::uint64_t m, bool monic) {
    const FiniteField& F = cb.field();
    if (basis == Family::e) throw DomainError("carlitz-expansion", "bad-basis", "e_t is not a basis of k[x]");
    const std::int64_t d = f.degree();
    count_or_throw(cb.q(), m);
    const std::uint64_t qm = ipow(cb.q(), m);
    if (d >= 0 && qm <= static_cast<std::uint64_t>(d))
        throw DomainError("carlitz-expansion", "level-too-small", "need q^m > deg f");
    const std::size_t len = static_cast<std::size_t>(std::max<std::int64_t>(d, 0) + 1);
    const KFrac zero(F);
    ExpansionCoefficients out{basis, m, std::vector<KFrac>(len, zero)};
    if (f.is_zero()) return out;

    // ghat pairs with g and G; g pairs with the dual bases.
    const bool dual = basis == Family::g || basis == Family::G;
    const auto pts = points(F, m, monic);
    std::vector<KFrac> sums(len, zero);
    auto partial = parallel_map<std::vector<KFrac>>(pts.size(), [&](std::size_t k) {
        const KFrac fa = eval_at(f, pts[k]);
        std::vector<KFrac> r(len, zero);
        if (fa.is_zero()) return r;
        const auto vals = digit_family_values(cb, dual, pts[k], qm);
        for (std::size_t i = 0; i < len; ++i) r[i] = fa * KFrac(vals[qm - 1 - i]);
        return r;
    });
    for (const auto& r : partial)
        for (std::size_t i = 0; i < len; ++i) sums[i] += r[i];

    const KFrac sign(APoly::constant(F, minus_one_pow(F, m)));
    const bool divided = basis == Family::G || basis == Family::Ghat;
    const KFrac lm_over_dm(cb.L(m), cb.D(m));
    for (std::size_t i = 0; i < len; ++i) {
        if (divided) out.coeffs[i] = sign * sums[i] / KFrac(cb.factorial(qm - 1 - i));
        else out.coeffs[i] = sign * sums[i] * lm_over_dm;
    }
    return out;
}

}  // namespace

KFrac eval_at(const XPolyK& f, const APoly& a) {
    const KFrac x(a);
    KFrac r = f.zero();
    for (std::size_t k = f.coeffs().size(); k-- > 0;) r = r * x + f.coeffs()[k];
    return r;
}

std::uint64_t minimal_level(const CarlitzBasis& cb, std::int64_t deg) {
    std::uint64_t m = 1, qm = cb.q();
    while (deg >= 0 && qm <= static_cast<std::uint64_t>(deg)) {
        ++m;
        qm *= cb.q();
    }
    return m;
}

XPolyK ExpansionCoefficients::reconstruct(const CarlitzBasis& cb) const {
    XPolyK r(KFrac(cb.field()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) r += cb.family_poly(basis, i).scale(coeffs[i]);
    return r;
}

ExpansionCoefficients expand(const CarlitzBasis& cb, const XPolyK& f, Family basis, std::uint64_t m) {
    return expand_impl(cb, f, basis, m, false);
}

ExpansionCoefficients expand_monic(const CarlitzBasis& cb, const XPolyK& f, Family basis, std::uint64_t m) {
    return expand_impl(cb, f, basis, m, true);
}

Interpolation interpolate(const CarlitzBasis& cb, const XPolyK& f, std::uint64_t m, bool monic) {
    const FiniteField& F = cb.field();
    const std::uint64_t qm = ipow(cb.q(), m);
    if (f.degree() >= 0 && qm <= static_cast<std::uint64_t>(f.degree()))
        throw DomainError("carlitz-expansion", "level-too-small", "need q^m > deg f");
    const KFrac zero(F);
    const KFrac c(APoly::constant(F, minus_one_pow(F, m)) * cb.D(m), cb.L(m));
    Interpolation out{f.scale(c), XPolyK(zero)};
    XPolyA em = cb.e_poly(m);
    if (monic) em = em - XPolyA::constant(cb.D(m));
    const auto pts = points(F, m, monic);
    const XPolyA x = XPolyA::x(APoly(F));
    auto parts = parallel_map<XPolyK>(pts.size(), [&](std::size_t k) {
        const KFrac fa = eval_at(f, pts[k]);
        if (fa.is_zero()) return XPolyK(zero);
        const auto [quo, rem] = em.divmod_monic(x - XPolyA::constant(pts[k]));
        if (!rem.is_zero()) throw DomainError("carlitz-expansion", "internal", "point is not a root");
        return quo.map<KFrac>(zero, [](const APoly& a) { return KFrac(a); }).scale(fa);
    });
    for (const auto& p : parts) out.rhs += p;
    return out;
}

KFrac stable_coefficient(const CarlitzBasis& cb, const XPolyK& f, std::uint64_t i) {
    const FiniteField& F = cb.field();
    const std::uint64_t level = i == 0 ? 1 : digits(i, cb.q()).size();
    const std::uint64_t qm = ipow(cb.q(), level);
    const auto pts = enumerate_below(F, level);
    const KFrac zero(F);
    const KFrac s = parallel_sum(pts.size(), zero, [&](std::size_t k) {
        const KFrac fa = eval_at(f, pts[k]);
        if (fa.is_zero()) return zero;
        return fa * KFrac(cb.ghat_at(qm - 1 - i, pts[k]));
    });
    return KFrac(APoly::constant(F, minus_one_pow(F, level))) * s * KFrac(cb.L(level), cb.D(level));
}

KFrac orthogonality_sum(const CarlitzBasis& cb, std::uint64_t l, std::uint64_t j, std::uint64_t m, OrthoMode mode) {
    const std::uint64_t qm = ipow(cb.q(), m);
    if (l >= qm || (mode == OrthoMode::Monic && j >= qm))
        throw DomainError("carlitz-expansion", "precondition", "index out of range for the level");
    const FiniteField& F = cb.field();
    const auto pts = points(F, m, mode == OrthoMode::Monic);
    const APoly zero(F);
    return KFrac(parallel_sum(pts.size(), zero, [&](std::size_t k) { return cb.ghat_at(l, pts[k]) * cb.g_at(j, pts[k]); }));
}

KFrac orthogonality_expected(const CarlitzBasis& cb, std::uint64_t l, std::uint64_t j, std::uint64_t m) {
    const FiniteField& F = cb.field();
    if (l + j != ipow(cb.q(), m) - 1) return KFrac(F);
    return KFrac(APoly::constant(F, minus_one_pow(F, m)) * cb.D(m), cb.L(m));
}

DigitBasisLevel digit_basis_check(const FiniteField& F, std::uint64_t n) {
    const std::uint32_t q = F.order();
    if (n > 10 || ipow(q, n) > kDigitBasisLimit)
        throw GuardError("carlitz-expansion", "basis-too-large", "q^n exceeds " + std::to_string(kDigitBasisLimit));
    const std::uint64_t N = ipow(q, n);
    DigitBasisLevel out{n, q, std::vector<std::vector<FiniteField::Elem>>(N, std::vector<FiniteField::Elem>(N, 0)), 0};
    for (std::uint64_t j = 0; j < N; ++j) {
        const auto c = digits(j, q);
        for (std::uint64_t v = 0; v < N; ++v) {
            const auto coord = digits(v, q);
            FiniteField::Elem val = 1;
            for (std::size_t t = 0; t < c.size() && val != 0; ++t) {
                const FiniteField::Elem phi = t < coord.size() ? static_cast<FiniteField::Elem>(coord[t]) : 0;
                val = F.mul(val, F.pow(phi, c[t]));
            }
            out.eval[j][v] = val;
        }
    }
    auto m = out.eval;
    std::uint64_t rank = 0;
    for (std::uint64_t col = 0; col < N && rank < N; ++col) {
        std::uint64_t piv = rank;
        while (piv < N && m[piv][col] == 0) ++piv;
        if (piv == N) continue;
        std::swap(m[piv], m[rank]);
        const auto inv = F.inv(m[rank][col]);
        for (auto& x : m[rank]) x = F.mul(x, inv);
        for (std::uint64_t r = 0; r < N; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const auto fct = m[r][col];
            for (std::uint64_t k = 0; k < N; ++k) m[r][k] = F.sub(m[r][k], F.mul(fct, m[rank][k]));
        }
        ++rank;
    }
    out.rank = rank;
    return out;
}

std::vector<LaurentSeries> WagnerExpansion::vadic() const {
    std::vector<LaurentSeries> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(LaurentSeries::from_kfrac_at_theta(c, precision));
    return out;
}

XPolyK WagnerExpansion::reconstruct(const CarlitzBasis& cb) const {
    XPolyK r(KFrac(cb.field()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) r += cb.G_poly(i).scale(coeffs[i]);
    return r;
}

WagnerExpansion wagner_coefficients(const CarlitzBasis& cb, const XPolyK& f, std::uint64_t count, std::int64_t precision) {
    const std::uint32_t q = cb.q();
    if (count > ipow(q, 3))
        throw GuardError("carlitz-expansion", "count-too-large", "at most q^3 Wagner coefficients");
    WagnerExpansion out;
    out.precision = precision;
    const FiniteField& F = cb.field();
    out.coeffs = parallel_map<KFrac>(count, [&](std::size_t i) {
        const std::uint64_t level = i == 0 ? 1 : digits(i, q).size();
        const std::uint64_t j = ipow(q, level) - 1 - i;
        KFrac s(F);
        for (const auto& a : enumerate_below(F, level)) {
            const KFrac fa = eval_at(f, a);
            if (!fa.is_zero()) s += fa * cb.Ghat_at(j, a);
        }
        return KFrac(APoly::constant(F, minus_one_pow(F, level))) * s;
    });
    return out;
}

}  // namespace carlitz
