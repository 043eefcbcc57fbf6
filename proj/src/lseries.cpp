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


#include "carlitz/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "carlitz/lucas.hpp"
#include "carlitz/parallel.hpp"

namespace carlitz {

namespace {

using I64 = std::int64_t;

bool is_one_unit(const LaurentSeries& u) { return !u.is_zero() && u.lead() == 0 && u.coeffs()[0] == 1; }

}  // namespace

LaurentSeries one_unit_part(const APoly& a) {
    if (a.is_zero() || a.leading() != a.field().one())
        throw DomainError("lseries", "not-monic", "only monic polynomials are exponentiated");
    return LaurentSeries::from_apoly_at_infinity(a).shift(a.degree());
}

LaurentSeries exponentiate(const APoly& a, const SInfinityPoint& s, I64 N) {
    const LaurentSeries u = one_unit_part(a);
    return s.x.pow(static_cast<std::uint64_t>(a.degree())) * one_unit_power(u, s.y, N);
}

LaurentSeries zeta_coefficient(const FiniteField& f, std::uint64_t d, const PadicInteger& y, I64 N) {
    count_or_throw(f.order(), d);
    const auto monics = enumerate_monic(f, d);
    const PadicInteger e = -y;
    return parallel_sum<LaurentSeries>(monics.size(), LaurentSeries(f),
                                       [&](std::size_t k) { return one_unit_power(one_unit_part(monics[k]), e, N); });
}

LaurentSeries EntireSeries::eval(const LaurentSeries& t) const {
    LaurentSeries s(field()), tp = LaurentSeries::one(field());
    for (std::size_t d = 0; d < z.size(); ++d) {
        if (!z[d].is_exact_zero()) s += z[d] * tp;
        if (d + 1 < z.size()) tp *= t;
    }
    return s;
}

LaurentSeries EntireSeries::derivative_at(const LaurentSeries& t) const {
    const auto& F = field();
    LaurentSeries s(F), tp = LaurentSeries::one(F);
    for (std::size_t d = 1; d < z.size(); ++d) {
        const auto c = F.from_int(static_cast<std::int64_t>(d % F.characteristic()));
        if (c != 0 && !z[d].is_exact_zero()) s += (z[d] * tp).scale(c);
        tp *= t;
    }
    return s;
}

EntireSeries zeta_series(const FiniteField& f, const PadicInteger& y, std::uint64_t dmax, I64 N) {
    count_or_throw(f.order(), dmax);
    EntireSeries Z{y, {}, N};
    for (std::uint64_t d = 0; d <= dmax; ++d) Z.z.push_back(zeta_coefficient(f, d, y, N));
    return Z;
}

std::uint64_t vanishing_degree_bound(std::uint32_t q, std::uint64_t i) { return digit_sum(i, q) / (q - 1); }

APoly trivial_zero_value(const FiniteField& f, std::uint64_t i) {
    if (i == 0) throw DomainError("lseries", "bad-index", "i must be positive");
    if (i > kTrivialZeroLimit) throw GuardError("lseries", "index-too-large", "i must be <= 65536");
    const auto D = vanishing_degree_bound(f.order(), i);
    count_or_throw(f.order(), D);
    APoly s(f);
    for (std::uint64_t d = 0; d <= D; ++d) {
        const auto monics = enumerate_monic(f, d);
        s = s + parallel_sum<APoly>(monics.size(), APoly(f), [&](std::size_t k) { return monics[k].pow(i); });
    }
    return s;
}

// ---------------------------------------------------------------- Newton polygon

NewtonPolygon newton_polygon(const EntireSeries& Z) {
    struct Pt {
        I64 d, v;
    };
    std::vector<Pt> pts, bounds;
    for (std::size_t d = 0; d < Z.z.size(); ++d) {
        const auto& c = Z.z[d];
        if (c.is_exact_zero()) continue;
        if (c.is_zero()) bounds.push_back({static_cast<I64>(d), c.abs_precision()});
        else pts.push_back({static_cast<I64>(d), c.valuation()});
    }
    if (pts.empty()) throw DomainError("lseries", "degenerate-polygon", "all coefficients vanish");
    std::vector<Pt> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            const I64 cross = (a.d - o.d) * (p.v - o.v) - (a.v - o.v) * (p.d - o.d);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(p);
    }
    NewtonPolygon P;
    for (const auto& h : hull) P.vertices.emplace_back(h.d, h.v);
    for (std::size_t k = 0; k + 1 < hull.size(); ++k)
        P.segments.push_back({hull[k].d, hull[k].v, hull[k + 1].d, hull[k + 1].v});
    for (const auto& b : bounds) {
        if (b.d < hull.front().d || b.d > hull.back().d) {
            P.precision_limited = true;
            continue;
        }
        for (const auto& s : P.segments) {
            if (b.d < s.d0 || b.d > s.d1) continue;
            // b.v <= v0 + rise (d - d0) / run
            if (b.v * s.run() <= s.v0 * s.run() + s.rise() * (b.d - s.d0)) P.precision_limited = true;
        }
    }
    return P;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "indeterminate";
    }
}

Verdict sheats_check(const NewtonPolygon& P) {
    if (P.precision_limited) return Verdict::Indeterminate;
    for (std::size_t k = 0; k < P.segments.size(); ++k) {
        const auto& s = P.segments[k];
        if (s.run() != 1) return Verdict::False;
        if (k > 0 && s.rise() <= P.segments[k - 1].rise()) return Verdict::False;
    }
    return Verdict::True;
}

std::vector<ExtractedZero> extract_zeros(const EntireSeries& Z, const NewtonPolygon& P, I64 target) {
    if (P.precision_limited)
        throw DomainError("lseries", "precision-limited", "polygon depends on coefficients known only to precision");
    const int cap = 2 * static_cast<int>(std::ceil(std::log2(std::max<I64>(target, 2)))) + 8;
    constexpr I64 kMargin = 8;
    std::vector<ExtractedZero> out;
    for (const auto& seg : P.segments) {
        if (seg.run() != 1) continue;
        const I64 vt = -seg.rise();
        I64 h = LaurentSeries::kExact;
        for (std::size_t d = 0; d < Z.z.size(); ++d)
            if (!Z.z[d].is_zero()) h = std::min(h, Z.z[d].valuation() + static_cast<I64>(d) * vt);
        const I64 R = std::max<I64>(1, target - h + kMargin);
        const auto& z0 = Z.z[static_cast<std::size_t>(seg.d0)];
        const auto& z1 = Z.z[static_cast<std::size_t>(seg.d1)];
        LaurentSeries t = -(z0.div(z1, R));
        ExtractedZero zr{t, seg.rise(), 0, 0};
        bool done = false;
        for (int it = 0; it <= cap; ++it) {
            const LaurentSeries Zt = Z.eval(t);
            zr.residual = Zt.valuation();
            zr.iterations = it;
            if (zr.residual >= target) {
                done = true;
                break;
            }
            const LaurentSeries dZ = Z.derivative_at(t);
            if (dZ.is_zero()) break;
            t = (t - Zt.div(dZ, R)).truncate(vt + R);
        }
        if (!done)
            throw DomainError("lseries", "no-convergence",
                              "Newton iteration did not reach the target on the segment at d = " + std::to_string(seg.d0));
        // v(t - t*) = v(Z(t)) - v(Z'(t)) for a simple root
        if (zr.residual != LaurentSeries::kExact) {
            const LaurentSeries dZ = Z.derivative_at(t);
            if (!dZ.is_zero()) t = t.truncate(zr.residual - dZ.valuation());
        }
        zr.t = t;
        out.push_back(zr);
    }
    return out;
}

TrivialZeroCheck trivial_zero_permutation_check(const FiniteField& f, const DigitPermutation& rho, std::uint64_t i) {
    const std::uint32_t q = f.order();
    if (rho.q() != q) throw DomainError("lseries", "base-mismatch", "permutation base differs from q");
    if (i == 0 || i % (q - 1) != 0) throw DomainError("lseries", "not-trivial-zero", "i must be a positive multiple of q - 1");
    const auto image = rho.apply(static_cast<I64>(i));
    if (image > static_cast<I64>(kTrivialZeroLimit))
        throw GuardError("lseries", "index-too-large", "rho_* i exceeds the trivial-zero guard");
    TrivialZeroCheck c{static_cast<I64>(i), image, false, false, false};
    c.point_identity = act_sinfty(rho, SInfinityPoint::s(f, -static_cast<I64>(i))) == SInfinityPoint::s(f, -image);
    c.value_zero = trivial_zero_value(f, i).is_zero();
    c.image_value_zero = trivial_zero_value(f, static_cast<std::uint64_t>(image)).is_zero();
    return c;
}

// ---------------------------------------------------------------- Angles

std::string MultiPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << f->to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) os << "*t" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os.str();
}

MultiPoly angles_power_sum(const FiniteField& f, std::uint64_t d, const std::vector<std::uint64_t>& m,
                           std::optional<std::uint32_t> cap) {
    count_or_throw(f.order(), d);
    const std::size_t n = m.size();
    MultiPoly s{&f, {}};
    for (const auto& a : enumerate_monic(f, d)) {
        std::map<std::vector<std::uint32_t>, FiniteField::Elem> acc{{std::vector<std::uint32_t>(n, 0), f.one()}};
        for (std::size_t i = 0; i < n; ++i) {
            const APoly ai = a.pow(m[i]);
            std::map<std::vector<std::uint32_t>, FiniteField::Elem> next;
            for (const auto& [e, c] : acc) {
                std::uint32_t tot = 0;
                for (auto x : e) tot += x;
                for (std::size_t k = 0; k < ai.coeffs().size(); ++k) {
                    if (ai.coeffs()[k] == 0) continue;
                    if (cap && tot + k > *cap) break;
                    auto e2 = e;
                    e2[i] = static_cast<std::uint32_t>(k);
                    auto& slot = next[e2];
                    slot = f.add(slot, f.mul(c, ai.coeffs()[k]));
                }
            }
            acc = std::move(next);
        }
        for (const auto& [e, c] : acc) {
            auto& slot = s.terms[e];
            slot = f.add(slot, c);
        }
    }
    for (auto it = s.terms.begin(); it != s.terms.end();) it = it->second == 0 ? s.terms.erase(it) : std::next(it);
    return s;
}

LaurentSeries angles_power_sum(const FiniteField& f, std::uint64_t d, const std::vector<std::uint64_t>& m,
                               const std::vector<LaurentSeries>& z) {
    if (z.size() != m.size()) throw DomainError("lseries", "arity-mismatch", "one point per exponent");
    count_or_throw(f.order(), d);
    const auto monics = enumerate_monic(f, d);
    return parallel_sum<LaurentSeries>(monics.size(), LaurentSeries(f), [&](std::size_t k) {
        LaurentSeries prod = LaurentSeries::one(f);
        for (std::size_t i = 0; i < m.size(); ++i) {
            LaurentSeries v(f);
            const auto& c = monics[k].coeffs();
            for (std::size_t j = c.size(); j-- > 0;) v = v * z[i] + LaurentSeries::monomial(f, c[j], 0);
            prod *= v.pow(m[i]);
        }
        return prod;
    });
}

bool angles_vanishing_predicted(std::uint32_t q, std::uint64_t d, const std::vector<std::uint64_t>& m) {
    std::uint64_t l = 0;
    for (auto x : m) l += digit_sum(x, q);
    return l < d * (q - 1);
}

LaurentSeries angles_deformed_coefficient(const FiniteField& f, std::uint64_t d, const PadicInteger& y,
                                          const std::vector<std::uint64_t>& indices, I64 N) {
    count_or_throw(f.order(), d);
    const auto monics = enumerate_monic(f, d);
    const I64 inner = N + static_cast<I64>(indices.size() * d);
    const PadicInteger e = -y;
    return parallel_sum<LaurentSeries>(monics.size(), LaurentSeries(f), [&](std::size_t k) {
        const APoly& a = monics[k];
        LaurentSeries prod(f);
        std::vector<LaurentSeries> ders;
        for (auto i : indices) {
            const APoly di = divided_derivative(a, i);
            if (di.is_zero()) return prod;
            ders.push_back(LaurentSeries::from_apoly_at_infinity(di));
        }
        prod = one_unit_power(one_unit_part(a), e, inner);
        for (const auto& x : ders) prod *= x;
        return prod.is_exact() ? prod : prod.truncate(N);
    });
}

std::int64_t angles_growth_bound(std::uint32_t q, std::uint64_t d, std::size_t n) {
    if (d < 2 * (n + 1)) return 0;
    return static_cast<I64>(ipow(q, d / (n + 1) - 1));
}

void DirichletSeriesOnZp::add(const LaurentSeries& c, const LaurentSeries& u) {
    if (!is_one_unit(u)) throw DomainError("lseries", "not-one-unit", "Dirac point must be congruent to 1 mod pi");
    terms.emplace_back(c, u);
}

LaurentSeries gamma_transform(const DirichletSeriesOnZp& D, const PadicInteger& y, I64 N) {
    if (D.terms.empty()) throw DomainError("lseries", "empty-series", "no Dirac points");
    LaurentSeries s(D.terms.front().first.field());
    for (const auto& [c, u] : D.terms) {
        if (!is_one_unit(u)) throw DomainError("lseries", "not-one-unit", "Dirac point must be congruent to 1 mod pi");
        s += c * one_unit_power(u, y, N);
    }
    return s.is_exact() ? s : s.truncate(N);
}

}  // namespace carlitz
