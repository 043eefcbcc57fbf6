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


#include "carlitz/measure.hpp"

#include "carlitz/lucas.hpp"

namespace carlitz {

namespace {

const FiniteField& field_of(const MeasureMoments& mu) {
    if (mu.moments.empty()) throw DomainError("measure-algebra", "empty-measure", "measure of order 0");
    return mu.moments.front().field();
}

}  // namespace

std::size_t resolve_order(const CarlitzBasis& cb, std::size_t order) {
    return order == kDefaultOrder ? ipow(cb.q(), 3) : order;
}

MeasureMoments zero_measure(const CarlitzBasis& cb, std::size_t order) {
    return {std::vector<KFrac>(resolve_order(cb, order), KFrac(cb.field()))};
}

MeasureMoments dirac(const CarlitzBasis& cb, const APoly& a, std::size_t order) {
    order = resolve_order(cb, order);
    MeasureMoments m;
    m.moments.reserve(order);
    for (std::size_t j = 0; j < order; ++j) m.moments.push_back(cb.G_at(j, a));
    return m;
}

MeasureMoments dirac_combination(const CarlitzBasis& cb, const std::vector<std::pair<KFrac, APoly>>& terms,
                                 std::size_t order) {
    MeasureMoments m = zero_measure(cb, order);
    for (const auto& [w, a] : terms) {
        const auto d = dirac(cb, a, m.order());
        for (std::size_t j = 0; j < m.order(); ++j) m.moments[j] += w * d.moments[j];
    }
    return m;
}

MeasureMoments generator_measure(const CarlitzBasis& cb, std::size_t i, std::size_t order) {
    MeasureMoments m = zero_measure(cb, order);
    if (i < m.order()) m.moments[i] = KFrac(APoly::constant(cb.field(), 1));
    return m;
}

DPSeries<KFrac> wagner_transform(const MeasureMoments& mu) {
    return DPSeries<KFrac>(KFrac(field_of(mu)), mu.moments);
}

MeasureMoments inverse_wagner(const DPSeries<KFrac>& h) { return {h.coeffs()}; }

MeasureMoments convolve(const MeasureMoments& mu, const MeasureMoments& nu) {
    return inverse_wagner(wagner_transform(mu) * wagner_transform(nu));
}

KFrac integrate(const MeasureMoments& mu, const WagnerExpansion& f) {
    if (f.coeffs.size() > mu.order())
        throw DomainError("measure-algebra", "truncation-mismatch", "measure order below the expansion length");
    KFrac s(field_of(mu));
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) s += f.coeffs[i] * mu.moments[i];
    return s;
}

WagnerExpansion convolve_function(const MeasureMoments& mu, const WagnerExpansion& f) {
    const std::size_t n = f.coeffs.size();
    if (n > mu.order())
        throw DomainError("measure-algebra", "truncation-mismatch", "measure order below the expansion length");
    const FiniteField& F = field_of(mu);
    const std::uint32_t p = F.characteristic();
    // f(x+y) = sum_i a_i sum_{e+w=i} binom(i, e) G_e(x) G_w(y)
    WagnerExpansion out;
    out.precision = f.precision;
    out.coeffs.assign(n, KFrac(F));
    for (std::size_t e = 0; e < n; ++e)
        for (std::size_t w = 0; e + w < n; ++w) {
            if (mu.moments[w].is_zero() || f.coeffs[e + w].is_zero()) continue;
            const auto b = binom_mod_p(e + w, e, p);
            if (b != 0) out.coeffs[e] += (mu.moments[w] * f.coeffs[e + w]).scale(F.from_int(b));
        }
    return out;
}

TatePolynomial hat_transform(const WagnerExpansion& f) { return {f.coeffs}; }

WagnerExpansion inverse_hat(const TatePolynomial& g) {
    WagnerExpansion w;
    w.coeffs = g.coeffs;
    return w;
}

TatePolynomial divided_derivative_z(const TatePolynomial& g, std::uint64_t i) {
    TatePolynomial out;
    if (g.coeffs.empty()) return out;
    const FiniteField& F = g.coeffs.front().field();
    out.coeffs.assign(g.coeffs.size(), KFrac(F));
    for (std::size_t k = i; k < g.coeffs.size(); ++k) {
        const auto b = binom_mod_p(k, i, F.characteristic());
        if (b != 0) out.coeffs[k - i] = g.coeffs[k].scale(F.from_int(b));
    }
    return out;
}

}  // namespace carlitz
