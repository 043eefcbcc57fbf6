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


#include <random>

#include "doctest.h"

#include "carlitz/measure.hpp"

using namespace carlitz;

namespace {

APoly random_a(const FiniteField& F, std::mt19937_64& rng, int deg) {
    std::vector<FiniteField::Elem> c(deg + 1);
    for (auto& x : c) x = rng() % F.order();
    return APoly(F, c);
}

MeasureMoments random_combination(const CarlitzBasis& cb, std::mt19937_64& rng) {
    std::vector<std::pair<KFrac, APoly>> t;
    const int n = 1 + rng() % 3;
    for (int i = 0; i < n; ++i) t.emplace_back(KFrac(random_a(cb.field(), rng, 1)), random_a(cb.field(), rng, 2));
    return dirac_combination(cb, t);
}

}  // namespace

TEST_CASE("divided power algebra") {
    const auto& F = FiniteField::of_order(3);
    const KFrac z(F);
    std::mt19937_64 rng(5);
    auto rnd = [&](std::size_t N) {
        DPSeries<KFrac> h(z, N);
        for (std::size_t i = 0; i < N; ++i) h.coeff(i) = KFrac(random_a(F, rng, 1));
        return h;
    };
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = rnd(27), b = rnd(27), c = rnd(20);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == (a * b).truncate(20) + a * c);
        CHECK(a * DPSeries<KFrac>::one(z, 27) == a);
    }
    // generator products vanish exactly on carries
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            const auto prod = DPSeries<KFrac>::generator(z, i, 27) * DPSeries<KFrac>::generator(z, j, 27);
            CHECK(prod.is_zero() == !no_carry(i, j, 3));
        }
}

TEST_CASE("Wagner transform of Dirac measures") {
    for (std::uint32_t q : {2u, 3u}) {
        CarlitzBasis cb(FiniteField::of_order(q));
        const auto& F = cb.field();
        const KFrac z(F);
        CHECK(wagner_transform(dirac(cb, APoly(F))) == DPSeries<KFrac>::one(z, q * q * q));
        CHECK(wagner_transform(zero_measure(cb)).is_zero());
        const APoly t = APoly::theta(F);
        CHECK(wagner_transform(dirac(cb, t)).coeff(1) == cb.G_at(1, t));
        std::mt19937_64 rng(q);
        for (int trial = 0; trial < 6; ++trial) {
            const auto a = random_a(F, rng, 2), b = random_a(F, rng, 2);
            CHECK(convolve(dirac(cb, a), dirac(cb, b)) == dirac(cb, a + b));
            const auto mu = random_combination(cb, rng), nu = random_combination(cb, rng);
            CHECK(wagner_transform(convolve(mu, nu)) == wagner_transform(mu) * wagner_transform(nu));
            CHECK(inverse_wagner(wagner_transform(mu)) == mu);
        }
    }
    CarlitzBasis cb3(FiniteField::of_order(3));
    const auto& F3 = cb3.field();
    const APoly t = APoly::theta(F3), one = APoly::constant(F3, 1);
    CHECK(convolve(dirac(cb3, t), dirac(cb3, t + one)) == dirac(cb3, t.scale(2) + one));
    CarlitzBasis cb2(FiniteField::of_order(2));
    const APoly t2 = APoly::theta(cb2.field());
    CHECK(convolve(dirac(cb2, t2), dirac(cb2, t2)) == dirac(cb2, APoly(cb2.field())));
}

TEST_CASE("convolution with functions") {
    for (std::uint32_t q : {2u, 3u}) {
        CarlitzBasis cb(FiniteField::of_order(q));
        const auto& F = cb.field();
        std::mt19937_64 rng(17 + q);
        const std::uint64_t n = q * q * q;
        std::vector<KFrac> c;
        for (int i = 0; i < static_cast<int>(n) - 1; ++i) c.push_back(KFrac(random_a(F, rng, 1)));
        const XPolyK f(KFrac(F), c);
        const auto W = wagner_coefficients(cb, f, n);
        CHECK(convolve_function(dirac(cb, APoly(F)), W).coeffs == W.coeffs);
        const APoly alpha = random_a(F, rng, 1);
        const auto shifted = convolve_function(dirac(cb, alpha), W).reconstruct(cb);
        for (const auto& x : enumerate_below(F, 2)) CHECK(eval_at(shifted, x) == eval_at(f, x + alpha));
        CHECK(integrate(dirac(cb, alpha), W) == eval_at(f, alpha));
        // convolution against u^i/i! is the divided derivative on hats
        for (std::uint64_t i = 0; i <= q * q; ++i)
            CHECK(hat_transform(convolve_function(generator_measure(cb, i), W)) ==
                  divided_derivative_z(hat_transform(W), i));
        CHECK_THROWS_AS(convolve_function(zero_measure(cb, 3), W), DomainError);
    }
}

TEST_CASE("hat transform and divided derivatives") {
    const auto& F = FiniteField::of_order(3);
    WagnerExpansion w;
    for (int i = 0; i <= 4; ++i) w.coeffs.push_back(KFrac(APoly::theta(F).pow(i)));
    CHECK(hat_transform(w).coeffs == w.coeffs);
    CHECK(inverse_hat(hat_transform(w)).coeffs == w.coeffs);
    TatePolynomial z5{std::vector<KFrac>(6, KFrac(F))};
    z5.coeffs[5] = KFrac(APoly::constant(F, 1));
    const auto d = divided_derivative_z(z5, 2);
    CHECK(d.coeffs[3] == KFrac(APoly::constant(F, binom_mod_p(5, 2, 3))));
    CHECK(d.coeffs[3].is_zero() == false);
    CHECK(divided_derivative_z(z5, 0) == z5);
    TatePolynomial g{std::vector<KFrac>(12, KFrac(F))};
    std::mt19937_64 rng(2);
    for (auto& c : g.coeffs) c = KFrac(APoly(F, {static_cast<FiniteField::Elem>(rng() % 3)}));
    for (std::uint64_t i = 0; i < 4; ++i)
        for (std::uint64_t j = 0; j < 4; ++j) {
            const auto lhs = divided_derivative_z(divided_derivative_z(g, j), i);
            auto rhs = divided_derivative_z(g, i + j);
            for (auto& c : rhs.coeffs) c = c.scale(F.from_int(binom_mod_p(i + j, i, 3)));
            CHECK(lhs == rhs);
        }
    const auto& F2 = FiniteField::of_order(2);
    TatePolynomial z2{{KFrac(F2), KFrac(F2), KFrac(APoly::constant(F2, 1))}};
    CHECK(divided_derivative_z(z2, 1).coeffs[1].is_zero());
}
