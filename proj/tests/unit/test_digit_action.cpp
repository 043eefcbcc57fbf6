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

#include "carlitz/digit_action.hpp"
#include "carlitz/lucas.hpp"

using namespace carlitz;

namespace {

DigitPermutation random_perm(std::uint32_t q, std::mt19937_64& rng, std::uint32_t span = 4) {
    std::vector<std::uint32_t> pos(span);
    for (std::uint32_t i = 0; i < span; ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < span; ++i) pairs.emplace_back(i, pos[i]);
    return DigitPermutation(q, pairs);
}

LaurentSeries pi_poly(const FiniteField& F, std::vector<FiniteField::Elem> c, std::int64_t lead = 0,
                      std::int64_t prec = LaurentSeries::kExact) {
    return LaurentSeries(F, lead, std::move(c), prec);
}

}  // namespace

TEST_CASE("permutation literals") {
    const auto r = DigitPermutation::parse(2, "0:1,1:0");
    CHECK(r == DigitPermutation::swap(2, 0, 1));
    CHECK(r(0) == 1);
    CHECK(r(5) == 5);
    CHECK(r.bound() == 2);
    CHECK(r.compose(r).is_identity());
    CHECK_THROWS_AS(DigitPermutation::parse(2, "0:1"), DomainError);
    CHECK_THROWS_AS(DigitPermutation::parse(2, "0:1,0:0"), DomainError);
    CHECK_THROWS_AS(DigitPermutation::parse(2, "0-1"), DomainError);
    CHECK_THROWS_AS(DigitPermutation::swap(2, 0, 30), GuardError);
    const auto c = DigitPermutation::parse(3, "0:1,1:2,2:0");
    CHECK(c.compose(c.inverse()).is_identity());
    CHECK(c.compose(c).compose(c).is_identity());
}

TEST_CASE("rho on Z_p") {
    const auto s = DigitPermutation::swap(2, 0, 1);
    auto P = [](std::int64_t n) { return PadicInteger::from_int(2, n); };
    CHECK(rho_zp(s, P(1)) == P(2));
    CHECK(rho_zp(s, P(2)) == P(1));
    CHECK(rho_zp(s, P(3)) == P(3));
    CHECK(rho_zp(s, P(5)) == P(6));
    CHECK(rho_zp(s, P(-3)) == P(-2));
    CHECK(rho_hat(s, P(3)) == P(2));
    CHECK(rho_hat(s, P(0)) == P(0));
    CHECK(rho_hat(DigitPermutation(2), P(7)) == P(7));
    CHECK(s.apply(-3) == -2);
    CHECK(s.apply(5) == 6);

    std::mt19937_64 rng(3);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto r = random_perm(q, rng), r2 = random_perm(q, rng);
            for (std::int64_t n = -300; n <= 300; n += 7) {
                const auto y = PadicInteger::from_int(q, n);
                CHECK(rho_zp(r, y).to_int() == r.apply(n));
                CHECK(rho_zp(r.inverse(), rho_zp(r, y)) == y);
                CHECK(rho_zp(r.compose(r2), y) == rho_zp(r, rho_zp(r2, y)));
                // clause 2 and 5
                CHECK((r.apply(n) >= 0) == (n >= 0));
                CHECK(((r.apply(n) - n) % static_cast<std::int64_t>(q - 1)) == 0);
            }
            const PadicInteger y(q, {1, 0, q - 1, 1}, 1 % q);
            CHECK(rho_zp(r.inverse(), rho_zp(r, y)) == y);
        }
    }
}

TEST_CASE("digit permutation properties on small integers") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u}) {
        const std::uint32_t p = q;
        for (int trial = 0; trial < 4; ++trial) {
            const auto r = random_perm(q, rng, 5);
            for (std::uint64_t n = 0; n <= 256; ++n) {
                const auto rn = static_cast<std::uint64_t>(r.apply(static_cast<std::int64_t>(n)));
                CHECK(digit_sum(n, q) == digit_sum(rn, q));
                for (std::uint64_t j = 0; j <= 256; j += 5) {
                    const auto rj = static_cast<std::uint64_t>(r.apply(static_cast<std::int64_t>(j)));
                    CHECK(binom_mod_p(n, j, p) == binom_mod_p(rn, rj, p));
                    if (no_carry(n, j, q)) CHECK(r.apply(static_cast<std::int64_t>(n + j)) == static_cast<std::int64_t>(rn + rj));
                }
            }
        }
    }
}

TEST_CASE("action on Mahler functions") {
    const auto& F = FiniteField::of_order(2);
    const auto s = DigitPermutation::swap(2, 0, 1);
    CHECK(act_function(s, MahlerFunction::binomial(F, 1)) == MahlerFunction::binomial(F, 2));
    const auto f = MahlerFunction::binomial(F, 1);
    const auto fr = act_function(s, f);
    for (std::int64_t y = 0; y < 16; ++y) {
        const auto Y = PadicInteger::from_int(2, y);
        CHECK(fr.eval(Y) == f.eval(rho_zp(s.inverse(), Y)));
    }
    // multiplicativity
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u}) {
        const auto& G = FiniteField::of_order(q);
        for (int trial = 0; trial < 5; ++trial) {
            const auto r = random_perm(q, rng, 3);
            MahlerFunction a(G), b(G);
            for (int k = 0; k < 4; ++k) {
                a.set(rng() % 12, pi_poly(G, {static_cast<FiniteField::Elem>(1 + rng() % (q - 1)), 1}));
                b.set(rng() % 12, pi_poly(G, {1, static_cast<FiniteField::Elem>(rng() % q)}));
            }
            CHECK(act_function(r, a * b) == act_function(r, a) * act_function(r, b));
            for (std::int64_t y = 0; y < 64; ++y) {
                const auto Y = PadicInteger::from_int(q, y);
                CHECK((a * b).eval(Y) == a.eval(Y) * b.eval(Y));
                CHECK(act_function(r, a).eval(Y) == a.eval(rho_zp(r.inverse(), Y)));
            }
        }
    }
}

TEST_CASE("u^y is not preserved") {
    const auto& F = FiniteField::of_order(2);
    const auto s = DigitPermutation::swap(2, 0, 1);
    const auto u = pi_poly(F, {1, 1});
    const auto f = MahlerFunction::power(u, 32);
    const auto g = act_function(s, f);
    for (std::int64_t y = 0; y <= 64; y += 4) {
        const auto Y = PadicInteger::from_int(2, y);
        CHECK(equal_to_precision(g.eval(Y), f.eval(Y)));
        CHECK(equal_to_precision(f.eval(Y), one_unit_power(u, Y, 32)));
    }
    const auto one = PadicInteger::from_int(2, 1);
    CHECK_FALSE(equal_to_precision(g.eval(one), f.eval(one)));
    const auto neg = PadicInteger::from_int(2, -1);
    CHECK(equal_to_precision(f.eval(neg), one_unit_power(u, neg, 32)));
}

TEST_CASE("congruence between the two multinomial sums") {
    const auto s = DigitPermutation::swap(2, 0, 1);
    CHECK(multinomial_congruence(s, 0, 0).holds());
    CHECK(multinomial_congruence(s, 0, 0).s1 == std::map<std::uint64_t, std::uint32_t>{{0, 1}});
    CHECK(multinomial_congruence(s, 1, 2).holds());
    std::mt19937_64 rng(1);
    for (std::uint32_t q : {2u, 3u, 4u})
        for (int trial = 0; trial < 30; ++trial) {
            const auto r = random_perm(q, rng, 4);
            CHECK(multinomial_congruence(r, rng() % 200, rng() % 200).holds());
        }
    CHECK_THROWS_AS(multinomial_congruence(s, 5000, 1), GuardError);
}

TEST_CASE("action on divided powers") {
    const auto& F = FiniteField::of_order(2);
    const KFrac z(F);
    const auto s = DigitPermutation::swap(2, 0, 1);
    auto gen = [&](std::size_t i) { return DPSeries<KFrac>::generator(z, i, 16); };
    CHECK(act_divided_power(s, gen(1)) == gen(2));
    CHECK(act_divided_power(s, gen(1)) * act_divided_power(s, gen(2)) == act_divided_power(s, gen(3)));
    CHECK(act_divided_power(s, gen(1) * gen(1)).is_zero());
    CHECK(act_divided_power(DigitPermutation(2), gen(5)) == gen(5));
    // order 2: index 2 maps to 1, so the output window is [0, 1) and u^1 lands at 2
    CHECK_THROWS_AS(act_divided_power(s, DPSeries<KFrac>::generator(z, 1, 2)), DomainError);
    CHECK(act_divided_power(s, DPSeries<KFrac>::generator(z, 2, 3)).order() == 3);
    std::mt19937_64 rng(9);
    for (std::uint32_t q : {2u, 3u}) {
        const auto& G = FiniteField::of_order(q);
        const KFrac zq(G);
        for (int trial = 0; trial < 20; ++trial) {
            const auto r = random_perm(q, rng, 3);
            const std::size_t N = q * q * q * 2;
            DPSeries<KFrac> a(zq, N), b(zq, N);
            for (std::size_t i = 0; i < N; ++i) {
                a.coeff(i) = KFrac(APoly(G, {static_cast<FiniteField::Elem>(rng() % q)}));
                b.coeff(i) = KFrac(APoly(G, {static_cast<FiniteField::Elem>(rng() % q), 1}));
            }
            CHECK(act_divided_power(r, a * b) == act_divided_power(r, a) * act_divided_power(r, b));
            CHECK(act_divided_power(r.inverse(), act_divided_power(r, a)) == a);
        }
    }
}

TEST_CASE("action on k_inf and S_inf") {
    const auto& F = FiniteField::of_order(2);
    const auto s = DigitPermutation::swap(2, 0, 1);
    CHECK(act_kinfty(s, pi_poly(F, {1, 1})) == pi_poly(F, {1, 0, 1}));
    CHECK(act_kinfty(s, LaurentSeries::monomial(F, 1, 5)) == LaurentSeries::monomial(F, 1, 6));
    // pi^-2 = digits 0,1,1,...; swapped 1,0,1,1,... = -3
    CHECK(act_kinfty(s, LaurentSeries::monomial(F, 1, -2)) == LaurentSeries::monomial(F, 1, -3));
    CHECK(act_kinfty(s, LaurentSeries::monomial(F, 1, -2), NegativeExponents::Fixed) == LaurentSeries::monomial(F, 1, -2));
    const auto x = pi_poly(F, {1, 1, 0, 1}, -1, 20);
    const auto y = act_kinfty(s, x);
    CHECK(y.abs_precision() == 20);
    CHECK(act_kinfty(s, y) == x);
    CHECK_THROWS_AS(act_kinfty(s, pi_poly(F, {1, 1}, 0, 2)), DomainError);
    for (std::int64_t i = 0; i < 20; ++i) {
        const auto si = act_sinfty(s, SInfinityPoint::s(F, -i));
        CHECK(si == SInfinityPoint::s(F, -s.apply(i)));
    }
    CHECK(act_sinfty(s, SInfinityPoint::s(F, 0)) == SInfinityPoint::s(F, 0));
    std::mt19937_64 rng(4);
    const auto& F3 = FiniteField::of_order(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = random_perm(3, rng, 3);
        std::vector<FiniteField::Elem> a(12), b(12);
        for (auto& c : a) c = rng() % 3;
        for (auto& c : b) c = rng() % 3;
        const auto A = pi_poly(F3, a, -4), B = pi_poly(F3, b, -2);
        CHECK(act_kinfty(r, A + B) == act_kinfty(r, A) + act_kinfty(r, B));
        CHECK(act_kinfty(r, A.scale(2)) == act_kinfty(r, A).scale(2));
    }
}

TEST_CASE("rho2 and rho3") {
    const auto& F = FiniteField::of_order(2);
    const auto s = DigitPermutation::swap(2, 0, 1);
    const auto zero = LaurentSeries(F);
    CHECK(act_measure_rho2(s, DiracMeasureO::dirac(zero)) == DiracMeasureO::dirac(zero));
    const auto a = pi_poly(F, {1, 1}), b = pi_poly(F, {0, 1, 1, 1});
    CHECK(act_measure_rho2(s, DiracMeasureO::dirac(a)) == DiracMeasureO::dirac(act_kinfty(s.inverse(), a)));
    CHECK(act_measure_rho2(s, DiracMeasureO::dirac(a).convolve(DiracMeasureO::dirac(b))) ==
          act_measure_rho2(s, DiracMeasureO::dirac(a)).convolve(act_measure_rho2(s, DiracMeasureO::dirac(b))));
    // change of variables
    DiracMeasureO mu;
    mu.add(pi_poly(F, {1, 1}), a);
    mu.add(pi_poly(F, {0, 1}), b);
    auto f = [](const LaurentSeries& x) { return x * x + x; };
    const auto r3 = DigitPermutation::parse(2, "0:2,2:1,1:0");
    CHECK(act_measure_rho2(r3, mu).integrate(f) ==
          mu.integrate([&](const LaurentSeries& x) { return f(act_kinfty(r3.inverse(), x)); }));

    MahlerFunction m(F);
    m.set(0, LaurentSeries::monomial(F, 1, 1));
    const auto m3 = act_rho3(s, m);
    CHECK(m3.coeff(0) == LaurentSeries::monomial(F, 1, 2));
    MahlerFunction c(F);
    c.set(3, LaurentSeries::one(F));
    CHECK(act_rho3(s, c) == c);
}

TEST_CASE("extension to unramified fields") {
    std::mt19937_64 rng(21);
    for (std::uint32_t q : {2u, 3u}) {
        const auto& Fq = FiniteField::of_order(q);
        const auto& E = FiniteField::extension(Fq, 2);
        std::vector<ExtendedActionContext> ctxs;
        for (FiniteField::Elem a = 0; a < E.order(); ++a) {
            try {
                ctxs.emplace_back(Fq, E, std::vector<FiniteField::Elem>{1, a});
            } catch (const DomainError&) {
            }
        }
        CHECK(ctxs.size() == E.order() - q);
        CHECK_THROWS_AS(ExtendedActionContext(Fq, E, {1, 1}), DomainError);
        const auto r = random_perm(q, rng, 3);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<FiniteField::Elem> c(10);
            for (auto& x : c) x = rng() % E.order();
            const LaurentSeries beta(E, -3, c, 30);
            const auto ref = extend_unramified(ctxs.front(), r, beta);
            for (const auto& ctx : ctxs) CHECK(extend_unramified(ctx, r, beta) == ref);
            CHECK(ctxs.front().combine(ctxs.front().coordinates(beta)) == beta);
        }
        std::vector<FiniteField::Elem> d(6);
        for (auto& x : d) x = rng() % q;
        const LaurentSeries k(Fq, 0, d);
        CHECK(extend_unramified(ctxs.back(), r, k.lift(E)) == act_kinfty(r, k).lift(E));
        CHECK(extend_unramified(ctxs.back(), DigitPermutation(q), k.lift(E)) == k.lift(E));
    }
}
