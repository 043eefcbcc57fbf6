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

#include "carlitz/carlitz_basis.hpp"
#include "carlitz/error.hpp"
#include "carlitz/lucas.hpp"

using namespace carlitz;

namespace {

APoly P(const FiniteField& f, std::vector<FiniteField::Elem> c) { return APoly(f, std::move(c)); }

// Monic irreducibles of degree d by sieving out products of lower ones.
std::vector<APoly> irreducibles(const FiniteField& F, std::uint64_t d) {
    std::vector<APoly> out;
    for (const auto& a : enumerate_monic(F, d)) {
        bool irr = d >= 1;
        for (std::uint64_t e = 1; irr && 2 * e <= d; ++e)
            for (const auto& b : enumerate_monic(F, e))
                if ((a % b).is_zero()) {
                    irr = false;
                    break;
                }
        if (irr) out.push_back(a);
    }
    return out;
}

APoly random_poly(const FiniteField& F, std::mt19937_64& rng, int deg) {
    std::vector<FiniteField::Elem> c(deg + 1);
    for (auto& x : c) x = rng() % F.order();
    return APoly(F, c);
}

}  // namespace

TEST_CASE("brackets") {
    const auto& F2 = FiniteField::of_order(2);
    const auto& F3 = FiniteField::of_order(3);
    CarlitzBasis b2(F2), b3(F3);
    CHECK(b2.bracket(1) == P(F2, {0, 1, 1}));
    CHECK(b3.bracket(1) == P(F3, {0, 2, 0, 1}));
    CHECK(b3.bracket(1) == P(F3, {0, 1}) * P(F3, {1, 1}) * P(F3, {2, 1}));
    CHECK_THROWS_AS(b2.bracket(0), DomainError);
    for (const auto* F : {&F2, &F3}) {
        CarlitzBasis cb(*F);
        for (std::uint64_t i = 1; i <= 3; ++i) {
            APoly prod = APoly::constant(*F, 1);
            for (std::uint64_t d = 1; d <= i; ++d)
                if (i % d == 0)
                    for (const auto& f : irreducibles(*F, d)) prod *= f;
            CHECK(cb.bracket(i) == prod);
        }
    }
}

TEST_CASE("factorials") {
    for (std::uint32_t q : {2u, 3u}) {
        const auto& F = FiniteField::of_order(q);
        CarlitzBasis cb(F);
        CHECK(cb.D(0).is_one());
        CHECK(cb.L(0).is_one());
        CHECK(cb.factorial(0).is_one());
        for (std::uint64_t i = 0; i <= 2; ++i) {
            APoly prod = APoly::constant(F, 1), l = APoly::constant(F, 1);
            for (const auto& h : enumerate_monic(F, i)) prod *= h;
            for (std::uint64_t d = 0; d <= i; ++d)
                for (const auto& h : enumerate_monic(F, d)) {
                    CHECK((cb.L(i) % h).is_zero());
                    l = lcm(l, h);
                }
            CHECK(cb.D(i) == prod);
            CHECK(cb.L(i) == l);
            CHECK(cb.factorial(ipow(q, i)) == cb.D(i));
        }
        for (std::uint64_t j = 0; j <= 3; ++j) {
            const APoly pi = cb.factorial(ipow(q, j) - 1);
            APoly prod = APoly::constant(F, 1);
            for (const auto& a : enumerate_below(F, j))
                if (!a.is_zero()) prod *= a;
            if (j % 2 == 1) prod = -prod;
            CHECK(pi == cb.D(j).exact_div(cb.L(j)));
            CHECK(pi == prod);
        }
    }
    const auto& F2 = FiniteField::of_order(2);
    CarlitzBasis cb(F2);
    CHECK(cb.factorial(3) == cb.D(0) * cb.D(1));
    CHECK(cb.factorial(3) == P(F2, {0, 1, 1}));
}

TEST_CASE("e_t is the product over A_<t and is linear") {
    std::mt19937_64 rng(5);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto& F = FiniteField::of_order(q);
        CarlitzBasis cb(F);
        const auto x = XPolyA::x(APoly(F));
        for (std::uint64_t t = 0; t <= 2; ++t) {
            XPolyA prod = XPolyA::constant(APoly::constant(F, 1));
            for (const auto& a : enumerate_below(F, t)) prod *= x - XPolyA::constant(a);
            CHECK(cb.e_poly(t) == prod);
            CHECK(cb.e_poly(t).degree() == static_cast<std::int64_t>(ipow(q, t)));
        }
        for (std::uint64_t t = 0; t <= 3; ++t) {
            for (int n = 0; n < 10; ++n) {
                const APoly a = random_poly(F, rng, 4), b = random_poly(F, rng, 4);
                CHECK(cb.e_at(t, a + b) == cb.e_at(t, a) + cb.e_at(t, b));
                for (FiniteField::Elem z = 0; z < q; ++z) CHECK(cb.e_at(t, a.scale(z)) == cb.e_at(t, a).scale(z));
            }
            for (const auto& h : enumerate_monic(F, t)) CHECK(cb.e_at(t, h) == cb.D(t));
        }
    }
    const auto& F2 = FiniteField::of_order(2);
    CarlitzBasis cb(F2);
    CHECK(cb.e_at(1, APoly::theta(F2)) == cb.D(1));
    CHECK(cb.e_at(0, P(F2, {1, 1, 1})) == P(F2, {1, 1, 1}));
}

TEST_CASE("families: degrees, scaling, integrality") {
    for (std::uint32_t q : {2u, 3u}) {
        const auto& F = FiniteField::of_order(q);
        CarlitzBasis cb(F);
        const auto pts = enumerate_below(F, 3);
        for (std::uint64_t j = 0; j < ipow(q, 3); ++j) {
            CHECK(cb.g_poly(j).degree() == static_cast<std::int64_t>(j));
            CHECK(cb.ghat_poly(j).degree() == static_cast<std::int64_t>(j));
            CHECK(cb.G_poly(j).degree() == static_cast<std::int64_t>(j));
            for (const auto& a : pts) {
                CHECK(cb.G_at(j, a).is_integral());
                CHECK(cb.Ghat_at(j, a).is_integral());
                CHECK(cb.g_at(j, a) == cb.g_poly(j).eval(a));
                CHECK(cb.ghat_at(j, a) == cb.ghat_poly(j).eval(a));
            }
            for (FiniteField::Elem z = 1; z < q; ++z) {
                const APoly a = pts[pts.size() - 1];
                CHECK(cb.g_at(j, a.scale(z)) == cb.g_at(j, a).scale(F.pow(z, j)));
                CHECK(cb.ghat_at(j, a.scale(z)) == cb.ghat_at(j, a).scale(F.pow(z, j)));
            }
        }
        for (const auto& a : pts) CHECK(cb.G_at(1, a) == KFrac(a));
    }
}

TEST_CASE("ghat at q^m - 1 is e_m(x)/x") {
    for (std::uint32_t q : {2u, 3u}) {
        const auto& F = FiniteField::of_order(q);
        CarlitzBasis cb(F, 100);
        for (std::uint64_t m = 1; m <= 3; ++m) {
            const auto x = XPolyA::x(APoly(F));
            CHECK(cb.ghat_poly(ipow(q, m) - 1) * x == cb.e_poly(m));
        }
    }
    const auto& F2 = FiniteField::of_order(2);
    CarlitzBasis cb(F2);
    CHECK(cb.ghat_poly(1) == XPolyA(APoly(F2), {P(F2, {1}), P(F2, {1})}));
}

TEST_CASE("addition formulas") {
    std::mt19937_64 rng(17);
    for (std::uint32_t q : {2u, 3u}) {
        const auto& F = FiniteField::of_order(q);
        const std::uint32_t p = F.characteristic();
        CarlitzBasis cb(F);
        for (int n = 0; n < 3; ++n) {
            const APoly x = random_poly(F, rng, 3), y = random_poly(F, rng, 3);
            for (std::uint64_t j = 0; j < ipow(q, 3); ++j) {
                KFrac G(F), Gh(F);
                APoly g(F);
                for (std::uint64_t e = 0; e <= j; ++e) {
                    const auto c = binom_mod_p(j, e, p);
                    if (c == 0) continue;
                    G += (cb.G_at(e, x) * cb.G_at(j - e, y)).scale(F.from_int(c));
                    Gh += (cb.G_at(e, x) * cb.Ghat_at(j - e, y)).scale(F.from_int(c));
                    g += (cb.g_at(e, x) * cb.ghat_at(j - e, y)).scale(F.from_int(c));
                }
                CHECK(G == cb.G_at(j, x + y));
                CHECK(Gh == cb.Ghat_at(j, x + y));
                CHECK(g == cb.ghat_at(j, x + y));
            }
        }
    }
}

TEST_CASE("binomial of q^m - 1") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const std::uint32_t p = FiniteField::of_order(q).characteristic();
        for (std::uint64_t m = 1; m <= 3; ++m) {
            const std::uint64_t n = ipow(q, m) - 1;
            for (std::uint64_t j = 0; j <= n; ++j) CHECK(binom_mod_p(n, j, p) == (j % 2 == 0 ? 1u : p - 1) % p);
        }
    }
}

TEST_CASE("matrix identities") {
    std::mt19937_64 rng(23);
    for (std::uint32_t q : {2u, 3u}) {
        const auto& F = FiniteField::of_order(q);
        CarlitzBasis cb(F);
        for (std::uint64_t m = 0; m <= 3; ++m)
            for (int n = 0; n < 5; ++n) {
                std::vector<APoly> x;
                for (std::uint64_t j = 0; j <= m; ++j) x.push_back(random_poly(F, rng, static_cast<int>(m)));
                const auto t = matrix_triple(cb, x);
                CHECK(t.M == t.V * t.W);
                CHECK(bareiss_det(t.M) == bareiss_det(t.V) * bareiss_det(t.W));
            }
        std::vector<APoly> bad{APoly::theta(F), APoly::theta(F).pow(3)};
        CHECK_THROWS_AS(matrix_triple(cb, bad), DomainError);
        std::vector<APoly> rep{APoly::theta(F), APoly::theta(F), APoly::constant(F, 1)};
        CHECK(bareiss_det(matrix_triple(cb, rep).M).is_zero());
    }
    const auto& F2 = FiniteField::of_order(2);
    CarlitzBasis cb(F2);
    std::vector<APoly> mono{APoly::constant(F2, 1), APoly::theta(F2), APoly::theta(F2).pow(2)};
    const auto t = matrix_triple(cb, mono);
    CHECK(bareiss_det(t.W).is_one());
    CHECK(bareiss_det(t.M) == bareiss_det(t.V));
}

TEST_CASE("bracket Vandermonde determinant is a factorial") {
    // det V(0,[1],...,[m]) is the product D_0...D_m.
    for (std::uint32_t q : {2u, 3u}) {
        const auto& F = FiniteField::of_order(q);
        CarlitzBasis cb(F);
        for (std::uint64_t m = 1; m <= 3; ++m) {
            const auto v = vandermonde_factorial(cb, m);
            APoly prod = APoly::constant(F, 1);
            for (std::uint64_t i = 0; i <= m; ++i) prod *= cb.D(i);
            CHECK(v.detV == v.detM);
            CHECK(v.detV == prod);
            CHECK(v.shifted_holds());
        }
    }
}

TEST_CASE("frobenius expansion") {
    const auto& F2 = FiniteField::of_order(2);
    CarlitzBasis cb(F2);
    const APoly f = P(F2, {1, 0, 1});
    CHECK(frobenius_expand(cb, f, 0).sum == f);
    CHECK(frobenius_expand(cb, APoly::theta(F2), 1).sum == APoly::theta(F2) + cb.bracket(1));
    CHECK(frobenius_expand(cb, f, 1).holds());
    std::mt19937_64 rng(2);
    const auto& F3 = FiniteField::of_order(3);
    CarlitzBasis cb3(F3);
    for (int n = 0; n < 20; ++n)
        for (std::uint64_t i = 0; i <= 3; ++i) CHECK(frobenius_expand(cb3, random_poly(F3, rng, 5), i).holds());
}
