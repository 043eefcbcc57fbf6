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

#include "carlitz/error.hpp"
#include "carlitz/expr.hpp"
#include "carlitz/serialize.hpp"

using namespace carlitz;

namespace {

APoly random_poly(const FiniteField& F, std::mt19937_64& rng, int deg) {
    std::vector<FiniteField::Elem> c(deg + 1);
    for (auto& x : c) x = rng() % F.order();
    return APoly(F, c);
}

template <class T, class FromJson>
void round_trip(const T& v, FromJson from) {
    const Json j = to_json(v);
    const Json back = Json::parse(dump(j));
    CHECK(back == j);
    CHECK(from(back) == v);
}

}  // namespace

TEST_CASE("expressions in A and k") {
    const auto& F = FiniteField::of_order(3);
    const APoly t = APoly::theta(F);
    const APoly one = APoly::constant(F, 1);
    CHECK(parse_apoly(F, "t^3 - t") == t.pow(3) - t);
    CHECK(parse_apoly(F, "2t(t+1)") == (t * (t + one)).scale(2));
    CHECK(parse_apoly(F, "(t^2-1)/(t+1)") == t - one);
    CHECK(parse_apoly(F, "-t + 4") == one - t);
    CHECK(parse_kfrac(F, "1/t + t^-2") == KFrac(t + one, t.pow(2)));
    CHECK(parse_kfrac(F, "(t+1)^-1 * (t+1)") == KFrac(one));
    CHECK_THROWS_AS(parse_apoly(F, "1/t"), DomainError);
    CHECK_THROWS_AS(parse_apoly(F, "x"), DomainError);
    CHECK_THROWS_AS(parse_apoly(F, "t +"), DomainError);
    CHECK_THROWS_AS(parse_apoly(F, "(t"), DomainError);
    CHECK_THROWS_AS(parse_kfrac(F, "1/(t-t)"), DomainError);

    const auto& F4 = FiniteField::of_order(4);
    const APoly g = APoly::constant(F4, F4.generator());
    CHECK(parse_apoly(F4, "g^3") == APoly::constant(F4, 1));
    CHECK(parse_apoly(F4, "g t + 1") == g * APoly::theta(F4) + APoly::constant(F4, 1));
}

TEST_CASE("expressions in k[x] and k_inf") {
    const auto& F = FiniteField::of_order(2);
    const KFrac zero(F);
    const XPolyK x = XPolyK::x(zero);
    const XPolyK t = XPolyK::constant(KFrac(APoly::theta(F)));
    CHECK(parse_xpoly(F, "x^3 + t*x") == x.pow(3) + t * x);
    CHECK(parse_xpoly(F, "x/t") == x.scale(KFrac(APoly::theta(F)).inverse()));
    CHECK_THROWS_AS(parse_xpoly(F, "1/x"), DomainError);

    const LaurentSeries p = LaurentSeries::monomial(F, 1, 1);
    CHECK(parse_laurent(F, "1+p", 20) == LaurentSeries::one(F) + p);
    CHECK(parse_laurent(F, "t^2 p", 20) == LaurentSeries::monomial(F, 1, -1));
    const LaurentSeries inv = parse_laurent(F, "1/(1+p)", 20);
    CHECK(equal_to_precision(inv * (LaurentSeries::one(F) + p), LaurentSeries::one(F)));
    CHECK(inv.abs_precision() == 20);
    CHECK(parse_laurent(F, "p^-3", 20).is_exact());
}

TEST_CASE("json round trips") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
        const auto& F = FiniteField::of_order(q);
        for (int n = 0; n < 20; ++n) {
            const APoly a = random_poly(F, rng, static_cast<int>(rng() % 6));
            APoly b = random_poly(F, rng, static_cast<int>(rng() % 4));
            if (b.is_zero()) b = APoly::constant(F, 1);
            round_trip(a, [&](const Json& j) { return apoly_from_json(F, j); });
            const KFrac r(a, b);
            round_trip(r, [&](const Json& j) { return kfrac_from_json(F, j); });

            std::vector<FiniteField::Elem> c(1 + rng() % 5);
            for (auto& x : c) x = rng() % q;
            c.front() = 1 + rng() % (q - 1);
            const auto lead = static_cast<std::int64_t>(rng() % 11) - 5;
            const LaurentSeries exact(F, lead, c);
            round_trip(exact, [&](const Json& j) { return laurent_from_json(F, j); });
            const LaurentSeries trunc(F, lead, c, lead + 9);
            round_trip(trunc, [&](const Json& j) { return laurent_from_json(F, j); });
            round_trip(LaurentSeries::zero_to(F, lead), [&](const Json& j) { return laurent_from_json(F, j); });
            round_trip(exact.with_uniformizer(Uniformizer::Theta), [&](const Json& j) { return laurent_from_json(F, j); });

            const PadicInteger y = PadicInteger::from_int(q, static_cast<std::int64_t>(rng() % 200) - 100);
            round_trip(y, [&](const Json& j) { return padic_from_json(q, j); });
        }
        const FiniteField::Elem e = static_cast<FiniteField::Elem>(q - 1);
        const Json je = to_json(F, e);
        CHECK(elem_from_json(F, je) == e);
        CHECK(je.is_array() == !F.is_prime_field());
    }

    const auto& F = FiniteField::of_order(3);
    const KFrac zero(F);
    const XPolyK f = parse_xpoly(F, "x^2/(t+1) + t");
    round_trip(f, [&](const Json& j) { return xpoly_from_json(F, j); });
    const MeasureMoments mu{{KFrac(APoly::theta(F)), zero, KFrac(APoly::constant(F, 2))}};
    round_trip(mu, [&](const Json& j) { return moments_from_json(F, j); });
    const DPSeries<KFrac> h(zero, mu.moments);
    round_trip(h, [&](const Json& j) { return dp_kfrac_from_json(F, j); });
    const DPSeries<LaurentSeries> hl(LaurentSeries(F), {LaurentSeries::one(F), LaurentSeries::zero_to(F, 4)});
    round_trip(hl, [&](const Json& j) { return dp_laurent_from_json(F, j); });
    const MultiPoly mp = angles_power_sum(F, 1, {1, 1}, std::nullopt);
    const Json jm = to_json(mp);
    const MultiPoly back = multipoly_from_json(F, jm);
    CHECK(back.terms == mp.terms);
}

TEST_CASE("json schema and rejection") {
    const auto& F2 = FiniteField::of_order(2);
    CHECK(dump(to_json(LaurentSeries(F2, -1, {1, 0, 1}, 5))) == R"({"lead": -1, "coeffs": [1, 0, 1], "prec": 5})");
    CHECK(dump(to_json(PadicInteger::from_int(2, -3))) == R"({"head": [1, 0], "tail": 1})");
    const auto& F4 = FiniteField::of_order(4);
    CHECK(dump(to_json(F4, F4.generator())) == "[0, 1]");
    CHECK(dump(Json{{"value", "0"}, {"isZero", true}}) == R"({"value": "0", "isZero": true})");

    CHECK_THROWS_AS(apoly_from_json(F2, Json::parse("[1, 2]")), DomainError);
    CHECK_THROWS_AS(apoly_from_json(F2, Json::parse("[1, 0]")), DomainError);
    CHECK_THROWS_AS(elem_from_json(F4, Json::parse("3")), DomainError);
    CHECK_THROWS_AS(laurent_from_json(F2, Json::parse(R"({"lead": 0, "coeffs": [0, 1], "prec": null})")), DomainError);
    CHECK_THROWS_AS(laurent_from_json(F2, Json::parse(R"({"lead": 0, "coeffs": [1, 1], "prec": 1})")), DomainError);
    CHECK_THROWS_AS(kfrac_from_json(F2, Json::parse(R"({"num": [0, 1], "den": [0, 1]})")), DomainError);
    CHECK_THROWS_AS(moments_from_json(F2, Json::parse(R"({"kind": "divided-power", "coeffs": []})")), DomainError);
    CHECK_THROWS_AS(padic_from_json(2, Json::parse(R"({"head": [1, 1], "tail": 1})")), DomainError);
}
