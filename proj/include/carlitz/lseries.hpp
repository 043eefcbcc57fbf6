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


#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/apoly.hpp"
#include "carlitz/digit_action.hpp"
#include "carlitz/error.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/padic.hpp"
#include "carlitz/sinfinity.hpp"

namespace carlitz {

// <a> = pi^deg(a) a for monic a, as an exact one-unit.
LaurentSeries one_unit_part(const APoly& a);

// a^s = x^deg(a) <a>^y
LaurentSeries exponentiate(const APoly& a, const SInfinityPoint& s, std::int64_t N);

// z_d(y) = sum over monic a of degree d of <a>^-y. Exact when -y is a
// nonnegative integer, else to absolute precision N.
LaurentSeries zeta_coefficient(const FiniteField& f, std::uint64_t d, const PadicInteger& y, std::int64_t N);

// Z(t) = sum_d z_d t^d with t = 1/x.
struct EntireSeries {
    PadicInteger y;
    std::vector<LaurentSeries> z;
    std::int64_t precision = 32;

    const FiniteField& field() const { return z.front().field(); }
    LaurentSeries eval(const LaurentSeries& t) const;
    LaurentSeries derivative_at(const LaurentSeries& t) const;
};

EntireSeries zeta_series(const FiniteField& f, const PadicInteger& y, std::uint64_t dmax, std::int64_t N);

// Largest d for which z_d(-i) may be nonzero: l_q(i) / (q - 1).
std::uint64_t vanishing_degree_bound(std::uint32_t q, std::uint64_t i);

inline constexpr std::uint64_t kTrivialZeroLimit = 1u << 16;

// sum_d sum_{a monic, deg d} a^i, a finite exact sum.
APoly trivial_zero_value(const FiniteField& f, std::uint64_t i);

struct NewtonSegment {
    std::int64_t d0, v0, d1, v1;
    std::int64_t run() const { return d1 - d0; }
    std::int64_t rise() const { return v1 - v0; }
};

struct NewtonPolygon {
    std::vector<std::pair<std::int64_t, std::int64_t>> vertices;  // (d, v(z_d))
    std::vector<NewtonSegment> segments;
    // A coefficient known only to be zero to some precision could change the hull.
    bool precision_limited = false;
};

NewtonPolygon newton_polygon(const EntireSeries& Z);

enum class Verdict { False, True, Indeterminate };
std::string verdict_name(Verdict v);

// Unit runs and strictly increasing slopes.
Verdict sheats_check(const NewtonPolygon& P);

struct ExtractedZero {
    LaurentSeries t;       // root of Z in t = 1/x
    std::int64_t slope;    // of its segment; v(t) = -slope
    std::int64_t residual; // v(Z(t))
    int iterations;
};

// Newton iteration from the two-term guess on every unit-run segment, until
// v(Z(t)) >= target.
std::vector<ExtractedZero> extract_zeros(const EntireSeries& Z, const NewtonPolygon& P, std::int64_t target);

struct TrivialZeroCheck {
    std::int64_t i, image;
    bool point_identity;
    bool value_zero, image_value_zero;
    bool holds() const { return point_identity && value_zero && image_value_zero; }
};

TrivialZeroCheck trivial_zero_permutation_check(const FiniteField& f, const DigitPermutation& rho, std::uint64_t i);

// Polynomial over F_q in t_1..t_n, keyed by exponent vectors.
struct MultiPoly {
    const FiniteField* f = nullptr;
    std::map<std::vector<std::uint32_t>, FiniteField::Elem> terms;
    bool is_zero() const { return terms.empty(); }
    std::string to_string() const;
};

inline constexpr std::uint32_t kDefaultDegreeCap = 8;

// sum over monic a of degree d of a(t_1)^m_1 ... a(t_n)^m_n, keeping only
// monomials of total degree <= cap (no cap when nullopt).
MultiPoly angles_power_sum(const FiniteField& f, std::uint64_t d, const std::vector<std::uint64_t>& m,
                           std::optional<std::uint32_t> cap = kDefaultDegreeCap);
// Same sum at points z_i of F_q((pi)).
LaurentSeries angles_power_sum(const FiniteField& f, std::uint64_t d, const std::vector<std::uint64_t>& m,
                               const std::vector<LaurentSeries>& z);

// sum l_q(m_i) < d (q - 1)
bool angles_vanishing_predicted(std::uint32_t q, std::uint64_t d, const std::vector<std::uint64_t>& m);

// sum over monic a of degree d of <a>^-y a^(i_1) ... a^(i_n), to absolute precision N.
LaurentSeries angles_deformed_coefficient(const FiniteField& f, std::uint64_t d, const PadicInteger& y,
                                          const std::vector<std::uint64_t>& indices, std::int64_t N);

// Lower bound for v(c_d) + n d: q^(floor(d/(n+1)) - 1) once d >= 2(n+1), else 0.
std::int64_t angles_growth_bound(std::uint32_t q, std::uint64_t d, std::size_t n);

// y -> sum c_i u_i^y for one-units u_i.
struct DirichletSeriesOnZp {
    std::vector<std::pair<LaurentSeries, LaurentSeries>> terms;  // (c, u)
    void add(const LaurentSeries& c, const LaurentSeries& u);
};

LaurentSeries gamma_transform(const DirichletSeriesOnZp& D, const PadicInteger& y, std::int64_t N);

}  // namespace carlitz
