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

#include <string>

#include "json.hpp"

#include "carlitz/apoly.hpp"
#include "carlitz/carlitz_basis.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/lseries.hpp"
#include "carlitz/measure.hpp"
#include "carlitz/padic.hpp"
#include "carlitz/rational.hpp"

namespace carlitz {

using Json = nlohmann::ordered_json;

// Schema (see README):
//   F_q element    integer when q is prime, else base-p coordinate list
//   APoly          list of elements, lowest degree first
//   KFrac          {"num": APoly, "den": APoly}
//   LaurentSeries  {"lead": e, "coeffs": [...], "prec": N or null}, plus
//                  "uniformizer": "t" for series in t
//   PadicInteger   {"head": [...], "tail": d}
//   DPSeries       {"kind": "divided-power", "coeffs": [...]}
//   MeasureMoments {"kind": "moments", "coeffs": [KFrac...]}
//   MultiPoly      [{"exp": [...], "c": element}, ...]
// Decoding raises DomainError "cli.bad-json".

Json to_json(const FiniteField& f, FiniteField::Elem a);
Json to_json(const APoly& a);
Json to_json(const KFrac& a);
Json to_json(const XPolyK& a);
Json to_json(const LaurentSeries& a);
Json to_json(const PadicInteger& y);
Json to_json(const MeasureMoments& mu);
Json to_json(const DPSeries<KFrac>& h);
Json to_json(const DPSeries<LaurentSeries>& h);
Json to_json(const MultiPoly& p);

FiniteField::Elem elem_from_json(const FiniteField& f, const Json& j);
APoly apoly_from_json(const FiniteField& f, const Json& j);
KFrac kfrac_from_json(const FiniteField& f, const Json& j);
XPolyK xpoly_from_json(const FiniteField& f, const Json& j);
LaurentSeries laurent_from_json(const FiniteField& f, const Json& j);
PadicInteger padic_from_json(std::uint32_t q, const Json& j);
MeasureMoments moments_from_json(const FiniteField& f, const Json& j);
DPSeries<KFrac> dp_kfrac_from_json(const FiniteField& f, const Json& j);
DPSeries<LaurentSeries> dp_laurent_from_json(const FiniteField& f, const Json& j);
MultiPoly multipoly_from_json(const FiniteField& f, const Json& j);

// One line, ": " and ", " separators, keys in insertion order.
std::string dump(const Json& j);

}  // namespace carlitz
