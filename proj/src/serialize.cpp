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


#include "carlitz/serialize.hpp"

#include "carlitz/error.hpp"

namespace carlitz {

namespace {

[[noreturn]] void bad(const std::string& why) { throw DomainError("cli", "bad-json", why); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::int64_t as_int(const Json& j) {
    if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

const Json& as_array(const Json& j) {
    if (!j.is_array()) bad("expected an array, got " + j.dump());
    return j;
}

void check_kind(const Json& j, const char* kind) {
    const Json& k = member(j, "kind");
    if (!k.is_string() || k.get<std::string>() != kind) bad(std::string("expected kind '") + kind + "'");
}

}  // namespace

Json to_json(const FiniteField& f, FiniteField::Elem a) {
    if (f.is_prime_field()) return a;
    Json r = Json::array();
    for (auto c : f.prime_coordinates(a)) r.push_back(c);
    return r;
}

Json to_json(const APoly& a) {
    Json r = Json::array();
    for (auto c : a.coeffs()) r.push_back(to_json(a.field(), c));
    return r;
}

Json to_json(const KFrac& a) { return Json{{"num", to_json(a.num())}, {"den", to_json(a.den())}}; }

Json to_json(const XPolyK& a) {
    Json r = Json::array();
    for (const auto& c : a.coeffs()) r.push_back(to_json(c));
    return r;
}

Json to_json(const LaurentSeries& a) {
    Json r;
    r["lead"] = a.is_zero() ? std::int64_t{0} : a.lead();
    Json c = Json::array();
    for (auto e : a.coeffs()) c.push_back(to_json(a.field(), e));
    r["coeffs"] = std::move(c);
    if (a.is_exact()) r["prec"] = nullptr;
    else r["prec"] = a.abs_precision();
    if (a.uniformizer() == Uniformizer::Theta) r["uniformizer"] = "t";
    return r;
}

Json to_json(const PadicInteger& y) { return Json{{"head", y.head()}, {"tail", y.tail()}}; }

Json to_json(const MeasureMoments& mu) {
    Json c = Json::array();
    for (const auto& m : mu.moments) c.push_back(to_json(m));
    return Json{{"kind", "moments"}, {"coeffs", std::move(c)}};
}

Json to_json(const DPSeries<KFrac>& h) {
    Json c = Json::array();
    for (const auto& m : h.coeffs()) c.push_back(to_json(m));
    return Json{{"kind", "divided-power"}, {"coeffs", std::move(c)}};
}

Json to_json(const DPSeries<LaurentSeries>& h) {
    Json c = Json::array();
    for (const auto& m : h.coeffs()) c.push_back(to_json(m));
    return Json{{"kind", "divided-power"}, {"coeffs", std::move(c)}};
}

Json to_json(const MultiPoly& p) {
    Json r = Json::array();
    for (const auto& [e, c] : p.terms) r.push_back(Json{{"exp", e}, {"c", to_json(*p.f, c)}});
    return r;
}

FiniteField::Elem elem_from_json(const FiniteField& f, const Json& j) {
    if (f.is_prime_field()) {
        const auto v = as_int(j);
        if (v < 0 || v >= static_cast<std::int64_t>(f.order())) bad("element out of range: " + j.dump());
        return static_cast<FiniteField::Elem>(v);
    }
    as_array(j);
    if (j.size() != f.degree()) bad("element needs " + std::to_string(f.degree()) + " coordinates: " + j.dump());
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
        const auto v = as_int(x);
        if (v < 0 || v >= static_cast<std::int64_t>(f.characteristic())) bad("coordinate out of range: " + j.dump());
        c.push_back(static_cast<std::uint32_t>(v));
    }
    return f.from_prime_coordinates(c);
}

APoly apoly_from_json(const FiniteField& f, const Json& j) {
    std::vector<FiniteField::Elem> c;
    for (const auto& x : as_array(j)) c.push_back(elem_from_json(f, x));
    if (!c.empty() && c.back() == 0) bad("polynomial has a zero leading coefficient");
    return APoly(f, std::move(c));
}

KFrac kfrac_from_json(const FiniteField& f, const Json& j) {
    const APoly num = apoly_from_json(f, member(j, "num"));
    const APoly den = apoly_from_json(f, member(j, "den"));
    if (den.is_zero()) bad("zero denominator");
    const KFrac r(num, den);
    if (!(r.num() == num && r.den() == den)) bad("fraction is not reduced with monic denominator");
    return r;
}

XPolyK xpoly_from_json(const FiniteField& f, const Json& j) {
    std::vector<KFrac> c;
    for (const auto& x : as_array(j)) c.push_back(kfrac_from_json(f, x));
    if (!c.empty() && c.back().is_zero()) bad("polynomial has a zero leading coefficient");
    return XPolyK(KFrac(f), std::move(c));
}

LaurentSeries laurent_from_json(const FiniteField& f, const Json& j) {
    const auto lead = as_int(member(j, "lead"));
    std::vector<FiniteField::Elem> c;
    for (const auto& x : as_array(member(j, "coeffs"))) c.push_back(elem_from_json(f, x));
    const Json& p = member(j, "prec");
    const std::int64_t prec = p.is_null() ? LaurentSeries::kExact : as_int(p);
    Uniformizer u = Uniformizer::Pi;
    if (j.contains("uniformizer")) {
        if (j.at("uniformizer") != "t") bad("unknown uniformizer");
        u = Uniformizer::Theta;
    }
    if (!c.empty() && c.front() == 0) bad("series has a zero lead coefficient");
    if (c.empty() && lead != 0) bad("zero series must have lead 0");
    if (!c.empty() && prec != LaurentSeries::kExact && lead + static_cast<std::int64_t>(c.size()) > prec)
        bad("coefficients beyond the precision");
    return LaurentSeries(f, lead, std::move(c), prec, u);
}

PadicInteger padic_from_json(std::uint32_t q, const Json& j) {
    std::vector<std::uint32_t> head;
    for (const auto& x : as_array(member(j, "head"))) {
        const auto v = as_int(x);
        if (v < 0 || v >= static_cast<std::int64_t>(q)) bad("digit out of range");
        head.push_back(static_cast<std::uint32_t>(v));
    }
    const auto t = as_int(member(j, "tail"));
    if (t < 0 || t >= static_cast<std::int64_t>(q)) bad("digit out of range");
    PadicInteger y(q, std::move(head), static_cast<std::uint32_t>(t));
    if (!(to_json(y) == j)) bad("digit stream is not in normal form");
    return y;
}

MeasureMoments moments_from_json(const FiniteField& f, const Json& j) {
    check_kind(j, "moments");
    MeasureMoments mu;
    for (const auto& x : as_array(member(j, "coeffs"))) mu.moments.push_back(kfrac_from_json(f, x));
    return mu;
}

DPSeries<KFrac> dp_kfrac_from_json(const FiniteField& f, const Json& j) {
    check_kind(j, "divided-power");
    std::vector<KFrac> c;
    for (const auto& x : as_array(member(j, "coeffs"))) c.push_back(kfrac_from_json(f, x));
    return DPSeries<KFrac>(KFrac(f), std::move(c));
}

DPSeries<LaurentSeries> dp_laurent_from_json(const FiniteField& f, const Json& j) {
    check_kind(j, "divided-power");
    std::vector<LaurentSeries> c;
    for (const auto& x : as_array(member(j, "coeffs"))) c.push_back(laurent_from_json(f, x));
    return DPSeries<LaurentSeries>(LaurentSeries(f), std::move(c));
}

MultiPoly multipoly_from_json(const FiniteField& f, const Json& j) {
    MultiPoly p;
    p.f = &f;
    for (const auto& t : as_array(j)) {
        std::vector<std::uint32_t> e;
        for (const auto& x : as_array(member(t, "exp"))) {
            const auto v = as_int(x);
            if (v < 0) bad("negative exponent");
            e.push_back(static_cast<std::uint32_t>(v));
        }
        const auto c = elem_from_json(f, member(t, "c"));
        if (c == 0) bad("zero term");
        if (!p.terms.emplace(std::move(e), c).second) bad("repeated exponent");
    }
    return p;
}

namespace {

void dump_to(const Json& j, std::string& out) {
    if (j.is_object()) {
        out += '{';
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) out += ", ";
            first = false;
            out += Json(k).dump();
            out += ": ";
            dump_to(v, out);
        }
        out += '}';
    } else if (j.is_array()) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ", ";
            dump_to(j[i], out);
        }
        out += ']';
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    dump_to(j, out);
    return out;
}

}  // namespace carlitz
