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


#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "carlitz/carlitz_expansion.hpp"
#include "carlitz/digit_action.hpp"
#include "carlitz/error.hpp"
#include "carlitz/expr.hpp"
#include "carlitz/lseries.hpp"
#include "carlitz/lucas.hpp"
#include "carlitz/measure.hpp"
#include "carlitz/selftest.hpp"
#include "carlitz/serialize.hpp"

using namespace carlitz;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitGuard = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
    std::uint32_t q = 2;
    std::string modulus;
    std::int64_t prec = 32;
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
};

// The result document, kept as JSON and as text lines side by side.
struct Output {
    Json json = Json::object();
    std::vector<std::string> text;

    void add(const std::string& key, Json j, const std::string& t) {
        json[key] = std::move(j);
        text.push_back(key + ": " + t);
    }
    void add(const std::string& key, Json j) {
        const std::string t = j.is_string() ? j.get<std::string>() : dump(j);
        add(key, std::move(j), t);
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void usage_error(const std::string& why) { throw UsageError(why); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::uint64_t parse_u64(const std::string& s) {
    try {
        std::size_t n = 0;
        const long long v = std::stoll(s, &n);
        if (n != s.size() || v < 0) usage_error("expected a nonnegative integer, got '" + s + "'");
        return static_cast<std::uint64_t>(v);
    } catch (const std::logic_error&) {
        usage_error("expected a nonnegative integer, got '" + s + "'");
    }
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    if (s.empty()) return out;
    for (const auto& x : split(s, ',')) out.push_back(parse_u64(x));
    return out;
}

// An integer, or "d0,d1,...;tail" for a digit stream.
PadicInteger parse_y(std::uint32_t q, const std::string& s) {
    const auto semi = s.find(';');
    if (semi == std::string::npos) {
        try {
            std::size_t n = 0;
            const long long v = std::stoll(s, &n);
            if (n == s.size()) return PadicInteger::from_int(q, v);
        } catch (const std::logic_error&) {
        }
        usage_error("y must be an integer or 'digits;tail', got '" + s + "'");
    }
    std::vector<std::uint32_t> head;
    for (auto d : parse_list(s.substr(0, semi))) {
        if (d >= q) usage_error("digit " + std::to_string(d) + " out of range");
        head.push_back(static_cast<std::uint32_t>(d));
    }
    const auto tail = parse_u64(s.substr(semi + 1));
    if (tail >= q) usage_error("tail digit out of range");
    return PadicInteger(q, head, static_cast<std::uint32_t>(tail));
}

const FiniteField& field_of(const RunConfig& cfg) {
    if (cfg.q < 2 || cfg.q > FiniteField::kMaxOrder) usage_error("q out of range");
    if (cfg.modulus.empty()) return FiniteField::of_order(cfg.q);
    std::uint32_t p = 2;
    while (cfg.q % p != 0) ++p;
    std::vector<std::uint32_t> m;
    for (auto c : parse_list(cfg.modulus)) m.push_back(static_cast<std::uint32_t>(c));
    const auto& F = FiniteField::with_modulus(p, m);
    if (F.order() != cfg.q) usage_error("modulus degree does not match q");
    return F;
}

Json y_json(const PadicInteger& y) {
    if (const auto v = y.to_int()) return *v;
    return to_json(y);
}

Json verdict_json(Verdict v) { return verdict_name(v); }

void emit(const RunConfig& cfg, const Output& out) {
    if (cfg.format == "text") {
        for (const auto& l : out.text) std::cout << l << "\n";
    } else {
        std::cout << dump(out.json) << "\n";
    }
}

// ---------------------------------------------------------------- commands

Output cmd_table(const RunConfig& cfg, std::uint64_t max) {
    CarlitzBasis cb(field_of(cfg));
    Output o;
    Json rows = Json::array();
    for (std::uint64_t i = 0; i <= max; ++i) {
        Json r{{"i", i}};
        r["bracket"] = i == 0 ? Json(nullptr) : to_json(cb.bracket(i));
        r["D"] = to_json(cb.D(i));
        r["L"] = to_json(cb.L(i));
        o.text.push_back("i=" + std::to_string(i) + " [i]=" + (i == 0 ? std::string("-") : cb.bracket(i).to_string()) +
                         " D=" + cb.D(i).to_string() + " L=" + cb.L(i).to_string());
        rows.push_back(std::move(r));
    }
    o.json["q"] = cfg.q;
    o.json["rows"] = std::move(rows);
    Json fact = Json::array();
    for (std::uint64_t j = 0; j <= max; ++j) {
        fact.push_back(to_json(cb.factorial(j)));
        o.text.push_back("Pi(" + std::to_string(j) + ")=" + cb.factorial(j).to_string());
    }
    o.json["factorial"] = std::move(fact);
    return o;
}

Output cmd_eval(const RunConfig& cfg, const std::string& family, std::uint64_t j, const std::string& at) {
    const auto& F = field_of(cfg);
    CarlitzBasis cb(F, std::max<std::uint64_t>(j + 1, 0));
    const Family fam = parse_family(family);
    const KFrac x = parse_kfrac(F, at);
    const KFrac v = cb.eval(fam, j, x);
    Output o;
    o.add("family", family_name(fam));
    o.add("index", j);
    o.add("at", to_json(x), x.to_string());
    o.add("value", to_json(v), v.to_string());
    return o;
}

Output cmd_det(const RunConfig& cfg, std::uint64_t m) {
    CarlitzBasis cb(field_of(cfg));
    const auto v = vandermonde_factorial(cb, m);
    Output o;
    o.add("m", m);
    o.add("detV", to_json(v.detV), v.detV.to_string());
    o.add("detM", to_json(v.detM), v.detM.to_string());
    o.add("piLiteral", to_json(v.pi_literal), v.pi_literal.to_string());
    o.add("piShifted", to_json(v.pi_shifted), v.pi_shifted.to_string());
    o.add("literalHolds", v.literal_holds());
    o.add("shiftedHolds", v.shifted_holds());
    return o;
}

Output cmd_expand(const RunConfig& cfg, const std::string& basis, const std::string& f, std::optional<std::uint64_t> m,
                  bool monic) {
    const auto& F = field_of(cfg);
    CarlitzBasis cb(F);
    const XPolyK p = parse_xpoly(F, f);
    const Family fam = parse_family(basis);
    if (fam == Family::e) usage_error("the e family is not a basis");
    const std::uint64_t level = m.value_or(minimal_level(cb, p.degree()));
    const auto ex = monic ? expand_monic(cb, p, fam, level) : expand(cb, p, fam, level);
    Output o;
    o.add("basis", family_name(fam));
    o.add("level", ex.level);
    Json c = Json::array();
    std::string t;
    for (std::size_t i = 0; i < ex.coeffs.size(); ++i) {
        c.push_back(to_json(ex.coeffs[i]));
        t += (i ? ", " : "") + ex.coeffs[i].to_string();
    }
    o.add("coeffs", std::move(c), "[" + t + "]");
    return o;
}

Output cmd_ortho(const RunConfig& cfg, std::uint64_t l, std::uint64_t j, std::uint64_t m, const std::string& mode) {
    CarlitzBasis cb(field_of(cfg));
    OrthoMode om;
    if (mode == "monic") om = OrthoMode::Monic;
    else if (mode == "all") om = OrthoMode::AllBelow;
    else usage_error("mode must be monic or all");
    const KFrac v = orthogonality_sum(cb, l, j, m, om);
    const KFrac e = orthogonality_expected(cb, l, j, m);
    Output o;
    o.add("value", to_json(v), v.to_string());
    o.add("expected", to_json(e), e.to_string());
    o.add("matches", v == e);
    return o;
}

MeasureMoments parse_dirac(const CarlitzBasis& cb, const std::string& s, std::size_t order) {
    std::vector<std::pair<KFrac, APoly>> terms;
    for (const auto& item : split(s, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) terms.emplace_back(KFrac(APoly::constant(cb.field(), 1)), parse_apoly(cb.field(), item));
        else terms.emplace_back(parse_kfrac(cb.field(), item.substr(0, colon)), parse_apoly(cb.field(), item.substr(colon + 1)));
    }
    if (terms.empty()) usage_error("empty Dirac combination");
    return dirac_combination(cb, terms, order);
}

void add_measure(Output& o, const MeasureMoments& mu) {
    const auto h = wagner_transform(mu);
    std::string tm, th;
    for (std::size_t i = 0; i < mu.moments.size(); ++i) tm += (i ? ", " : "") + mu.moments[i].to_string();
    for (std::size_t i = 0; i < h.order(); ++i) th += (i ? ", " : "") + h.coeff(i).to_string();
    o.add("moments", to_json(mu), "[" + tm + "]");
    o.add("transform", to_json(h), "[" + th + "]");
}

Output cmd_measure_transform(const RunConfig& cfg, const std::string& dirac_s, std::size_t order) {
    CarlitzBasis cb(field_of(cfg));
    Output o;
    add_measure(o, parse_dirac(cb, dirac_s, order));
    return o;
}

Output cmd_measure_conv(const RunConfig& cfg, const std::string& a, const std::string& b, std::size_t order) {
    CarlitzBasis cb(field_of(cfg));
    const auto mu = parse_dirac(cb, a, order), nu = parse_dirac(cb, b, order);
    const auto c = convolve(mu, nu);
    Output o;
    add_measure(o, c);
    o.add("multiplicative", wagner_transform(c) == wagner_transform(mu) * wagner_transform(nu));
    return o;
}

Output cmd_perm_act(const RunConfig& cfg, const std::string& perm, const std::string& on, const std::string& y,
                    const std::string& x, const std::string& dp, const std::string& negative) {
    const auto& F = field_of(cfg);
    const auto rho = DigitPermutation::parse(cfg.q, perm);
    NegativeExponents conv;
    if (negative == "digit") conv = NegativeExponents::Digit;
    else if (negative == "fixed") conv = NegativeExponents::Fixed;
    else usage_error("--negative must be digit or fixed");
    Output o;
    if (on == "zp") {
        if (y.empty()) usage_error("--on zp needs --y");
        const auto r = rho_zp(rho, parse_y(cfg.q, y));
        o.add("result", y_json(r), r.to_string());
    } else if (on == "kinfty") {
        if (x.empty()) usage_error("--on kinfty needs --x");
        const auto r = act_kinfty(rho, parse_laurent(F, x, cfg.prec), conv);
        o.add("result", to_json(r), r.to_string());
    } else if (on == "sinfty") {
        if (x.empty() || y.empty()) usage_error("--on sinfty needs --x and --y");
        const auto r = act_sinfty(rho, SInfinityPoint{parse_laurent(F, x, cfg.prec), parse_y(cfg.q, y)}, conv);
        o.add("x", to_json(r.x), r.x.to_string());
        o.add("y", y_json(r.y), r.y.to_string());
    } else if (on == "dp") {
        if (dp.empty()) usage_error("--on dp needs --dp");
        std::vector<KFrac> c;
        for (const auto& s : split(dp, ',')) c.push_back(parse_kfrac(F, s));
        const auto r = act_divided_power(rho, DPSeries<KFrac>(KFrac(F), c));
        std::string t;
        for (std::size_t i = 0; i < r.order(); ++i) t += (i ? ", " : "") + r.coeff(i).to_string();
        o.add("result", to_json(r), "[" + t + "]");
    } else {
        usage_error("--on must be zp, kinfty, dp or sinfty");
    }
    return o;
}

Output cmd_zeta(const RunConfig& cfg, const std::string& y_s, std::uint64_t dmax, bool newton, bool zeros,
                std::int64_t target) {
    const auto& F = field_of(cfg);
    const auto y = parse_y(cfg.q, y_s);
    const auto Z = zeta_series(F, y, dmax, cfg.prec);
    Output o;
    o.add("q", cfg.q);
    o.add("y", y_json(y), y.to_string());
    Json z = Json::array();
    for (std::size_t d = 0; d < Z.z.size(); ++d) {
        z.push_back(to_json(Z.z[d]));
        o.text.push_back("z_" + std::to_string(d) + " = " + Z.z[d].to_string());
    }
    o.json["z"] = std::move(z);
    if (!newton && !zeros) return o;
    const auto P = newton_polygon(Z);
    Json verts = Json::array(), segs = Json::array();
    for (const auto& [d, v] : P.vertices) verts.push_back(Json::array({d, v}));
    std::string ts;
    for (const auto& s : P.segments) {
        segs.push_back(Json{{"d0", s.d0}, {"v0", s.v0}, {"d1", s.d1}, {"v1", s.v1}, {"run", s.run()}, {"rise", s.rise()}});
        ts += " (" + std::to_string(s.d0) + "," + std::to_string(s.v0) + ")-(" + std::to_string(s.d1) + "," +
              std::to_string(s.v1) + ")";
    }
    const Verdict v = sheats_check(P);
    o.json["newton"] = Json{{"vertices", std::move(verts)},
                            {"segments", std::move(segs)},
                            {"precisionLimited", P.precision_limited},
                            {"verdict", verdict_json(v)}};
    o.text.push_back("segments:" + ts);
    o.text.push_back("verdict: " + verdict_name(v));
    if (zeros) {
        if (v != Verdict::True) throw DomainError("lseries", "not-simple", "zeros are extracted only on unit runs of a True polygon");
        Json zs = Json::array();
        for (const auto& e : extract_zeros(Z, P, target)) {
            zs.push_back(Json{{"t", to_json(e.t)}, {"slope", e.slope}, {"residual", e.residual}, {"iterations", e.iterations}});
            o.text.push_back("zero t = " + e.t.to_string() + " residual " + std::to_string(e.residual));
        }
        o.json["zeros"] = std::move(zs);
    }
    return o;
}

Output cmd_trivzero(const RunConfig& cfg, std::uint64_t i) {
    const APoly v = trivial_zero_value(field_of(cfg), i);
    Output o;
    o.add("value", v.to_string());
    o.add("isZero", v.is_zero());
    return o;
}

Output cmd_angles_sum(const RunConfig& cfg, std::uint64_t d, const std::string& m_s, std::optional<std::uint32_t> cap) {
    const auto& F = field_of(cfg);
    const auto m = parse_list(m_s);
    if (m.empty()) usage_error("--m needs at least one exponent");
    const auto p = angles_power_sum(F, d, m, cap);
    Output o;
    o.add("sum", to_json(p), p.to_string());
    o.add("isZero", p.is_zero());
    o.add("predictedVanishing", angles_vanishing_predicted(cfg.q, d, m));
    return o;
}

Output cmd_angles_coeff(const RunConfig& cfg, std::uint64_t d, const std::string& y_s, const std::string& idx_s) {
    const auto& F = field_of(cfg);
    const auto idx = parse_list(idx_s);
    const auto c = angles_deformed_coefficient(F, d, parse_y(cfg.q, y_s), idx, cfg.prec);
    Output o;
    o.add("coeff", to_json(c), c.to_string());
    if (!c.is_zero()) o.add("growth", c.valuation() + static_cast<std::int64_t>(idx.size() * d));
    o.add("bound", angles_growth_bound(cfg.q, d, idx.size()));
    return o;
}

Output cmd_gamma(const RunConfig& cfg, const std::string& points, const std::string& y_s) {
    const auto& F = field_of(cfg);
    DirichletSeriesOnZp D;
    for (const auto& item : split(points, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) usage_error("points are 'weight:unit' pairs");
        D.add(parse_laurent(F, item.substr(0, colon), cfg.prec), parse_laurent(F, item.substr(colon + 1), cfg.prec));
    }
    const auto y = parse_y(cfg.q, y_s);
    const auto v = gamma_transform(D, y, cfg.prec);
    Output o;
    o.add("y", y_json(y), y.to_string());
    o.add("value", to_json(v), v.to_string());
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Function field arithmetic: Carlitz bases, measures, digit permutations and zeta values"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--q", cfg.q, "field size")->capture_default_str();
    app.add_option("--modulus", cfg.modulus, "defining polynomial over F_p, comma-separated, lowest degree first");
    app.add_option("--prec", cfg.prec, "precision N")->capture_default_str();
    app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for the randomized suites")->capture_default_str();

    std::function<Output()> run;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    std::uint64_t max = 3, index = 0, m = 2, l = 0, j = 0, d = 3, dmax = 6, i = 1;
    std::optional<std::uint64_t> level;
    std::optional<std::uint32_t> cap;
    std::size_t order = kDefaultOrder;
    std::int64_t target = 32;
    std::string family = "g", at, basis = "G", f, mode = "monic", dirac_a, dirac_b, perm, on = "zp", y, x, dp,
                negative = "digit", ms, indices, points, only;
    bool newton = false, zeros = false, monic = false;

    auto* table = sub(&app, "table", "factorial tables");
    table->add_option("--max", max)->capture_default_str();
    table->callback([&] { run = [&] { return cmd_table(cfg, max); }; });

    auto* eval = sub(&app, "eval", "evaluate a polynomial family");
    eval->add_option("--family", family, "e, g, ghat, G or Ghat")->capture_default_str();
    eval->add_option("--index", index)->required();
    eval->add_option("--at", at, "point of k")->required();
    eval->callback([&] { run = [&] { return cmd_eval(cfg, family, index, at); }; });

    auto* det = sub(&app, "det", "bracket Vandermonde determinant");
    det->add_option("--m", m)->capture_default_str();
    det->callback([&] { run = [&] { return cmd_det(cfg, m); }; });

    auto* expand = sub(&app, "expand", "expand a polynomial in a Carlitz basis");
    expand->add_option("--basis", basis)->capture_default_str();
    expand->add_option("--f", f, "polynomial in x over k")->required();
    expand->add_option("--m", level, "level (default: minimal)");
    expand->add_flag("--monic", monic, "sum over monics of degree m");
    expand->callback([&] { run = [&] { return cmd_expand(cfg, basis, f, level, monic); }; });

    auto* ortho = sub(&app, "ortho", "orthogonality sum");
    ortho->add_option("--l", l)->required();
    ortho->add_option("--j", j)->required();
    ortho->add_option("--m", m)->required();
    ortho->add_option("--mode", mode, "monic or all")->capture_default_str();
    ortho->callback([&] { run = [&] { return cmd_ortho(cfg, l, j, m, mode); }; });

    auto* measure = sub(&app, "measure", "measures and their Wagner transforms");
    measure->require_subcommand(1);
    auto* transform = sub(measure, "transform", "moments and transform of a Dirac combination");
    transform->add_option("--dirac", dirac_a, "points or weight:point pairs, comma-separated")->required();
    transform->add_option("--order", order, "truncation order (default q^3)");
    transform->callback([&] { run = [&] { return cmd_measure_transform(cfg, dirac_a, order); }; });
    auto* conv = sub(measure, "conv", "convolution of two Dirac combinations");
    conv->add_option("--dirac", dirac_a)->required();
    conv->add_option("--with", dirac_b)->required();
    conv->add_option("--order", order);
    conv->callback([&] { run = [&] { return cmd_measure_conv(cfg, dirac_a, dirac_b, order); }; });

    auto* permc = sub(&app, "perm", "digit permutations");
    permc->require_subcommand(1);
    auto* act = sub(permc, "act", "apply a digit permutation");
    act->add_option("--perm", perm, "from:to pairs, comma-separated")->required();
    act->add_option("--on", on, "zp, kinfty, dp or sinfty")->capture_default_str();
    act->add_option("--y", y, "integer or 'digits;tail'");
    act->add_option("--x", x, "Laurent series expression in p = 1/t");
    act->add_option("--dp", dp, "divided-power coefficients, comma-separated");
    act->add_option("--negative", negative, "digit or fixed")->capture_default_str();
    act->callback([&] { run = [&] { return cmd_perm_act(cfg, perm, on, y, x, dp, negative); }; });

    auto* zeta = sub(&app, "zeta", "zeta coefficients, Newton polygon and zeros");
    zeta->add_option("--y", y)->required();
    zeta->add_option("--dmax", dmax)->capture_default_str();
    zeta->add_flag("--newton", newton);
    zeta->add_flag("--zeros", zeros);
    zeta->add_option("--target", target, "residual valuation for zeros")->capture_default_str();
    zeta->callback([&] { run = [&] { return cmd_zeta(cfg, y, dmax, newton, zeros, target); }; });

    auto* triv = sub(&app, "trivzero", "value at a trivial zero");
    triv->add_option("--i", i)->capture_default_str();
    triv->callback([&] { run = [&] { return cmd_trivzero(cfg, i); }; });

    auto* angles = sub(&app, "angles", "power sums over monics");
    angles->require_subcommand(1);
    auto* asum = sub(angles, "sum", "sum of a(t_1)^m_1 ... a(t_n)^m_n");
    asum->add_option("--d", d)->capture_default_str();
    asum->add_option("--m", ms, "exponents, comma-separated")->required();
    asum->add_option("--cap", cap, "total degree cap");
    asum->callback([&] { run = [&] { return cmd_angles_sum(cfg, d, ms, cap); }; });
    auto* acoeff = sub(angles, "coeff", "deformed coefficient");
    acoeff->add_option("--d", d)->capture_default_str();
    acoeff->add_option("--y", y)->required();
    acoeff->add_option("--indices", indices, "derivative orders, comma-separated")->required();
    acoeff->callback([&] { run = [&] { return cmd_angles_coeff(cfg, d, y, indices); }; });

    auto* gamma = sub(&app, "gamma", "gamma transform of a Dirac combination of one-units");
    gamma->add_option("--points", points, "weight:unit pairs, comma-separated")->required();
    gamma->add_option("--y", y)->required();
    gamma->callback([&] { run = [&] { return cmd_gamma(cfg, points, y); }; });

    bool selftest_run = false;
    auto* self = sub(&app, "selftest", "run the acceptance criteria");
    self->add_option("--only", only, "criterion ids, comma-separated");
    self->callback([&] { selftest_run = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (selftest_run) {
            std::set<int> ids;
            for (auto v : parse_list(only)) ids.insert(static_cast<int>(v));
            for (int id : ids)
                if (id < 1 || id > kCriterionCount) usage_error("criterion ids are 1.." + std::to_string(kCriterionCount));
            const auto rep = run_selftest(cfg.seed, ids);
            if (cfg.format == "text") std::cout << rep.to_text();
            else std::cout << dump(rep.to_json()) << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (!run) {
            std::cerr << app.help();
            return kExitUsage;
        }
        emit(cfg, run());
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GuardError& e) {
        Output o;
        o.add("error", e.name());
        o.add("message", e.what());
        emit(cfg, o);
        std::cerr << e.what() << "\n";
        return kExitGuard;
    } catch (const Error& e) {
        Output o;
        o.add("error", e.name());
        o.add("message", e.what());
        emit(cfg, o);
        std::cerr << e.what() << "\n";
        return kExitDomain;
    }
}
