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


#include "carlitz/expr.hpp"

#include <cctype>
#include <functional>
#include <memory>
#include <vector>

#include "carlitz/error.hpp"

namespace carlitz {

namespace {

struct Node {
    char op = 0;           // + - * / ^ n (negate), 'i' integer, 'v' name
    std::int64_t value = 0;
    char name = 0;
    std::unique_ptr<Node> a, b;
};

using NodeP = std::unique_ptr<Node>;

[[noreturn]] void fail(const std::string& text, const std::string& why) {
    throw DomainError("cli", "bad-expression", why + " in '" + text + "'");
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodeP parse() {
        NodeP n = sum();
        skip();
        if (i_ != s_.size()) fail(s_, "unexpected '" + std::string(1, s_[i_]) + "'");
        return n;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    static NodeP bin(char op, NodeP a, NodeP b) {
        auto n = std::make_unique<Node>();
        n->op = op;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }
    NodeP sum() {
        NodeP n = product();
        for (;;) {
            if (eat('+')) n = bin('+', std::move(n), product());
            else if (eat('-')) n = bin('-', std::move(n), product());
            else return n;
        }
    }
    bool starts_atom() {
        skip();
        return i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(');
    }
    NodeP product() {
        NodeP n = unary();
        for (;;) {
            if (eat('*')) n = bin('*', std::move(n), unary());
            else if (eat('/')) n = bin('/', std::move(n), unary());
            else if (starts_atom()) n = bin('*', std::move(n), power());  // 2t, t(t+1)
            else return n;
        }
    }
    NodeP unary() {
        if (eat('-')) {
            auto n = std::make_unique<Node>();
            n->op = 'n';
            n->a = unary();
            return n;
        }
        if (eat('+')) return unary();
        return power();
    }
    NodeP power() {
        NodeP base = atom();
        if (eat('^')) {
            skip();
            bool neg = false;
            if (eat('-')) neg = true;
            skip();
            if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail(s_, "exponent must be an integer");
            auto e = std::make_unique<Node>();
            e->op = 'i';
            e->value = integer();
            if (neg) e->value = -e->value;
            return bin('^', std::move(base), std::move(e));
        }
        return base;
    }
    std::int64_t integer() {
        std::int64_t v = 0;
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (i_ - start > 15) fail(s_, "integer too large");
            v = v * 10 + (s_[i_++] - '0');
        }
        return v;
    }
    NodeP atom() {
        skip();
        if (eat('(')) {
            NodeP n = sum();
            if (!eat(')')) fail(s_, "missing ')'");
            return n;
        }
        if (i_ >= s_.size()) fail(s_, "unexpected end");
        auto n = std::make_unique<Node>();
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            n->op = 'i';
            n->value = integer();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++i_;
            if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_])))
                fail(s_, "names are single letters");
            n->op = 'v';
            n->name = c;
            return n;
        }
        fail(s_, "unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

template <class R>
struct Ring {
    std::function<R(std::int64_t)> constant;
    std::function<R(char)> var;  // throws for unknown names
    std::function<R(const R&, const R&)> div;
    std::function<R(const R&, std::int64_t)> pow;
};

template <class R>
R eval(const Node& n, const Ring<R>& r) {
    switch (n.op) {
        case 'i': return r.constant(n.value);
        case 'v': return r.var(n.name);
        case 'n': return r.constant(0) - eval(*n.a, r);
        case '+': return eval(*n.a, r) + eval(*n.b, r);
        case '-': return eval(*n.a, r) - eval(*n.b, r);
        case '*': return eval(*n.a, r) * eval(*n.b, r);
        case '/': return r.div(eval(*n.a, r), eval(*n.b, r));
        case '^': return r.pow(eval(*n.a, r), n.b->value);
        default: throw DomainError("cli", "bad-expression", "internal parse error");
    }
}

template <class R>
R run(const std::string& text, const Ring<R>& r) {
    Parser p(text);
    const NodeP n = p.parse();
    return eval(*n, r);
}

[[noreturn]] void unknown(const std::string& text, char c) { fail(text, "name '" + std::string(1, c) + "' not allowed"); }

FiniteField::Elem elem_of(const FiniteField& f, std::int64_t v) { return f.from_int(v); }

}  // namespace

APoly parse_apoly(const FiniteField& f, const std::string& text) {
    Ring<APoly> r;
    r.constant = [&](std::int64_t v) { return APoly::constant(f, elem_of(f, v)); };
    r.var = [&](char c) {
        if (c == 't') return APoly::theta(f);
        if (c == 'g') return APoly::constant(f, f.generator());
        unknown(text, c);
    };
    r.div = [&](const APoly& a, const APoly& b) {
        if (b.is_zero()) fail(text, "division by zero");
        const auto [qt, rm] = a.divmod(b);
        if (!rm.is_zero()) fail(text, "inexact division in A");
        return qt;
    };
    r.pow = [&](const APoly& a, std::int64_t e) {
        if (e < 0) fail(text, "negative power in A");
        return a.pow(static_cast<std::uint64_t>(e));
    };
    return run(text, r);
}

KFrac parse_kfrac(const FiniteField& f, const std::string& text) {
    Ring<KFrac> r;
    r.constant = [&](std::int64_t v) { return KFrac(APoly::constant(f, elem_of(f, v))); };
    r.var = [&](char c) {
        if (c == 't') return KFrac(APoly::theta(f));
        if (c == 'g') return KFrac(APoly::constant(f, f.generator()));
        unknown(text, c);
    };
    r.div = [&](const KFrac& a, const KFrac& b) {
        if (b.is_zero()) fail(text, "division by zero");
        return a / b;
    };
    r.pow = [&](const KFrac& a, std::int64_t e) {
        if (e >= 0) return a.pow(static_cast<std::uint64_t>(e));
        if (a.is_zero()) fail(text, "division by zero");
        return a.inverse().pow(static_cast<std::uint64_t>(-e));
    };
    return run(text, r);
}

XPolyK parse_xpoly(const FiniteField& f, const std::string& text) {
    const KFrac zero(f);
    Ring<XPolyK> r;
    r.constant = [&](std::int64_t v) { return XPolyK::constant(KFrac(APoly::constant(f, elem_of(f, v)))); };
    r.var = [&](char c) {
        if (c == 'x') return XPolyK::x(zero);
        if (c == 't') return XPolyK::constant(KFrac(APoly::theta(f)));
        if (c == 'g') return XPolyK::constant(KFrac(APoly::constant(f, f.generator())));
        unknown(text, c);
    };
    r.div = [&](const XPolyK& a, const XPolyK& b) {
        if (b.degree() != 0 || b.coeffs()[0].is_zero()) fail(text, "only division by nonzero constants");
        return a.scale(b.coeffs()[0].inverse());
    };
    r.pow = [&](const XPolyK& a, std::int64_t e) {
        if (e < 0) fail(text, "negative power of a polynomial");
        return a.pow(static_cast<std::uint64_t>(e));
    };
    return run(text, r);
}

LaurentSeries parse_laurent(const FiniteField& f, const std::string& text, std::int64_t prec) {
    Ring<LaurentSeries> r;
    r.constant = [&](std::int64_t v) { return LaurentSeries::monomial(f, elem_of(f, v), 0); };
    r.var = [&](char c) {
        if (c == 'p') return LaurentSeries::monomial(f, 1, 1);
        if (c == 't') return LaurentSeries::monomial(f, 1, -1);
        if (c == 'g') return LaurentSeries::monomial(f, f.generator(), 0);
        unknown(text, c);
    };
    r.div = [&](const LaurentSeries& a, const LaurentSeries& b) {
        if (b.is_zero()) fail(text, "division by zero");
        if (b.coeffs().size() == 1) return a * LaurentSeries::monomial(f, f.inv(b.coeffs()[0]), -b.lead());
        return a.div(b, prec);
    };
    r.pow = [&](const LaurentSeries& a, std::int64_t e) {
        if (e >= 0) return a.pow(static_cast<std::uint64_t>(e));
        if (a.is_zero()) fail(text, "division by zero");
        const LaurentSeries inv = a.coeffs().size() == 1 ? LaurentSeries::monomial(f, f.inv(a.coeffs()[0]), -a.lead())
                                                         : a.inverse(prec);
        return inv.pow(static_cast<std::uint64_t>(-e));
    };
    return run(text, r);
}

}  // namespace carlitz
