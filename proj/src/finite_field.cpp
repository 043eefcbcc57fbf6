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

#include "carlitz/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "carlitz/error.hpp"

namespace carlitz {

namespace {

using Elem = FiniteField::Elem;

bool is_prime_number(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Conway polynomials, lowest degree first.
const std::map<std::uint32_t, std::vector<std::uint32_t>>& conway_table() {
    static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {16, {1, 1, 0, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {64, {1, 1, 0, 1, 1, 0, 1}},
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},
        {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {9, {2, 2, 1}},
        {27, {1, 2, 0, 1}},
        {81, {2, 0, 0, 2, 1}},
        {25, {2, 4, 1}},
        {125, {3, 3, 0, 1}},
        {49, {3, 6, 1}},
    };
    return table;
}

// Polynomials over a field as coefficient vectors, lowest degree first.
void trim(std::vector<Elem>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Elem> poly_mod(const FiniteField& f, std::vector<Elem> a, std::span<const Elem> m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const Elem lead_inv = f.inv(m.back());
    while (a.size() > dm) {
        const Elem c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        trim(a);
    }
    return a;
}

struct Registry {
    std::mutex mu;
    std::map<std::tuple<std::uint32_t, const FiniteField*, std::vector<Elem>>, std::unique_ptr<FiniteField>> fields;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, const FiniteField* base, std::vector<Elem> modulus)
    : p_(p), base_(base), modulus_(std::move(modulus)) {
    if (base_ == nullptr) {
        order_ = p_;
        degree_ = 1;
        prime_ = this;
    } else {
        const std::uint32_t r = relative_degree();
        std::uint64_t ord = 1;
        for (std::uint32_t i = 0; i < r; ++i) ord *= base_->order();
        if (ord > kMaxOrder) throw GuardError("field-tower", "field-too-large", "field order exceeds 2^16");
        order_ = static_cast<std::uint32_t>(ord);
        degree_ = base_->degree() * r;
        prime_ = base_->prime_;
        gen_ = r > 1 ? static_cast<Elem>(base_->order()) : base_->generator();
        if (r == 1) {
            gen_ = base_->sub(0, modulus_[0]);
        }
    }
    build_tables();
}

Elem FiniteField::slow_mul(Elem a, Elem b) const {
    if (base_ == nullptr) return static_cast<Elem>((static_cast<std::uint32_t>(a) * b) % p_);
    const auto ca = base_coordinates(a);
    const auto cb = base_coordinates(b);
    std::vector<Elem> prod(ca.size() + cb.size() - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j)
            prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
    }
    auto red = poly_mod(*base_, std::move(prod), modulus_);
    red.resize(relative_degree(), 0);
    return from_base_coordinates(red);
}

void FiniteField::build_tables() {
    neg_.resize(order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
        auto c = prime_coordinates(static_cast<Elem>(a));
        for (auto& x : c) x = (p_ - x) % p_;
        neg_[a] = from_prime_coordinates(c);
    }
    if (p_ != 2 && order_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (std::uint32_t a = 0; a < order_; ++a) {
            const auto ca = prime_coordinates(static_cast<Elem>(a));
            for (std::uint32_t b = 0; b < order_; ++b) {
                auto cb = prime_coordinates(static_cast<Elem>(b));
                for (std::size_t i = 0; i < cb.size(); ++i) cb[i] = (cb[i] + ca[i]) % p_;
                add_table_[static_cast<std::size_t>(a) * order_ + b] = from_prime_coordinates(cb);
            }
        }
    }
    if (order_ == 2) {
        exp_ = {1};
        log_ = {0, 0};
        primitive_ = 1;
        return;
    }
    const std::uint32_t n = order_ - 1;
    const auto factors = prime_factors(n);
    auto slow_pow = [this](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    auto is_primitive = [&](Elem g) {
        if (g == 0) return false;
        if (slow_pow(g, n) != 1) return false;
        for (auto r : factors)
            if (slow_pow(g, n / r) == 1) return false;
        return true;
    };
    Elem g = 0;
    if (is_primitive(gen_)) {
        g = gen_;
    } else {
        for (std::uint32_t c = 2; c < order_; ++c) {
            if (is_primitive(static_cast<Elem>(c))) {
                g = static_cast<Elem>(c);
                break;
            }
        }
    }
    if (g == 0) throw DomainError("field-tower", "not-a-field", "no primitive element found; modulus is reducible");
    primitive_ = g;
    exp_.resize(n);
    log_.assign(order_, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        exp_[k] = x;
        log_[x] = k;
        x = slow_mul(x, g);
    }
    if (x != 1) throw DomainError("field-tower", "not-a-field", "multiplicative group is not cyclic");
}

bool FiniteField::contains(const FiniteField& sub) const noexcept {
    for (const FiniteField* f = this; f != nullptr; f = f->base_)
        if (f == &sub) return true;
    return false;
}

Elem FiniteField::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return static_cast<Elem>(a ^ b);
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
    std::uint32_t out = 0, mult = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        out += ((x % p_ + y % p_) % p_) * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(out);
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw DomainError("field-tower", "division-by-zero", "inverse of zero in " + name());
    if (order_ == 2) return 1;
    const std::uint32_t n = order_ - 1;
    return exp_[(n - log_[a]) % n];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (order_ == 2) return 1;
    const std::uint64_t n = order_ - 1;
    return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % n)) % n)];
}

Elem FiniteField::from_int(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::vector<std::uint32_t> FiniteField::prime_coordinates(Elem a) const {
    std::vector<std::uint32_t> c(degree_);
    std::uint32_t x = a;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

Elem FiniteField::from_prime_coordinates(std::span<const std::uint32_t> c) const {
    std::uint32_t out = 0, mult = 1;
    for (std::size_t i = 0; i < c.size() && i < degree_; ++i) {
        out += (c[i] % p_) * mult;
        mult *= p_;
    }
    return static_cast<Elem>(out);
}

std::vector<Elem> FiniteField::base_coordinates(Elem a) const {
    if (base_ == nullptr) return {a};
    const std::uint32_t b = base_->order();
    std::vector<Elem> c(relative_degree());
    std::uint32_t x = a;
    for (auto& ci : c) {
        ci = static_cast<Elem>(x % b);
        x /= b;
    }
    return c;
}

Elem FiniteField::from_base_coordinates(std::span<const Elem> c) const {
    if (base_ == nullptr) return c.empty() ? 0 : c[0];
    const std::uint32_t b = base_->order();
    std::uint32_t out = 0, mult = 1;
    for (std::size_t i = 0; i < c.size() && i < relative_degree(); ++i) {
        out += c[i] * mult;
        mult *= b;
    }
    return static_cast<Elem>(out);
}

std::string FiniteField::to_string(Elem a) const {
    if (base_ == nullptr) return std::to_string(a);
    const auto c = base_coordinates(a);
    const std::string var = base_->is_prime_field() ? "g" : "w";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!first) os << "+";
        first = false;
        const std::string coef = base_->to_string(c[k]);
        const bool composite = coef.find('+') != std::string::npos;
        if (k == 0) {
            os << (composite ? "(" + coef + ")" : coef);
            continue;
        }
        if (c[k] != 1) os << (composite ? "(" + coef + ")" : coef) << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return first ? "0" : os.str();
}

std::string FiniteField::name() const {
    std::string n = "F_" + std::to_string(order_);
    if (base_ != nullptr && !base_->is_prime_field()) n += "/" + base_->name();
    return n;
}

const FiniteField& FiniteField::prime(std::uint32_t p) {
    if (!is_prime_number(p) || p >= kMaxOrder)
        throw DomainError("field-tower", "bad-characteristic", std::to_string(p) + " is not a supported prime");
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    auto key = std::make_tuple(p, static_cast<const FiniteField*>(nullptr), std::vector<Elem>{});
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return *it->second;
    auto f = std::unique_ptr<FiniteField>(new FiniteField(p, nullptr, {}));
    auto& ref = *f;
    reg.fields.emplace(std::move(key), std::move(f));
    return ref;
}

bool FiniteField::is_irreducible(const FiniteField& base, std::span<const Elem> poly) {
    std::vector<Elem> f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    const std::uint32_t b = base.order();
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= b;
        std::vector<Elem> cand(d + 1, 0);
        cand[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t x = idx;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<Elem>(x % b);
                x /= b;
            }
            if (poly_mod(base, f, cand).empty()) return false;
        }
    }
    return true;
}

const FiniteField& FiniteField::extension(const FiniteField& base, std::vector<Elem> modulus) {
    trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1)
        throw DomainError("field-tower", "bad-modulus", "modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= base.order()) throw DomainError("field-tower", "bad-modulus", "coefficient outside base field");
    if (!is_irreducible(base, modulus))
        throw DomainError("field-tower", "reducible-modulus", "modulus is reducible over " + base.name());
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.fields.find(std::make_tuple(base.characteristic(), &base, modulus));
        if (it != reg.fields.end()) return *it->second;
    }
    // Table construction happens outside the lock; a racing duplicate is discarded.
    auto f = std::unique_ptr<FiniteField>(new FiniteField(base.characteristic(), &base, modulus));
    std::lock_guard lock(reg.mu);
    auto [it, inserted] = reg.fields.emplace(std::make_tuple(base.characteristic(), &base, std::move(modulus)), std::move(f));
    return *it->second;
}

const FiniteField& FiniteField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    const FiniteField& fp = prime(p);
    std::vector<Elem> m;
    m.reserve(modulus.size());
    for (auto c : modulus) m.push_back(static_cast<Elem>(c % p));
    trim(m);
    if (m.size() == 2 && m[1] == 1 && m[0] == 0) return fp;
    return extension(fp, std::move(m));
}

const FiniteField& FiniteField::extension(const FiniteField& base, std::uint32_t m) {
    if (m == 0) throw DomainError("field-tower", "bad-degree", "extension degree must be positive");
    if (m == 1) return base;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= base.order();
    if (count > kMaxOrder) throw GuardError("field-tower", "field-too-large", "extension order exceeds 2^16");
    std::vector<Elem> cand(m + 1, 0);
    cand[m] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t x = idx;
        for (std::uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<Elem>(x % base.order());
            x /= base.order();
        }
        if (cand[0] != 0 && is_irreducible(base, cand)) return extension(base, cand);
    }
    throw DomainError("field-tower", "bad-modulus", "no irreducible polynomial found");
}

const FiniteField& FiniteField::of_order(std::uint32_t q) {
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) throw DomainError("field-tower", "bad-order", "q must be a prime power >= 2");
    std::uint32_t m = 0;
    std::uint32_t x = q;
    while (x % p == 0) {
        x /= p;
        ++m;
    }
    if (x != 1) throw DomainError("field-tower", "bad-order", std::to_string(q) + " is not a prime power");
    if (q > 256) throw GuardError("field-tower", "field-too-large", "base field order must be <= 256");
    if (m == 1) return prime(p);
    const auto& table = conway_table();
    if (auto it = table.find(q); it != table.end()) return with_modulus(p, it->second);
    const FiniteField& fp = prime(p);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    std::vector<Elem> cand(m + 1, 0);
    cand[m] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t y = idx;
        for (std::uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<Elem>(y % p);
            y /= p;
        }
        if (cand[0] == 0 || !is_irreducible(fp, cand)) continue;
        const FiniteField& f = extension(fp, cand);
        if (f.primitive_element() == f.generator()) return f;
    }
    throw DomainError("field-tower", "bad-modulus", "no primitive modulus found");
}

}  // namespace carlitz
