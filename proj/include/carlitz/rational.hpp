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

#include "carlitz/apoly.hpp"

namespace carlitz {

// Element of k = F(t): reduced num/den with den monic.
class KFrac {
public:
    KFrac() = default;
    explicit KFrac(const FiniteField& f) : num_(f), den_(APoly::constant(f, 1)) {}
    KFrac(APoly num) : num_(std::move(num)), den_(num_.one_like()) {}  // NOLINT: implicit from A
    KFrac(APoly num, APoly den);

    const APoly& num() const noexcept { return num_; }
    const APoly& den() const noexcept { return den_; }
    const FiniteField& field() const noexcept { return num_.field(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_integral() const noexcept { return den_.is_one(); }

    KFrac operator+(const KFrac& o) const;
    KFrac operator-(const KFrac& o) const;
    KFrac operator-() const { return KFrac(-num_, den_, true); }
    KFrac operator*(const KFrac& o) const;
    KFrac operator/(const KFrac& o) const;
    KFrac& operator+=(const KFrac& o) { return *this = *this + o; }
    KFrac& operator-=(const KFrac& o) { return *this = *this - o; }
    KFrac& operator*=(const KFrac& o) { return *this = *this * o; }
    KFrac inverse() const;
    KFrac scale(FiniteField::Elem c) const { return KFrac(num_.scale(c), den_, true); }
    KFrac pow(std::uint64_t e) const { return KFrac(num_.pow(e), den_.pow(e), true); }

    KFrac zero_like() const { return KFrac(num_.zero_like()); }
    KFrac one_like() const { return KFrac(num_.one_like()); }

    friend bool operator==(const KFrac& a, const KFrac& b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string(const std::string& var = "t") const;

private:
    // Already reduced, den monic.
    KFrac(APoly num, APoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}

    APoly num_;
    APoly den_;
};

}  // namespace carlitz
