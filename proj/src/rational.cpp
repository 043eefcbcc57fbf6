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


#include "carlitz/rational.hpp"

#include "carlitz/error.hpp"

namespace carlitz {

KFrac::KFrac(APoly num, APoly den) {
    if (den.is_zero()) throw DomainError("field-tower", "division-by-zero", "zero denominator");
    if (num.is_zero()) {
        num_ = std::move(num);
        den_ = den.one_like();
        return;
    }
    const APoly g = gcd(num, den);
    num_ = num.exact_div(g);
    den_ = den.exact_div(g);
    const auto lead_inv = den_.field().inv(den_.leading());
    num_ = num_.scale(lead_inv);
    den_ = den_.scale(lead_inv);
}

KFrac KFrac::operator+(const KFrac& o) const {
    if (den_ == o.den_) return KFrac(num_ + o.num_, den_);
    return KFrac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

KFrac KFrac::operator-(const KFrac& o) const {
    if (den_ == o.den_) return KFrac(num_ - o.num_, den_);
    return KFrac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

KFrac KFrac::operator*(const KFrac& o) const {
    if (is_zero() || o.is_zero()) return zero_like();
    if (den_.is_one() && o.den_.is_one()) return KFrac(num_ * o.num_, den_, true);
    // Cross-cancel first to keep intermediate degrees down.
    const APoly g1 = gcd(num_, o.den_);
    const APoly g2 = gcd(o.num_, den_);
    APoly n = num_.exact_div(g1) * o.num_.exact_div(g2);
    APoly d = den_.exact_div(g2) * o.den_.exact_div(g1);
    return KFrac(std::move(n), std::move(d), true);
}

KFrac KFrac::inverse() const {
    if (is_zero()) throw DomainError("field-tower", "division-by-zero", "inverse of zero in k");
    return KFrac(den_, num_);
}

KFrac KFrac::operator/(const KFrac& o) const { return *this * o.inverse(); }

std::string KFrac::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace carlitz
