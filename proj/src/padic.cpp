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


#include "carlitz/padic.hpp"

#include <sstream>

#include "carlitz/error.hpp"

namespace carlitz {

PadicInteger::PadicInteger(std::uint32_t q, std::vector<std::uint32_t> head, std::uint32_t tail)
    : q_(q), head_(std::move(head)), tail_(tail) {
    if (q < 2) throw DomainError("field-tower", "bad-base", "digit base must be >= 2");
    if (tail >= q) throw DomainError("field-tower", "bad-digit", "tail digit out of range");
    for (auto d : head_)
        if (d >= q) throw DomainError("field-tower", "bad-digit", "head digit out of range");
    normalize();
}

void PadicInteger::normalize() {
    while (!head_.empty() && head_.back() == tail_) head_.pop_back();
}

PadicInteger PadicInteger::from_int(std::uint32_t q, std::int64_t n) {
    PadicInteger r;
    r.q_ = q;
    if (n >= 0) {
        for (auto x = static_cast<std::uint64_t>(n); x > 0; x /= q) r.head_.push_back(static_cast<std::uint32_t>(x % q));
        r.tail_ = 0;
    } else {
        // -n - 1 >= 0 has complementary digits.
        for (auto x = static_cast<std::uint64_t>(-(n + 1)); x > 0; x /= q)
            r.head_.push_back(q - 1 - static_cast<std::uint32_t>(x % q));
        r.tail_ = q - 1;
    }
    r.normalize();
    return r;
}

std::optional<std::int64_t> PadicInteger::to_int() const {
    if (!is_integer()) return std::nullopt;
    if (head_.size() > 62) return std::nullopt;
    if (tail_ == 0) {
        std::int64_t v = 0;
        for (std::size_t j = head_.size(); j-- > 0;) {
            if (v > (INT64_MAX - head_[j]) / q_) return std::nullopt;
            v = v * q_ + head_[j];
        }
        return v;
    }
    // y = -1 - (complement)
    std::int64_t v = 0;
    for (std::size_t j = head_.size(); j-- > 0;) {
        const std::int64_t d = q_ - 1 - head_[j];
        if (v > (INT64_MAX - d) / q_) return std::nullopt;
        v = v * q_ + d;
    }
    return -1 - v;
}

PadicInteger PadicInteger::operator+(const PadicInteger& o) const {
    if (q_ != o.q_) throw DomainError("field-tower", "base-mismatch", "adding digit streams of different bases");
    const std::size_t n = std::max(head_.size(), o.head_.size());
    std::vector<std::uint32_t> out;
    std::uint32_t carry = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t s = digit(j) + o.digit(j) + carry;
        out.push_back(s % q_);
        carry = s / q_;
    }
    // Past the heads both streams are constant; the carry settles after at
    // most one more position.
    const std::uint32_t s1 = tail_ + o.tail_ + carry;
    const std::uint32_t c1 = s1 / q_;
    const std::uint32_t s2 = tail_ + o.tail_ + c1;
    out.push_back(s1 % q_);
    return PadicInteger(q_, std::move(out), s2 % q_);
}

PadicInteger PadicInteger::operator-() const {
    // -y = complement(y) + 1
    std::vector<std::uint32_t> comp;
    for (auto d : head_) comp.push_back(q_ - 1 - d);
    PadicInteger c(q_, std::move(comp), q_ - 1 - tail_);
    return c + from_int(q_, 1);
}

PadicInteger PadicInteger::truncate(std::size_t J) const {
    std::vector<std::uint32_t> h;
    for (std::size_t j = 0; j < J; ++j) h.push_back(digit(j));
    return PadicInteger(q_, std::move(h), 0);
}

std::string PadicInteger::to_string() const {
    if (auto v = to_int()) return std::to_string(*v);
    std::ostringstream os;
    os << "[";
    for (std::size_t j = 0; j < head_.size(); ++j) os << (j ? "," : "") << head_[j];
    os << "](" << tail_ << ")*";
    return os.str();
}

}  // namespace carlitz
