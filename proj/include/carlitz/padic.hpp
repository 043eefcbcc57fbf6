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
#include <optional>
#include <string>
#include <vector>

namespace carlitz {

// Eventually constant base-q digit stream c_0 c_1 ... in Z_p: a finite head
// followed by one digit repeated forever. Tail 0 is a nonnegative integer and
// tail q-1 a negative one; other tails are the non-integral rationals
// (c / (1 - q)) + head.
class PadicInteger {
public:
    PadicInteger() = default;
    PadicInteger(std::uint32_t q, std::vector<std::uint32_t> head, std::uint32_t tail);
    static PadicInteger from_int(std::uint32_t q, std::int64_t n);

    std::uint32_t base() const noexcept { return q_; }
    const std::vector<std::uint32_t>& head() const noexcept { return head_; }
    std::uint32_t tail() const noexcept { return tail_; }
    std::uint32_t digit(std::size_t j) const noexcept { return j < head_.size() ? head_[j] : tail_; }

    bool is_integer() const noexcept { return tail_ == 0 || tail_ == q_ - 1; }
    bool is_nonnegative_integer() const noexcept { return tail_ == 0; }
    bool is_zero() const noexcept { return tail_ == 0 && head_.empty(); }
    // Value when it is an integer fitting in int64.
    std::optional<std::int64_t> to_int() const;

    PadicInteger operator+(const PadicInteger& o) const;
    PadicInteger operator-() const;
    PadicInteger operator-(const PadicInteger& o) const { return *this + (-o); }
    // Drop all digits at positions >= J, yielding a nonnegative integer.
    PadicInteger truncate(std::size_t J) const;

    friend bool operator==(const PadicInteger& a, const PadicInteger& b) noexcept {
        return a.q_ == b.q_ && a.head_ == b.head_ && a.tail_ == b.tail_;
    }

    std::string to_string() const;

private:
    void normalize();

    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> head_;
    std::uint32_t tail_ = 0;
};

}  // namespace carlitz
