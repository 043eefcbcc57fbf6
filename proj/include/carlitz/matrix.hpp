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

#include <cstddef>
#include <vector>

#include "carlitz/error.hpp"

namespace carlitz {

// Dense row-major matrix over a ring with a prototype zero.
template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& zero) : rows_(rows), cols_(cols), a_(rows * cols, zero) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DomainError("carlitz-basis", "shape-mismatch", "matrix shapes do not chain");
        Matrix r(rows_, o.cols_, a_.front().zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const R& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + x * o(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

// Fraction-free Gaussian elimination. R must provide exact_div.
template <class R>
R bareiss_det(Matrix<R> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DomainError("carlitz-basis", "shape-mismatch", "determinant of a non-square matrix");
    if (n == 0) throw DomainError("carlitz-basis", "shape-mismatch", "determinant of an empty matrix");
    R prev = m(0, 0).one_like();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k).is_zero()) ++piv;
            if (piv == n) return m(0, 0).zero_like();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)).exact_div(prev);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? -d : d;
}

}  // namespace carlitz
