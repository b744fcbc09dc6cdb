// Copyright 2026 The permlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERMLAB_INT_MATRIX_HPP
#define PERMLAB_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// p / q in lowest terms. Throws InvalidInput if q == 0. (Boost's two-argument
/// cpp_rational constructor rejects negative denominators.)
Rational make_rational(const BigInt& p, const BigInt& q);

/// Square matrix of exact integers, stored row-major. Indices are 0-based.
/// The 0x0 matrix is a valid value (its permanent is 1).
class IntMatrix {
   public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    /// Throws InvalidInput unless `rows` is square.
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

    std::size_t dim() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

    /// Bounds-checked access; throws IndexOutOfRange.
    const BigInt& at(std::size_t r, std::size_t c) const;

    /// True if every entry lies in {-1, 0, 1}.
    bool is_sign_matrix() const;

    /// Largest |entry|; 0 for the empty matrix.
    BigInt max_abs() const;

    /// Entries in row-major order.
    const std::vector<BigInt>& entries() const noexcept { return data_; }

    /// Multi-line text form: `n` followed by n rows of space separated integers.
    std::string str() const;

    bool operator==(const IntMatrix& other) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& out, const IntMatrix& m);

/// M with row `i` and column `j` deleted (0-based).
IntMatrix minor(const IntMatrix& m, std::size_t i, std::size_t j);

/// Cyclically moves column `j` to position 0; columns 0..j-1 shift right by one.
/// Deleting row 0 and column 0 of the result gives minor(m, 0, j).
IntMatrix rotate_column_to_front(const IntMatrix& m, std::size_t j);

/// Reads the shared matrix format. Accepts either the text form (`n` then n
/// rows) or a JSON object `{"entries": [[...], ...]}`. Integers in JSON may be
/// numbers or decimal strings. Throws InvalidInput on malformed data.
IntMatrix parse_matrix(const std::string& text);
IntMatrix read_matrix_file(const std::string& path);

}  // namespace permlab

#endif  // PERMLAB_INT_MATRIX_HPP
