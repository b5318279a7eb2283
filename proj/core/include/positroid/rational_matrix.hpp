// Copyright 2023 The Authors.
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

#ifndef POSITROID_RATIONAL_MATRIX_HPP_
#define POSITROID_RATIONAL_MATRIX_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace positroid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", "-3" or "0". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_ints(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  // Columns listed 1-based, in the given order.
  RationalMatrix select_columns(const std::vector<int>& cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

using IntMatrix = std::vector<std::vector<BigInt>>;

// Fraction-free Gaussian elimination.
BigInt bareiss_determinant(IntMatrix m);
int bareiss_rank(IntMatrix m);

// Rows are cleared of denominators and handed to the integer routines.
Rational determinant(const RationalMatrix& a);
int rank(const RationalMatrix& a);

}  // namespace positroid

#endif  // POSITROID_RATIONAL_MATRIX_HPP_
