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

#ifndef POSITROID_ENUMERATION_HPP_
#define POSITROID_ENUMERATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "positroid/rational_matrix.hpp"

namespace positroid {

// Coefficients lowest degree first, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  BigInt coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt at_one() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  // Product with every term above max_degree dropped.
  IntPolynomial mul_truncated(const IntPolynomial& o, int max_degree) const;
  IntPolynomial pow_truncated(unsigned e, int max_degree) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// s_c(n): 2 for n = 1, n - 1 otherwise.
BigInt spirograph_count(int n);

// s(n) = [x^n] (1 + 2x + sum_{i=2}^n (i-1) x^i)^{n+1} / (n+1).
BigInt smooth_count_coeff(int n);

// b_{n,k} = B_{n,k}(2*1!, 1*2!, 2*3!, ...), built by the recurrence
// b_{n,k} = sum_i C(n-1, i-1) s_c(i) i! b_{n-i,k-1}.
class BellTriangle {
 public:
  explicit BellTriangle(int max_n);
  int max_n() const { return max_n_; }
  const BigInt& b(int n, int k) const;
  // sum_k b_{n,k} / (n-k+1)!, each term checked to be integral.
  BigInt smooth_count(int n) const;
  // b_{n,k} / (n-k+1)!
  BigInt s3(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> b_;
  std::vector<BigInt> fact_;
};

BigInt bell_b(int n, int k);
BigInt smooth_count_bell(int n);

struct CensusRow {
  int n = 0;
  std::vector<BigInt> by_k;  // index k = 0..n
  BigInt total() const;
};

struct Census {
  int n = 0;
  CensusRow s1;  // smooth positroids of rank k
  CensusRow s2;  // smooth positroids with k SIF components
  CensusRow s3;  // b_{n,k} / (n-k+1)!
  BigInt total;
  IntPolynomial q1() const { return IntPolynomial(s1.by_k); }
  IntPolynomial q2() const { return IntPolynomial(s2.by_k); }
  IntPolynomial q3() const { return IntPolynomial(s3.by_k); }
};

// Rows for n = 1..max_n from the noncrossing-partition recursion.
// Throws InvariantViolation if s2 != s3 or the row sums differ.
std::vector<Census> census_through(int max_n);
Census census(int n);

// s(n+1)/s(n) rounded half up to `digits` significant digits.
std::string growth_ratio(int n, int digits);
// Same for an arbitrary positive quotient.
std::string round_quotient(const BigInt& num, const BigInt& den, int digits);

struct BruteForceCensus {
  int n = 0;
  std::vector<std::uint64_t> s1;  // index k = 0..n
  std::vector<std::uint64_t> s2;
  std::uint64_t iterated = 0;
};

inline constexpr int kMaxBruteForceN = 9;

// Classifies every decorated permutation of [n] (n <= 9) by C6.
BruteForceCensus brute_force_census(int n, int threads = 0);

}  // namespace positroid

#endif  // POSITROID_ENUMERATION_HPP_
