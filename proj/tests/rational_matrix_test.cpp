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

#include <gtest/gtest.h>

#include <random>

#include "positroid/error.hpp"
#include "positroid/rational_matrix.hpp"

namespace positroid {
namespace {

// Plain Gaussian elimination over the rationals.
int naive_rank(RationalMatrix a) {
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c) / a.at(r, c);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

Rational naive_det(const RationalMatrix& a) {
  const int n = a.rows();
  if (n == 0) return 1;
  Rational total = 0;
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j) == 0) continue;
    std::vector<int> keep;
    for (int c = 0; c < n; ++c)
      if (c != j) keep.push_back(c + 1);
    RationalMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int c = 0; c < n - 1; ++c) minor.at(i - 1, c) = a.at(i, keep[c] - 1);
    Rational term = a.at(0, j) * naive_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

TEST(RationalMatrix, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(rational_to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(rational_to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(RationalMatrix, Basics) {
  auto a = RationalMatrix::from_ints({{0, 3, 1, 2, 4, 0}, {0, 0, 0, 1, 2, 1}});
  EXPECT_EQ(a.rows(), 2);
  EXPECT_EQ(a.cols(), 6);
  EXPECT_EQ(rank(a), 2);
  EXPECT_EQ(determinant(a.select_columns({2, 4})), Rational(3));
  EXPECT_EQ(determinant(a.select_columns({1, 2})), Rational(0));
  EXPECT_EQ(determinant(RationalMatrix(0, 0)), Rational(1));
}

TEST(RationalMatrix, BareissMatchesNaive) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3), num(-9, 9), den(1, 5), dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    int r = dim(rng), c = dim(rng);
    RationalMatrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        // sparse-ish so that rank drops happen
        a.at(i, j) = (small(rng) == 0) ? Rational(num(rng), den(rng)) : Rational(0);
        if (trial % 3 == 0) a.at(i, j) = small(rng);
      }
    ASSERT_EQ(rank(a), naive_rank(a));
    if (r == c) ASSERT_EQ(determinant(a), naive_det(a));
    IntMatrix m(r, std::vector<BigInt>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m[i][j] = small(rng);
    RationalMatrix q(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) q.at(i, j) = Rational(m[i][j]);
    ASSERT_EQ(bareiss_rank(m), naive_rank(q));
    if (r == c) ASSERT_EQ(Rational(bareiss_determinant(m)), naive_det(q));
  }
}

}  // namespace
}  // namespace positroid
