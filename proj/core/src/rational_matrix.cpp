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

#include "positroid/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

#include <boost/integer/common_factor_rt.hpp>

namespace positroid {
namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad number: " + s);
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad number: " + s);
  }
  BigInt v(s.substr(start));
  return s[0] == '-' ? BigInt(-v) : v;
}

IntMatrix clear_denominators(const RationalMatrix& a, BigInt* scale) {
  IntMatrix m(a.rows(), std::vector<BigInt>(a.cols()));
  BigInt total = 1;
  for (int i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (int j = 0; j < a.cols(); ++j) {
      BigInt d = boost::multiprecision::denominator(a.at(i, j));
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& q = a.at(i, j);
      m[i][j] = boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q));
    }
    total *= l;
  }
  if (scale) *scale = total;
  return m;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
  BigInt den = boost::multiprecision::denominator(q);
  std::string s = boost::multiprecision::numerator(q).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::from_ints(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long long x : r) row.emplace_back(x);
    q.push_back(std::move(row));
  }
  return RationalMatrix(q);
}

RationalMatrix RationalMatrix::select_columns(const std::vector<int>& cols) const {
  RationalMatrix out(rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 1 || cols[j] > cols_) throw std::invalid_argument("column out of range");
      out.at(i, static_cast<int>(j)) = at(i, cols[j] - 1);
    }
  }
  return out;
}

BigInt bareiss_determinant(IntMatrix m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  BigInt prev = 1;
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (size_t i = c + 1; i < n; ++i) {
      for (size_t j = c + 1; j < n; ++j) {
        m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

int bareiss_rank(IntMatrix m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  BigInt prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  BigInt scale;
  IntMatrix m = clear_denominators(a, &scale);
  return Rational(bareiss_determinant(std::move(m)), scale);
}

int rank(const RationalMatrix& a) { return bareiss_rank(clear_denominators(a, nullptr)); }

}  // namespace positroid
