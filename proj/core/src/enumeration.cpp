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

#include "positroid/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "positroid/chord_diagram.hpp"
#include "positroid/decorated.hpp"
#include "positroid/error.hpp"
#include "positroid/parallel.hpp"
#include "positroid/smoothness.hpp"

namespace positroid {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[d];
}

BigInt IntPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return IntPolynomial();
  return mul_truncated(o, degree() + o.degree());
}

IntPolynomial IntPolynomial::mul_truncated(const IntPolynomial& o, int max_degree) const {
  if (c_.empty() || o.c_.empty() || max_degree < 0) return IntPolynomial();
  const int top = std::min(max_degree, degree() + o.degree());
  std::vector<BigInt> r(top + 1);
  for (int i = 0; i <= std::min(top, degree()); ++i) {
    if (c_[i] == 0) continue;
    const int jmax = std::min(top - i, o.degree());
    for (int j = 0; j <= jmax; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::pow_truncated(unsigned e, int max_degree) const {
  IntPolynomial result(std::vector<BigInt>{1});
  IntPolynomial base = *this;
  while (e) {
    if (e & 1) result = result.mul_truncated(base, max_degree);
    e >>= 1;
    if (e) base = base.mul_truncated(base, max_degree);
  }
  return result;
}

BigInt spirograph_count(int n) {
  if (n < 1) throw std::invalid_argument("spirograph count needs n >= 1");
  return n == 1 ? 2 : n - 1;
}

BigInt smooth_count_coeff(int n) {
  if (n < 1) throw std::invalid_argument("smooth count needs n >= 1");
  std::vector<BigInt> g(n + 1);
  g[0] = 1;
  for (int i = 1; i <= n; ++i) g[i] = spirograph_count(i);
  BigInt c = IntPolynomial(std::move(g)).pow_truncated(n + 1, n).coeff(n);
  if (c % (n + 1) != 0) throw InvariantViolation("coefficient not divisible by n+1");
  return c / (n + 1);
}

BellTriangle::BellTriangle(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("negative size");
  b_.assign(max_n + 1, std::vector<BigInt>(max_n + 1));
  fact_.assign(max_n + 2, 1);
  for (int i = 1; i <= max_n + 1; ++i) fact_[i] = fact_[i - 1] * i;
  // binom[n-1][i-1] row by row
  std::vector<std::vector<BigInt>> binom(max_n + 1);
  for (int r = 0; r <= max_n; ++r) {
    binom[r].assign(r + 1, 1);
    for (int c = 1; c < r; ++c) binom[r][c] = binom[r - 1][c - 1] + binom[r - 1][c];
  }
  std::vector<BigInt> weight(max_n + 1);
  for (int i = 1; i <= max_n; ++i) weight[i] = spirograph_count(i) * fact_[i];
  b_[0][0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigInt sum = 0;
      for (int i = 1; i <= n - k + 1; ++i) {
        const BigInt& prev = b_[n - i][k - 1];
        if (prev != 0) sum += binom[n - 1][i - 1] * weight[i] * prev;
      }
      b_[n][k] = sum;
    }
  }
}

const BigInt& BellTriangle::b(int n, int k) const {
  if (n < 0 || n > max_n_ || k < 0 || k > n) throw std::invalid_argument("b(n,k) index out of range");
  return b_[n][k];
}

BigInt BellTriangle::s3(int n, int k) const {
  const BigInt& x = b(n, k);
  if (x % fact_[n - k + 1] != 0) throw InvariantViolation("b(n,k)/(n-k+1)! is not an integer");
  return x / fact_[n - k + 1];
}

BigInt BellTriangle::smooth_count(int n) const {
  if (n < 1) throw std::invalid_argument("smooth count needs n >= 1");
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += s3(n, k);
  return s;
}

BigInt bell_b(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("b(n,k) index out of range");
  return BellTriangle(n).b(n, k);
}

BigInt smooth_count_bell(int n) { return BellTriangle(n).smooth_count(n); }

BigInt CensusRow::total() const {
  BigInt s = 0;
  for (const auto& x : by_k) s += x;
  return s;
}

namespace {

using Poly = std::vector<BigInt>;  // coefficients in q

void add_product(Poly& acc, const Poly& a, const Poly& b) {
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
  }
}

// F = 1 + sum_m w_m x^m F^m: the block holding 1 has m elements and
// each of the m gaps after them holds an independent structure.
std::vector<Poly> noncrossing_series(int max_n, const std::vector<Poly>& weight) {
  std::vector<Poly> f(max_n + 1);
  f[0] = {1};
  // power[m][j] = [x^j] F^m, needed only for m + j <= max_n
  std::vector<std::vector<Poly>> power(max_n + 1, std::vector<Poly>(max_n + 1));
  power[0][0] = {1};
  for (int m = 1; m <= max_n; ++m) power[m][0] = {1};
  for (int n = 1; n <= max_n; ++n) {
    Poly fn{0};
    for (int m = 1; m <= n; ++m) add_product(fn, weight[m], power[m][n - m]);
    f[n] = fn;
    for (int m = 1; m + n <= max_n; ++m) {
      Poly acc{0};
      for (int i = 0; i <= n; ++i) {
        if (!power[m - 1][n - i].empty()) add_product(acc, f[i], power[m - 1][n - i]);
      }
      power[m][n] = acc;
    }
  }
  return f;
}

}  // namespace

std::vector<Census> census_through(int max_n) {
  if (max_n < 1) throw std::invalid_argument("census needs n >= 1");
  std::vector<Poly> w1(max_n + 1), w2(max_n + 1);
  for (int m = 1; m <= max_n; ++m) {
    if (m == 1) {
      w1[m] = {1, 1};
    } else {
      w1[m].assign(m, 1);
      w1[m][0] = 0;
    }
    w2[m] = {0, spirograph_count(m)};
  }
  const auto f1 = noncrossing_series(max_n, w1);
  const auto f2 = noncrossing_series(max_n, w2);
  const BellTriangle bell(max_n);

  std::vector<Census> out;
  for (int n = 1; n <= max_n; ++n) {
    Census c;
    c.n = n;
    c.s1 = {n, std::vector<BigInt>(n + 1)};
    c.s2 = {n, std::vector<BigInt>(n + 1)};
    c.s3 = {n, std::vector<BigInt>(n + 1)};
    for (size_t k = 0; k < f1[n].size() && k <= static_cast<size_t>(n); ++k) c.s1.by_k[k] = f1[n][k];
    for (size_t k = 0; k < f2[n].size() && k <= static_cast<size_t>(n); ++k) c.s2.by_k[k] = f2[n][k];
    for (int k = 1; k <= n; ++k) c.s3.by_k[k] = bell.s3(n, k);
    if (c.s2.by_k != c.s3.by_k) throw InvariantViolation("s2 and s3 rows differ at n=" + std::to_string(n));
    c.total = c.s1.total();
    if (c.s2.total() != c.total || bell.smooth_count(n) != c.total) {
      throw InvariantViolation("census row sums differ at n=" + std::to_string(n));
    }
    out.push_back(std::move(c));
  }
  return out;
}

Census census(int n) { return census_through(n).back(); }

std::string round_quotient(const BigInt& num, const BigInt& den, int digits) {
  if (num <= 0 || den <= 0) throw std::invalid_argument("ratio needs positive operands");
  if (digits < 1) throw std::invalid_argument("need at least one significant digit");
  // e with 10^(e-1) <= num/den < 10^e
  int e = 1;
  BigInt ten_pow = 1;  // 10^|e-1|
  if (num >= den) {
    while (num >= den * ten_pow * 10) {
      ten_pow *= 10;
      ++e;
    }
  } else {
    e = 0;
    ten_pow = 10;
    while (num * ten_pow < den) {
      ten_pow *= 10;
      --e;
    }
  }
  // r = round(num/den * 10^(digits - e))
  const int shift = digits - e;
  BigInt scaled_num = num, scaled_den = den;
  BigInt p = 1;
  for (int i = 0; i < std::abs(shift); ++i) p *= 10;
  if (shift >= 0) scaled_num *= p;
  else scaled_den *= p;
  BigInt r = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  std::string s = r.str();
  int point = e;
  if (static_cast<int>(s.size()) > digits) {
    // rounding carried into a new leading digit
    s.pop_back();
    ++point;
  }
  if (point <= 0) return "0." + std::string(-point, '0') + s;
  if (point >= static_cast<int>(s.size())) return s + std::string(point - s.size(), '0');
  return s.substr(0, point) + "." + s.substr(point);
}

std::string growth_ratio(int n, int digits) {
  if (n < 1) throw std::invalid_argument("growth ratio needs n >= 1");
  return round_quotient(smooth_count_coeff(n + 1), smooth_count_coeff(n), digits);
}

BruteForceCensus brute_force_census(int n, int threads) {
  if (n < 1 || n > kMaxBruteForceN) throw DomainError("brute-force census is limited to 1 <= n <= 9");
  std::vector<BruteForceCensus> parts(n);
  parallel_for(
      n,
      [&](int t) {
        BruteForceCensus& part = parts[t];
        part.s1.assign(n + 1, 0);
        part.s2.assign(n + 1, 0);
        for_each_decorated(n, t + 1, [&](const DecoratedPermutation& w) {
          ++part.iterated;
          SifDecomposition d = sif_decomposition(w);
          bool smooth = std::all_of(d.components.begin(), d.components.end(),
                                    [](const DecoratedPermutation& c) { return is_spirograph(c); });
          if (!smooth) return;
          ++part.s1[w.k()];
          ++part.s2[d.components.size()];
        });
      },
      threads);
  BruteForceCensus out;
  out.n = n;
  out.s1.assign(n + 1, 0);
  out.s2.assign(n + 1, 0);
  for (const auto& p : parts) {
    out.iterated += p.iterated;
    for (int k = 0; k <= n; ++k) {
      out.s1[k] += p.s1[k];
      out.s2[k] += p.s2[k];
    }
  }
  return out;
}

}  // namespace positroid
