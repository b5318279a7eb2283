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

#include "positroid/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace positroid {

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround) throw std::invalid_argument("element out of range");
    m |= bit(e);
  }
  return m;
}

bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  if (popcount(a) == popcount(b)) {
    Mask d = a ^ b;
    return (a & d & (~d + 1)) != 0;
  }
  return mask_elements(a) < mask_elements(b);
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n > kMaxGround) throw std::invalid_argument("permutation too large");
  std::vector<char> seen(n + 1, 0);
  for (int x : values_) {
    if (x < 1 || x > n || seen[x]) {
      throw std::invalid_argument("not a permutation of [n]");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw std::invalid_argument("bad permutation: " + std::string(text));
      }
      v.push_back(c - '0');
    }
  } else {
    int cur = -1;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
      } else if (c == ',' || c == ' ') {
        if (cur >= 0) v.push_back(cur);
        cur = -1;
      } else {
        throw std::invalid_argument("bad permutation: " + std::string(text));
      }
    }
    if (cur >= 0) v.push_back(cur);
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 0; i < n(); ++i) inv[values_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (v.n() != n()) throw std::invalid_argument("size mismatch in composition");
  std::vector<int> out(values_.size());
  for (int i = 1; i <= n(); ++i) out[i - 1] = (*this)(v(i));
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (n() > 9 && i > 0) s += ',';
    s += std::to_string(values_[i]);
  }
  return s;
}

KSubset::KSubset(int n, Mask mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set too large");
  if ((mask & ~full_mask(n)) != 0) throw std::invalid_argument("subset exceeds [n]");
}

KSubset::KSubset(int n, const std::vector<int>& elements) : n_(n) {
  if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set too large");
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("subset element out of range");
    if (has(mask_, e)) throw std::invalid_argument("repeated subset element");
    mask_ |= bit(e);
  }
}

std::string KSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

bool operator<(const KSubset& a, const KSubset& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return lex_less(a.mask_, b.mask_);
}

KSubset initial_set(const Permutation& w, int k) {
  if (k < 0 || k > w.n()) throw std::invalid_argument("k out of range");
  Mask m = 0;
  for (int i = 1; i <= k; ++i) m |= bit(w(i));
  return KSubset(w.n(), m);
}

}  // namespace positroid
