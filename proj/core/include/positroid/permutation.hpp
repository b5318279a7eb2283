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

#ifndef POSITROID_PERMUTATION_HPP_
#define POSITROID_PERMUTATION_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace positroid {

// Subsets of [n] for n <= 64. Bit i-1 stands for element i.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

inline constexpr Mask bit(int i) { return Mask{1} << (i - 1); }
inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline int popcount(Mask m) { return std::popcount(m); }
inline bool has(Mask m, int i) { return (m >> (i - 1)) & 1; }

std::vector<int> mask_elements(Mask m);
Mask mask_of(const std::vector<int>& elements);

// Lexicographic order on sorted element lists.
bool lex_less(Mask a, Mask b);

// Permutation of [n] in one-line notation, values 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation longest(int n);
  // "3124" (single digits, n <= 9) or "3,1,2,4" / "3 1 2 4".
  static Permutation parse(std::string_view text);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const;
  // (w * v)(i) = w(v(i)).
  Permutation operator*(const Permutation& v) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

// A k-subset of [n], kept as a mask plus the ground-set size.
class KSubset {
 public:
  KSubset() = default;
  KSubset(int n, Mask mask);
  KSubset(int n, const std::vector<int>& elements);

  int n() const { return n_; }
  Mask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool contains(int i) const { return i >= 1 && i <= n_ && has(mask_, i); }
  std::vector<int> elements() const { return mask_elements(mask_); }
  std::string to_string() const;  // "{1,2,6}"

  friend bool operator==(const KSubset& a, const KSubset& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend bool operator<(const KSubset& a, const KSubset& b);

 private:
  int n_ = 0;
  Mask mask_ = 0;
};

// w[k] = {w(1), ..., w(k)}.
KSubset initial_set(const Permutation& w, int k);

}  // namespace positroid

#endif  // POSITROID_PERMUTATION_HPP_
