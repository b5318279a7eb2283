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

#ifndef POSITROID_DECORATED_HPP_
#define POSITROID_DECORATED_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "positroid/permutation.hpp"

namespace positroid {

enum class Orientation { kCw, kCcw };

inline Orientation flip(Orientation o) {
  return o == Orientation::kCw ? Orientation::kCcw : Orientation::kCw;
}

// A permutation with every fixed point marked clockwise or
// counterclockwise. The marks are stored as the mask of cw fixed points.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;
  DecoratedPermutation(Permutation w, Mask cw_fixed);
  DecoratedPermutation(Permutation w, const std::vector<int>& cw,
                       const std::vector<int>& ccw);

  // "895↺47↻6132": a mark precedes the fixed point it decorates,
  // ↻ for cw and ↺ for ccw. Unmarked fixed points are rejected.
  // For n > 9 the values are separated by spaces or commas.
  static DecoratedPermutation parse(std::string_view text);

  int n() const { return w_.n(); }
  const Permutation& perm() const { return w_; }
  int operator()(int i) const { return w_(i); }
  int inv(int i) const { return winv_[i - 1]; }
  bool is_fixed(int i) const { return w_(i) == i; }
  bool is_cw_loop(int i) const { return has(cw_, i); }
  bool is_ccw_loop(int i) const { return is_fixed(i) && !has(cw_, i); }
  Orientation orientation(int i) const;
  Mask cw_mask() const { return cw_; }
  Mask fixed_mask() const;
  std::vector<int> fixed_points() const;
  std::vector<int> cw_points() const;
  std::vector<int> ccw_points() const;
  // k = |I_1|.
  int k() const;

  std::string to_string() const;

  friend bool operator==(const DecoratedPermutation& a, const DecoratedPermutation& b) {
    return a.w_ == b.w_ && a.cw_ == b.cw_;
  }
  friend auto operator<=>(const DecoratedPermutation& a, const DecoratedPermutation& b) {
    if (auto c = a.w_ <=> b.w_; c != 0) return c;
    return a.cw_ <=> b.cw_;
  }

 private:
  Permutation w_;
  std::vector<int> winv_;
  Mask cw_ = 0;
};

// Every decorated permutation of [n], lexicographic in one-line
// notation, then by orientation bitmask (bit t set = t-th fixed point cw).
void for_each_decorated(int n, const std::function<void(const DecoratedPermutation&)>& fn);
// The slice of the above with w(1) = first; slices for first = 1..n
// concatenate to the full order.
void for_each_decorated(int n, int first,
                        const std::function<void(const DecoratedPermutation&)>& fn);
std::vector<DecoratedPermutation> all_decorated(int n);
std::uint64_t count_decorated(int n);

struct GrassmannInterval {
  Permutation u;
  Permutation v;
  int k = 0;

  // Throws DomainError unless v is k-Grassmannian and u <= v.
  void validate() const;
  friend bool operator==(const GrassmannInterval&, const GrassmannInterval&) = default;
};

struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<KSubset> sets;  // sets[r-1] = I_r

  friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;
};

// I_r = {i : i <_r w^{-1}(i)} plus the cw fixed points.
KSubset anti_exceedance_set(const DecoratedPermutation& w, int r);
GrassmannNecklace grassmann_necklace(const DecoratedPermutation& w);
// Throws DomainError when the sets are not a Grassmann necklace.
DecoratedPermutation from_necklace(const GrassmannNecklace& necklace);

GrassmannInterval to_grassmann_interval(const DecoratedPermutation& w);
DecoratedPermutation from_grassmann_interval(const GrassmannInterval& iv);

}  // namespace positroid

#endif  // POSITROID_DECORATED_HPP_
