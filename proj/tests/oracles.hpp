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

#ifndef POSITROID_TESTS_ORACLES_HPP_
#define POSITROID_TESTS_ORACLES_HPP_

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "positroid/bruhat.hpp"
#include "positroid/enumeration.hpp"
#include "positroid/permutation.hpp"

namespace positroid::testing {

// y t_ij with length changed by exactly `delta` (+1 up, -1 down).
inline std::vector<Permutation> bruhat_neighbors(const Permutation& y, int delta) {
  std::vector<Permutation> out;
  const int ly = length(y);
  for (int i = 0; i < y.n(); ++i) {
    for (int j = i + 1; j < y.n(); ++j) {
      std::vector<int> v = y.values();
      std::swap(v[i], v[j]);
      Permutation z(v);
      if (length(z) == ly + delta) out.push_back(z);
    }
  }
  return out;
}

inline std::set<Permutation> reachable(const Permutation& start, int delta) {
  std::set<Permutation> seen{start};
  std::deque<Permutation> queue{start};
  while (!queue.empty()) {
    Permutation y = queue.front();
    queue.pop_front();
    for (const auto& z : bruhat_neighbors(y, delta)) {
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  return seen;
}

inline std::set<Permutation> interval_by_covers(const Permutation& u, const Permutation& v) {
  std::set<Permutation> up = reachable(u, +1), down = reachable(v, -1), out;
  std::set_intersection(up.begin(), up.end(), down.begin(), down.end(), std::inserter(out, out.end()));
  return out;
}

// The maximum of {y <= v : y[k] = I}, found by comparing every pair.
inline Permutation canonical_rep_brute(const KSubset& I, const Permutation& v, int k) {
  std::vector<Permutation> cands;
  for_each_permutation(v.n(), [&](const Permutation& y) {
    if (initial_set(y, k) == I && bruhat_leq_tableau(y, v)) cands.push_back(y);
  });
  for (const auto& y : cands) {
    bool top = std::all_of(cands.begin(), cands.end(),
                           [&](const Permutation& z) { return bruhat_leq_tableau(z, y); });
    if (top) return y;
  }
  throw std::logic_error("no maximum");
}

// Restricted growth strings; blocks as masks.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<Mask>&)>& fn) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::vector<Mask> blocks(used, 0);
      for (int t = 0; t < n; ++t) blocks[a[t]] |= bit(t + 1);
      fn(blocks);
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      a[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    fn({});
    return;
  }
  rec(0, 0);
}

inline bool blocks_noncrossing(const std::vector<Mask>& blocks, int n) {
  for (size_t x = 0; x < blocks.size(); ++x) {
    for (size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c)
            for (int d = c + 1; d <= n; ++d)
              if (has(blocks[x], a) && has(blocks[x], c) && has(blocks[y], b) && has(blocks[y], d)) return false;
    }
  }
  return true;
}

// Partial Bell polynomial B_{n,k}(2*1!, 1*2!, 2*3!, ...) summed over set partitions.
inline BigInt bell_by_set_partitions(int n, int k) {
  BigInt total = 0;
  for_each_set_partition(n, [&](const std::vector<Mask>& blocks) {
    if (static_cast<int>(blocks.size()) != k) return;
    BigInt term = 1;
    for (Mask b : blocks) {
      int m = popcount(b);
      BigInt f = 1;
      for (int i = 2; i <= m; ++i) f *= i;
      term *= spirograph_count(m) * f;
    }
    total += term;
  });
  return total;
}

struct NoncrossingCounts {
  std::vector<BigInt> s1;  // k = 0..n
  std::vector<BigInt> s2;  // index = number of blocks
  BigInt total = 0;
};

// Direct sum over noncrossing partitions of products of spirograph counts.
inline NoncrossingCounts noncrossing_census(int n) {
  NoncrossingCounts out;
  out.s1.assign(n + 1, 0);
  out.s2.assign(n + 1, 0);
  for_each_set_partition(n, [&](const std::vector<Mask>& blocks) {
    if (!blocks_noncrossing(blocks, n)) return;
    std::vector<BigInt> poly{1};
    BigInt weight = 1;
    for (Mask b : blocks) {
      const int m = popcount(b);
      weight *= spirograph_count(m);
      std::vector<BigInt> block(m + 1, 0);
      if (m == 1) {
        block[0] = 1;
        block[1] = 1;
      } else {
        for (int k = 1; k < m; ++k) block[k] = 1;
      }
      std::vector<BigInt> next(poly.size() + block.size() - 1, 0);
      for (size_t i = 0; i < poly.size(); ++i)
        for (size_t j = 0; j < block.size(); ++j) next[i + j] += poly[i] * block[j];
      poly = next;
    }
    for (int k = 0; k <= n && k < static_cast<int>(poly.size()); ++k) out.s1[k] += poly[k];
    out.s2[blocks.size()] += weight;
    out.total += weight;
  });
  return out;
}

}  // namespace positroid::testing

#endif  // POSITROID_TESTS_ORACLES_HPP_
