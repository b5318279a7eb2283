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

#include "positroid/bruhat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "positroid/error.hpp"

namespace positroid {

int length(const Permutation& w) {
  int inv = 0;
  const auto& v = w.values();
  for (int i = 0; i < w.n(); ++i)
    for (int j = i + 1; j < w.n(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

bool is_k_grassmannian(const Permutation& w, int k) {
  if (k < 0 || k > w.n()) throw std::invalid_argument("k out of range");
  for (int i = 1; i < w.n(); ++i) {
    if (i == k) continue;
    if (w(i) > w(i + 1)) return false;
  }
  return true;
}

bool bruhat_leq_tableau(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  const int n = u.n();
  // Counting form of the tableau criterion: for every prefix i and
  // threshold t, #{j <= i : u(j) >= t} <= #{j <= i : v(j) >= t}.
  std::vector<int> cu(n + 2, 0), cv(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int t = u(i); t >= 1; --t) ++cu[t];
    for (int t = v(i); t >= 1; --t) ++cv[t];
    for (int t = 1; t <= n; ++t)
      if (cu[t] > cv[t]) return false;
  }
  return true;
}

bool bruhat_leq_grassmannian(const Permutation& u, const Permutation& v, int k) {
  if (u.n() != v.n()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  for (int j = 1; j <= k; ++j)
    if (u(j) > v(j)) return false;
  for (int m = k + 1; m <= u.n(); ++m)
    if (u(m) < v(m)) return false;
  return true;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  int descent = 0, descents = 0;
  for (int i = 1; i < v.n(); ++i) {
    if (v(i) > v(i + 1)) {
      descent = i;
      ++descents;
    }
  }
  if (descents <= 1) {
    bool fast = bruhat_leq_grassmannian(u, v, descent);
    assert(fast == bruhat_leq_tableau(u, v));
    return fast;
  }
  return bruhat_leq_tableau(u, v);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("size mismatch in Bruhat interval");
  if (u.n() > kMaxIntervalN) {
    throw DomainError("Bruhat interval enumeration is limited to n <= 8");
  }
  if (!bruhat_leq(u, v)) throw DomainError("interval is empty: u is not below v");
  std::vector<Permutation> out;
  const int lu = length(u), lv = length(v);
  for_each_permutation(u.n(), [&](const Permutation& y) {
    int ly = length(y);
    if (ly < lu || ly > lv) return;
    if (bruhat_leq(u, y) && bruhat_leq(y, v)) out.push_back(y);
  });
  return out;
}

Permutation canonical_rep(const KSubset& I, const Permutation& v, int k) {
  const int n = v.n();
  if (I.n() != n || I.size() != k) throw std::invalid_argument("subset does not match (n, k)");
  if (!is_k_grassmannian(v, k)) throw std::invalid_argument("v is not k-Grassmannian");
  std::vector<int> elems = I.elements();
  for (int j = 0; j < k; ++j) {
    if (elems[j] > v(j + 1)) {
      throw DomainError("canonical representative needs i_j <= v(j) for all j");
    }
  }
  std::vector<int> out(n, 0);
  Mask used = 0;
  for (int j = 1; j <= k; ++j) {
    int pick = 0;
    for (int i : elems)
      if (i <= v(j) && !has(used, i)) pick = i;
    if (pick == 0) throw DomainError("canonical representative undefined");
    out[j - 1] = pick;
    used |= bit(pick);
  }
  for (int j = n; j > k; --j) {
    int pick = 0;
    for (int x = v(j); x <= n; ++x) {
      if (!has(used, x)) {
        pick = x;
        break;
      }
    }
    if (pick == 0) throw DomainError("canonical representative undefined");
    out[j - 1] = pick;
    used |= bit(pick);
  }
  return Permutation(std::move(out));
}

}  // namespace positroid
