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

#include "positroid/decorated.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "positroid/bruhat.hpp"
#include "positroid/error.hpp"

namespace positroid {
namespace {

constexpr std::string_view kCwMark = "↻";
constexpr std::string_view kCcwMark = "↺";

// Position of x in the order r <_r r+1 <_r ... <_r r-1, starting at 0.
inline int rpos(int x, int r, int n) { return ((x - r) % n + n) % n; }

}  // namespace

DecoratedPermutation::DecoratedPermutation(Permutation w, Mask cw_fixed)
    : w_(std::move(w)), cw_(cw_fixed) {
  winv_ = w_.inverse().values();
  if ((cw_ & ~fixed_mask()) != 0) {
    throw std::invalid_argument("cw orientation given for a non-fixed point");
  }
}

DecoratedPermutation::DecoratedPermutation(Permutation w, const std::vector<int>& cw,
                                           const std::vector<int>& ccw)
    : w_(std::move(w)) {
  winv_ = w_.inverse().values();
  Mask cwm = 0, ccwm = 0;
  for (int i : cw) {
    if (i < 1 || i > n() || !is_fixed(i)) throw std::invalid_argument("cw entry is not a fixed point");
    cwm |= bit(i);
  }
  for (int i : ccw) {
    if (i < 1 || i > n() || !is_fixed(i)) throw std::invalid_argument("ccw entry is not a fixed point");
    ccwm |= bit(i);
  }
  if ((cwm & ccwm) != 0) throw std::invalid_argument("fixed point marked both cw and ccw");
  if ((cwm | ccwm) != fixed_mask()) throw std::invalid_argument("every fixed point needs an orientation");
  cw_ = cwm;
}

DecoratedPermutation DecoratedPermutation::parse(std::string_view text) {
  const bool multi = text.find(',') != std::string_view::npos;
  std::vector<int> values;
  Mask cw = 0, ccw = 0;
  int pending = 0;  // 1 cw, 2 ccw
  int cur = -1;
  auto flush = [&]() {
    if (cur < 0) return;
    values.push_back(cur);
    int pos = static_cast<int>(values.size());
    if (pending != 0) {
      if (cur != pos) throw std::invalid_argument("orientation mark on a non-fixed point");
      (pending == 1 ? cw : ccw) |= bit(pos);
    }
    pending = 0;
    cur = -1;
  };
  size_t i = 0;
  while (i < text.size()) {
    std::string_view rest = text.substr(i);
    if (rest.starts_with(kCwMark) || rest.starts_with(kCcwMark)) {
      flush();
      pending = rest.starts_with(kCwMark) ? 1 : 2;
      i += kCwMark.size();
      continue;
    }
    char c = text[i++];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (multi) {
        cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
      } else {
        flush();
        cur = c - '0';
        flush();
      }
    } else if (c == ',' || c == ' ') {
      flush();
    } else {
      throw std::invalid_argument("bad decorated permutation: " + std::string(text));
    }
  }
  flush();
  if (pending != 0) throw std::invalid_argument("dangling orientation mark");
  if (values.empty()) throw std::invalid_argument("empty decorated permutation");
  Permutation w(values);
  Mask fixed = 0;
  for (int p = 1; p <= w.n(); ++p)
    if (w(p) == p) fixed |= bit(p);
  if ((cw | ccw) != fixed) {
    throw std::invalid_argument("every fixed point needs an orientation mark");
  }
  return DecoratedPermutation(std::move(w), cw);
}

Orientation DecoratedPermutation::orientation(int i) const {
  if (!is_fixed(i)) throw std::invalid_argument("orientation of a non-fixed point");
  return has(cw_, i) ? Orientation::kCw : Orientation::kCcw;
}

Mask DecoratedPermutation::fixed_mask() const {
  Mask m = 0;
  for (int i = 1; i <= n(); ++i)
    if (is_fixed(i)) m |= bit(i);
  return m;
}

std::vector<int> DecoratedPermutation::fixed_points() const { return mask_elements(fixed_mask()); }
std::vector<int> DecoratedPermutation::cw_points() const { return mask_elements(cw_); }
std::vector<int> DecoratedPermutation::ccw_points() const {
  return mask_elements(fixed_mask() & ~cw_);
}

int DecoratedPermutation::k() const { return anti_exceedance_set(*this, 1).size(); }

std::string DecoratedPermutation::to_string() const {
  std::string s;
  for (int i = 1; i <= n(); ++i) {
    if (n() > 9 && i > 1) s += ',';
    if (is_fixed(i)) s += has(cw_, i) ? kCwMark : kCcwMark;
    s += std::to_string(w_(i));
  }
  return s;
}

namespace {

void emit_orientations(const Permutation& w,
                       const std::function<void(const DecoratedPermutation&)>& fn) {
  std::vector<int> fixed;
  for (int i = 1; i <= w.n(); ++i)
    if (w(i) == i) fixed.push_back(i);
  const std::uint64_t total = std::uint64_t{1} << fixed.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Mask cw = 0;
    for (size_t t = 0; t < fixed.size(); ++t)
      if ((bits >> t) & 1) cw |= bit(fixed[t]);
    fn(DecoratedPermutation(w, cw));
  }
}

}  // namespace

void for_each_decorated(int n, const std::function<void(const DecoratedPermutation&)>& fn) {
  for_each_permutation(n, [&](const Permutation& w) { emit_orientations(w, fn); });
}

void for_each_decorated(int n, int first,
                        const std::function<void(const DecoratedPermutation&)>& fn) {
  if (first < 1 || first > n) throw std::invalid_argument("first value out of range");
  std::vector<int> v;
  v.push_back(first);
  for (int i = 1; i <= n; ++i)
    if (i != first) v.push_back(i);
  do {
    emit_orientations(Permutation(v), fn);
  } while (std::next_permutation(v.begin() + 1, v.end()));
}

std::vector<DecoratedPermutation> all_decorated(int n) {
  std::vector<DecoratedPermutation> out;
  for_each_decorated(n, [&](const DecoratedPermutation& w) { out.push_back(w); });
  return out;
}

std::uint64_t count_decorated(int n) {
  // sum_j n!/j!
  std::uint64_t term = 1, total = 1;
  for (int j = n; j >= 1; --j) {
    term *= j;
    total += term;
  }
  return total;
}

void GrassmannInterval::validate() const {
  if (u.n() != v.n()) throw std::invalid_argument("interval endpoints differ in size");
  if (k < 0 || k > v.n()) throw std::invalid_argument("k out of range");
  if (!is_k_grassmannian(v, k)) throw DomainError("v is not k-Grassmannian");
  if (!bruhat_leq(u, v)) throw DomainError("u is not below v in Bruhat order");
}

KSubset anti_exceedance_set(const DecoratedPermutation& w, int r) {
  const int n = w.n();
  if (r < 1 || r > n) throw std::invalid_argument("r out of range");
  Mask m = w.cw_mask();
  for (int i = 1; i <= n; ++i)
    if (rpos(i, r, n) < rpos(w.inv(i), r, n)) m |= bit(i);
  return KSubset(n, m);
}

GrassmannNecklace grassmann_necklace(const DecoratedPermutation& w) {
  GrassmannNecklace out;
  out.n = w.n();
  for (int r = 1; r <= w.n(); ++r) out.sets.push_back(anti_exceedance_set(w, r));
  out.k = out.sets.front().size();
  return out;
}

DecoratedPermutation from_necklace(const GrassmannNecklace& N) {
  const int n = N.n;
  if (n < 1 || static_cast<int>(N.sets.size()) != n) {
    throw std::invalid_argument("necklace must list n sets");
  }
  for (const auto& s : N.sets) {
    if (s.n() != n) throw std::invalid_argument("necklace set has the wrong ground set");
    if (s.size() != N.k) throw DomainError("necklace sets differ in size");
  }
  std::vector<int> w(n, 0);
  Mask cw = 0;
  for (int r = 1; r <= n; ++r) {
    Mask cur = N.sets[r - 1].mask();
    Mask next = N.sets[r % n].mask();
    Mask added = next & ~cur;
    Mask removed = cur & ~next;
    if (added == 0 && removed == 0) {
      w[r - 1] = r;
      if (has(cur, r)) cw |= bit(r);
    } else if (popcount(added) == 1 && removed == bit(r)) {
      w[r - 1] = std::countr_zero(added) + 1;
    } else {
      throw DomainError("not a Grassmann necklace at position " + std::to_string(r));
    }
  }
  std::vector<int> check = w;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i)
    if (check[i] != i + 1) throw DomainError("necklace does not determine a permutation");
  DecoratedPermutation out(Permutation(w), cw);
  if (grassmann_necklace(out) != N) throw DomainError("necklace is inconsistent");
  return out;
}

GrassmannInterval to_grassmann_interval(const DecoratedPermutation& w) {
  const int n = w.n();
  KSubset I1 = anti_exceedance_set(w, 1);
  Mask head = 0;
  for (int i : I1.elements()) head |= bit(w.inv(i));
  std::vector<int> v = mask_elements(head);
  for (int i : mask_elements(full_mask(n) & ~head)) v.push_back(i);
  std::vector<int> u(n);
  for (int i = 0; i < n; ++i) u[i] = w(v[i]);
  return GrassmannInterval{Permutation(u), Permutation(v), I1.size()};
}

DecoratedPermutation from_grassmann_interval(const GrassmannInterval& iv) {
  iv.validate();
  Permutation w = iv.u * iv.v.inverse();
  Mask uk = initial_set(iv.u, iv.k).mask();
  Mask cw = 0;
  for (int j = 1; j <= w.n(); ++j)
    if (w(j) == j && has(uk, j)) cw |= bit(j);
  return DecoratedPermutation(std::move(w), cw);
}

}  // namespace positroid
