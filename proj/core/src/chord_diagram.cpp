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

#include "positroid/chord_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "positroid/error.hpp"
#include "positroid/positroid.hpp"

namespace positroid {
namespace {

inline int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

// x in [a, b]^cyc.
inline bool in_cyc(int x, int a, int b) {
  return a <= b ? (a <= x && x <= b) : (x >= a || x <= b);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Two disjoint subsets cross iff their labels alternate at least four
// times going around the circle.
bool sets_cross(Mask a, Mask b, int n) {
  int changes = 0, first = 0, last = 0;
  for (int i = 1; i <= n; ++i) {
    int label = has(a, i) ? 1 : has(b, i) ? 2 : 0;
    if (label == 0) continue;
    if (first == 0) first = label;
    else if (label != last) ++changes;
    last = label;
  }
  if (first != 0 && last != first) ++changes;
  return changes >= 4;
}

NoncrossingPartition make_partition(int n, std::vector<Mask> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](Mask x, Mask y) { return std::countr_zero(x) < std::countr_zero(y); });
  NoncrossingPartition p;
  p.n = n;
  for (Mask m : blocks) p.blocks.emplace_back(n, m);
  return p;
}

bool verify_decomposition(const DecoratedPermutation& w, const SifDecomposition& d) {
  if (!d.partition.is_partition() || !d.partition.is_noncrossing()) return false;
  for (const auto& c : d.components)
    if (!is_decorated_sif(c)) return false;
  return reassemble(d.partition, d.components) == w;
}

SifDecomposition decomposition_from_blocks(const DecoratedPermutation& w,
                                           std::vector<Mask> blocks) {
  SifDecomposition out;
  out.partition = make_partition(w.n(), std::move(blocks));
  for (const auto& b : out.partition.blocks) out.components.push_back(restrict_to_block(w, b));
  return out;
}

}  // namespace

Arc arc_of(const DecoratedPermutation& w, int i) {
  Arc a{i, w(i), std::nullopt};
  if (w.is_fixed(i)) a.loop = w.orientation(i);
  return a;
}

bool crossing(const Arc& a, const Arc& b, int n) {
  if (a.is_loop() || b.is_loop()) return false;
  auto test = [n](const Arc& x, const Arc& y) {
    auto d = [&](int t) { return ((t - x.tail) % n + n) % n; };
    int D = (y.head == x.tail) ? n : d(y.head);
    return 0 < d(y.tail) && d(y.tail) <= d(x.head) && d(x.head) < D;
  };
  return test(a, b) || test(b, a);
}

bool is_alignment(const DecoratedPermutation& w, int p, int s) {
  const int n = w.n();
  if (p == s) return false;
  const Arc ap = arc_of(w, p), as = arc_of(w, s);
  if (crossing(ap, as, n)) return false;
  const int wp = w(p), ws = w(s);
  if (!ap.is_loop() && !as.is_loop()) {
    if (wp == s || ws == p) return false;
  }
  if (!in_cyc(wp, p, mod1(ws - 1, n))) return false;
  if (!in_cyc(ws, mod1(wp + 1, n), s)) return false;
  if (as.is_loop() && !w.is_cw_loop(s)) return false;
  if (ap.is_loop() && !w.is_ccw_loop(p)) return false;
  return true;
}

std::vector<Alignment> alignments(const DecoratedPermutation& w) {
  std::vector<Alignment> out;
  const int n = w.n();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      bool ab = is_alignment(w, a, b);
      bool ba = is_alignment(w, b, a);
      if (ab && ba) {
        throw InvariantViolation("arc pair is an alignment both ways in " + w.to_string());
      }
      if (ab) out.push_back({arc_of(w, a), arc_of(w, b)});
      if (ba) out.push_back({arc_of(w, b), arc_of(w, a)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Alignment& x, const Alignment& y) {
    return std::pair(x.port.tail, x.starboard.tail) < std::pair(y.port.tail, y.starboard.tail);
  });
  return out;
}

int alignment_count(const DecoratedPermutation& w) {
  int count = 0;
  for (int a = 1; a <= w.n(); ++a)
    for (int b = a + 1; b <= w.n(); ++b)
      if (is_alignment(w, a, b) || is_alignment(w, b, a)) ++count;
  return count;
}

namespace {

void collect_crossed(const DecoratedPermutation& w, bool stop_at_first,
                     std::vector<CrossedAlignment>& out) {
  const int n = w.n();
  for (const Alignment& al : alignments(w)) {
    if (al.port.is_loop() || al.starboard.is_loop()) continue;
    const int p = al.port.tail, wp = al.port.head;
    const int s = al.starboard.tail, ws = al.starboard.head;
    for (int x = 1; x <= n; ++x) {
      Arc ax = arc_of(w, x);
      if (!crossing(ax, al.port, n) || !crossing(ax, al.starboard, n)) continue;
      const int wx = w(x);
      bool starboard = in_cyc(x, ws, s) && in_cyc(wx, p, wp);
      bool port = in_cyc(x, p, wp) && in_cyc(wx, ws, s);
      if (starboard == port) {
        throw InvariantViolation("crossed alignment without a unique tacking in " + w.to_string());
      }
      out.push_back({al, ax, starboard ? Tacking::kStarboard : Tacking::kPort});
      if (stop_at_first) return;
    }
  }
}

}  // namespace

std::vector<CrossedAlignment> crossed_alignments(const DecoratedPermutation& w) {
  std::vector<CrossedAlignment> out;
  collect_crossed(w, false, out);
  return out;
}

std::optional<CrossedAlignment> first_crossed_alignment(const DecoratedPermutation& w) {
  std::vector<CrossedAlignment> out;
  collect_crossed(w, true, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::optional<CrossedAlignment> witness_crossed_alignment(const DecoratedPermutation& w) {
  const auto all = crossed_alignments(w);
  if (all.empty()) return std::nullopt;
  for (auto it = all.rbegin(); it != all.rend(); ++it)
    if (it->tacking == Tacking::kStarboard) return *it;
  return all.back();
}

DecoratedPermutation spirograph(int n, int k) {
  if (n < 1) throw std::invalid_argument("spirograph needs n >= 1");
  if (n == 1) {
    if (k != 0 && k != 1) throw std::invalid_argument("spirograph on [1] needs k in {0, 1}");
    return DecoratedPermutation(Permutation::identity(1), k == 1 ? bit(1) : 0);
  }
  if (k < 1 || k > n - 1) throw std::invalid_argument("spirograph needs 1 <= k <= n-1");
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = mod1(i + k, n);
  return DecoratedPermutation(Permutation(std::move(v)), 0);
}

std::optional<int> spirograph_shift(const DecoratedPermutation& w) {
  const int n = w.n();
  if (n == 1) return 0;
  const int m = w(1) - 1;
  if (m == 0) return std::nullopt;
  for (int i = 2; i <= n; ++i)
    if (w(i) != mod1(i + m, n)) return std::nullopt;
  return m;
}

bool NoncrossingPartition::is_partition() const {
  Mask seen = 0;
  for (const auto& b : blocks) {
    if (b.n() != n || b.mask() == 0 || (seen & b.mask()) != 0) return false;
    seen |= b.mask();
  }
  return seen == full_mask(n);
}

bool NoncrossingPartition::is_noncrossing() const {
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j)
      if (sets_cross(blocks[i].mask(), blocks[j].mask(), n)) return false;
  return true;
}

bool is_decorated_sif(const DecoratedPermutation& w) {
  const int n = w.n();
  if (n == 1) return true;
  for (int a = 1; a <= n; ++a) {
    int lo = n + 1, hi = 0;
    for (int b = a; b <= n; ++b) {
      lo = std::min(lo, w(b));
      hi = std::max(hi, w(b));
      if (a == 1 && b == n) break;
      if (lo == a && hi == b) return false;
    }
  }
  return true;
}

DecoratedPermutation restrict_to_block(const DecoratedPermutation& w, const KSubset& block) {
  std::vector<int> elems = block.elements();
  const int m = static_cast<int>(elems.size());
  if (m == 0) throw std::invalid_argument("empty block");
  std::vector<int> index(w.n() + 1, 0);
  for (int t = 0; t < m; ++t) index[elems[t]] = t + 1;
  std::vector<int> v(m);
  Mask cw = 0;
  for (int t = 0; t < m; ++t) {
    int image = index[w(elems[t])];
    if (image == 0) throw std::invalid_argument("block is not a union of cycles");
    v[t] = image;
    if (w.is_cw_loop(elems[t])) cw |= bit(t + 1);
  }
  return DecoratedPermutation(Permutation(std::move(v)), cw);
}

DecoratedPermutation reassemble(const NoncrossingPartition& partition,
                                const std::vector<DecoratedPermutation>& components) {
  if (partition.blocks.size() != components.size()) {
    throw std::invalid_argument("one component per block expected");
  }
  if (!partition.is_partition()) throw std::invalid_argument("blocks do not partition [n]");
  std::vector<int> v(partition.n, 0);
  Mask cw = 0;
  for (size_t b = 0; b < components.size(); ++b) {
    std::vector<int> elems = partition.blocks[b].elements();
    const auto& c = components[b];
    if (c.n() != static_cast<int>(elems.size())) {
      throw std::invalid_argument("component size does not match its block");
    }
    for (int t = 1; t <= c.n(); ++t) {
      v[elems[t - 1] - 1] = elems[c(t) - 1];
      if (c.is_cw_loop(t)) cw |= bit(elems[t - 1]);
    }
  }
  return DecoratedPermutation(Permutation(std::move(v)), cw);
}

SifDecomposition sif_decomposition(const DecoratedPermutation& w) {
  const int n = w.n();
  std::vector<Mask> parts;
  Mask seen = 0;
  for (int i = 1; i <= n; ++i) {
    if (has(seen, i)) continue;
    Mask cyc = 0;
    int j = i;
    do {
      cyc |= bit(j);
      j = w(j);
    } while (j != i);
    seen |= cyc;
    parts.push_back(cyc);
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t a = 0; a < parts.size() && !merged; ++a) {
      for (size_t b = a + 1; b < parts.size() && !merged; ++b) {
        if (sets_cross(parts[a], parts[b], n)) {
          parts[a] |= parts[b];
          parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(b));
          merged = true;
        }
      }
    }
  }
  SifDecomposition out = decomposition_from_blocks(w, parts);
  if (verify_decomposition(w, out)) return out;

  // Connected components of the positroid are authoritative.
  std::vector<Mask> blocks;
  for (const auto& c : connected_components(positroid_from_decorated(w))) blocks.push_back(c.mask());
  out = decomposition_from_blocks(w, blocks);
  if (!verify_decomposition(w, out)) {
    throw InvariantViolation("no SIF decomposition found for " + w.to_string());
  }
  return out;
}

DecoratedPermutation direct_sum(const DecoratedPermutation& a, const DecoratedPermutation& b) {
  const int n1 = a.n(), n2 = b.n();
  if (n1 + n2 > kMaxGround) throw std::invalid_argument("direct sum too large");
  std::vector<int> v(n1 + n2);
  for (int i = 1; i <= n1; ++i) v[i - 1] = a(i);
  for (int i = 1; i <= n2; ++i) v[n1 + i - 1] = b(i) + n1;
  Mask cw = a.cw_mask() | (b.cw_mask() << n1);
  return DecoratedPermutation(Permutation(std::move(v)), cw);
}

DecoratedPermutation transform(const DecoratedPermutation& w, const Transform& t) {
  const int n = w.n();
  const Mask fixed = w.fixed_mask();
  std::vector<int> v(n);
  Mask cw = 0;
  if (std::holds_alternative<ReverseArcs>(t)) {
    for (int i = 1; i <= n; ++i) v[i - 1] = w.inv(i);
    cw = fixed & ~w.cw_mask();
  } else if (std::holds_alternative<Reflect>(t)) {
    for (int i = 1; i <= n; ++i) {
      v[i - 1] = n + 1 - w(n + 1 - i);
      if (has(fixed, n + 1 - i) && !w.is_cw_loop(n + 1 - i)) cw |= bit(i);
    }
  } else {
    const int s = ((std::get<Rotate>(t).s % n) + n) % n;
    for (int i = 1; i <= n; ++i) {
      v[mod1(i + s, n) - 1] = mod1(w(i) + s, n);
      if (w.is_cw_loop(i)) cw |= bit(mod1(i + s, n));
    }
  }
  return DecoratedPermutation(Permutation(std::move(v)), cw);
}

}  // namespace positroid
