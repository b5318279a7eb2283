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

#include "positroid/positroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "positroid/bruhat.hpp"
#include "positroid/chord_diagram.hpp"
#include "positroid/error.hpp"

namespace positroid {
namespace {

inline int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

// Relabel so r becomes 1.
inline Mask rotate_to(Mask m, int r, int n) {
  if (r == 1) return m;
  return ((m >> (r - 1)) | (m << (n - r + 1))) & full_mask(n);
}

Mask map_elements(Mask m, int n, int (*f)(int, int, int), int arg) {
  Mask out = 0;
  for (int i : mask_elements(m)) out |= bit(f(i, n, arg));
  return out;
}

}  // namespace

Positroid::Positroid(int n, int k, std::vector<Mask> bases) : n_(n), k_(k), bases_(std::move(bases)) {
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("ground set size out of range");
  if (k < 0 || k > n) throw std::invalid_argument("rank out of range");
  if (bases_.empty()) throw std::invalid_argument("a matroid needs at least one basis");
  for (Mask m : bases_) {
    if ((m & ~full_mask(n)) != 0 || popcount(m) != k) {
      throw std::invalid_argument("basis of the wrong size or outside [n]");
    }
  }
  std::sort(bases_.begin(), bases_.end(), lex_less);
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

Positroid::Positroid(int n, int k, const std::vector<KSubset>& bases)
    : Positroid(n, k, [&] {
        std::vector<Mask> m;
        for (const auto& s : bases) {
          if (s.n() != n) throw std::invalid_argument("basis on the wrong ground set");
          m.push_back(s.mask());
        }
        return m;
      }()) {}

std::vector<KSubset> Positroid::basis_sets() const {
  std::vector<KSubset> out;
  out.reserve(bases_.size());
  for (Mask m : bases_) out.emplace_back(n_, m);
  return out;
}

bool Positroid::contains(Mask m) const {
  if (popcount(m) != k_) return false;
  return std::binary_search(bases_.begin(), bases_.end(), m, lex_less);
}

std::vector<Mask> Positroid::nonbases() const {
  std::vector<Mask> out;
  for (Mask m : all_k_subsets(n_, k_))
    if (!contains(m)) out.push_back(m);
  return out;
}

bool Positroid::satisfies_basis_exchange() const {
  for (Mask I : bases_) {
    for (Mask J : bases_) {
      for (int a : mask_elements(I & ~J)) {
        bool ok = false;
        for (int b : mask_elements(J & ~I)) {
          if (contains((I & ~bit(a)) | bit(b))) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

std::vector<Mask> all_k_subsets(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  std::vector<Mask> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= bit(i);
    out.push_back(m);
    int j = k - 1;
    while (j >= 0 && idx[j] == n - k + j + 1) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

bool gale_leq(int n, Mask I, Mask J, int r) {
  if (popcount(I) != popcount(J)) throw std::invalid_argument("Gale order needs equal sizes");
  Mask a = rotate_to(I, r, n), b = rotate_to(J, r, n);
  int ca = 0, cb = 0;
  for (int t = 0; t < n; ++t) {
    ca += (a >> t) & 1;
    cb += (b >> t) & 1;
    if (ca < cb) return false;
  }
  return true;
}

bool gale_leq(const KSubset& I, const KSubset& J, int r) {
  if (I.n() != J.n()) throw std::invalid_argument("Gale order needs a common ground set");
  if (r < 1 || r > I.n()) throw std::invalid_argument("r out of range");
  return gale_leq(I.n(), I.mask(), J.mask(), r);
}

Positroid positroid_from_necklace(const GrassmannNecklace& N) {
  std::vector<Mask> bases;
  for (Mask m : all_k_subsets(N.n, N.k)) {
    bool ok = true;
    for (int r = 1; r <= N.n && ok; ++r) ok = gale_leq(N.n, N.sets[r - 1].mask(), m, r);
    if (ok) bases.push_back(m);
  }
  return Positroid(N.n, N.k, std::move(bases));
}

Positroid positroid_from_decorated(const DecoratedPermutation& w) {
  return positroid_from_necklace(grassmann_necklace(w));
}

Positroid positroid_from_interval(const GrassmannInterval& iv) {
  iv.validate();
  std::vector<Mask> bases;
  for (const auto& y : bruhat_interval(iv.u, iv.v)) bases.push_back(initial_set(y, iv.k).mask());
  return Positroid(iv.v.n(), iv.k, std::move(bases));
}

MatrixMatroid positroid_from_matrix(const RationalMatrix& a) {
  const int k = a.rows(), n = a.cols();
  if (n < 1) throw std::invalid_argument("matrix needs at least one column");
  if (rank(a) != k) throw DomainError("matrix does not have full row rank");
  MatrixMatroid out;
  out.tnn = true;
  std::vector<Mask> bases;
  for (Mask m : all_k_subsets(n, k)) {
    Rational d = determinant(a.select_columns(mask_elements(m)));
    if (d != 0) bases.push_back(m);
    if (d < 0) out.tnn = false;
  }
  out.matroid = Positroid(n, k, std::move(bases));
  return out;
}

namespace {

// Bounded affine permutation: i <= f(i) <= i + n, loops f(i) = i,
// coloops f(i) = i + n.
std::vector<int> affine_of(const DecoratedPermutation& w) {
  const int n = w.n();
  std::vector<int> f(n + 1);
  for (int i = 1; i <= n; ++i) {
    const int x = w(i);
    if (x == i) f[i] = w.is_cw_loop(i) ? i + n : i;
    else f[i] = x > i ? x : x + n;
  }
  return f;
}

DecoratedPermutation decorated_of(const std::vector<int>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<int> v(n), cw, ccw;
  for (int i = 1; i <= n; ++i) {
    v[i - 1] = (f[i] - 1) % n + 1;
    if (v[i - 1] == i) (f[i] == i ? ccw : cw).push_back(i);
  }
  return DecoratedPermutation(Permutation(std::move(v)), cw, ccw);
}

}  // namespace

RationalMatrix tnn_matrix(const DecoratedPermutation& w) {
  const int n = w.n(), k = w.k();
  const std::vector<int> f = affine_of(w);
  auto fixed = [&](int x) { return f[x] == x || f[x] == x + n; };
  for (int i = 1; i <= n; ++i) {
    if (fixed(i)) continue;
    // next non-fixed point after i, cyclically
    int j = i % n + 1, coloops = 0;
    while (j != i && fixed(j)) {
      if (f[j] == j + n) ++coloops;
      j = j % n + 1;
    }
    if (j == i) continue;
    const int fi = f[i], fj = j > i ? f[j] : f[j] + n;
    if (fi >= fj) continue;
    std::vector<int> g = f;
    g[i] = fj;
    g[j] = j > i ? fi : fi - n;
    if (g[i] > i + n || g[j] < j) continue;
    RationalMatrix a = tnn_matrix(decorated_of(g));
    // sign of moving column i into the slot of column j
    const int passed = j > i ? coloops : k - 1 - coloops;
    const int sign = passed % 2 ? -1 : 1;
    for (int r = 0; r < k; ++r) a.at(r, j - 1) += sign * a.at(r, i - 1);
    return a;
  }
  for (int i = 1; i <= n; ++i)
    if (!fixed(i)) throw InvariantViolation("no bridge found for " + w.to_string());
  RationalMatrix a(k, n);
  int r = 0;
  for (int i = 1; i <= n; ++i)
    if (f[i] == i + n) a.at(r++, i - 1) = 1;
  return a;
}

GrassmannNecklace necklace_of(const Positroid& m) {
  GrassmannNecklace N;
  N.n = m.n();
  N.k = m.k();
  for (int r = 1; r <= m.n(); ++r) {
    Mask best = m.bases().front();
    for (Mask b : m.bases()) {
      if (lex_less(rotate_to(b, r, m.n()), rotate_to(best, r, m.n()))) best = b;
    }
    N.sets.emplace_back(m.n(), best);
  }
  return N;
}

DecoratedPermutation decorated_from_positroid(const Positroid& m) {
  DecoratedPermutation w;
  try {
    w = from_necklace(necklace_of(m));
  } catch (const DomainError&) {
    throw DomainError("basis collection is not a positroid");
  }
  if (!(positroid_from_decorated(w) == m)) throw DomainError("basis collection is not a positroid");
  return w;
}

std::vector<int> JohnsonGraph::degrees() const {
  std::vector<int> d(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

JohnsonGraph johnson_graph(const Positroid& m, bool oriented) {
  JohnsonGraph g;
  g.n = m.n();
  g.k = m.k();
  g.oriented = oriented;
  g.vertices = m.basis_sets();
  const auto& bases = m.bases();
  auto index_of = [&](Mask x) {
    return static_cast<int>(std::lower_bound(bases.begin(), bases.end(), x, lex_less) - bases.begin());
  };
  for (int i = 0; i < m.size(); ++i) {
    Mask I = bases[i];
    for (int a : mask_elements(I)) {
      for (int b : mask_elements(full_mask(m.n()) & ~I)) {
        Mask J = (I & ~bit(a)) | bit(b);
        if (!m.contains(J)) continue;
        int j = index_of(J);
        if (j < i) continue;
        if (oriented && a > b) g.edges.emplace_back(j, i);
        else g.edges.emplace_back(i, j);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<int> johnson_degrees(const Positroid& m) {
  std::vector<int> out;
  out.reserve(m.size());
  const Mask all = full_mask(m.n());
  for (Mask I : m.bases()) {
    int d = 0;
    for (Mask rest = I; rest; rest &= rest - 1) {
      Mask a = rest & (~rest + 1);
      for (Mask out_set = all & ~I; out_set; out_set &= out_set - 1) {
        Mask b = out_set & (~out_set + 1);
        if (m.contains((I & ~a) | b)) ++d;
      }
    }
    out.push_back(d);
  }
  return out;
}

int codimension(const DecoratedPermutation& w) {
  const int count = alignment_count(w);
  const GrassmannInterval iv = to_grassmann_interval(w);
  const int n = w.n(), k = iv.k;
  const int formula = k * (n - k) - (length(iv.v) - length(iv.u));
  if (count != formula) {
    throw InvariantViolation("alignment count disagrees with the interval length for " + w.to_string());
  }
  return count;
}

int tangent_codim(const Positroid& m, Mask J) {
  if (!m.contains(J)) throw DomainError("tangent codimension needs a basis");
  int count = 0;
  for (int a : mask_elements(J))
    for (int b : mask_elements(full_mask(m.n()) & ~J))
      if (!m.contains((J & ~bit(a)) | bit(b))) ++count;
  return count;
}

int tangent_codim(const Positroid& m, const KSubset& J) {
  if (J.n() != m.n()) throw std::invalid_argument("subset on the wrong ground set");
  return tangent_codim(m, J.mask());
}

Positroid dual(const Positroid& m) {
  std::vector<Mask> bases;
  for (Mask b : m.bases()) bases.push_back(full_mask(m.n()) & ~b);
  return Positroid(m.n(), m.n() - m.k(), std::move(bases));
}

Positroid cyclic_shift(const Positroid& m, int s) {
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    bases.push_back(map_elements(b, m.n(), [](int i, int n, int t) { return mod1(i + t, n); }, s));
  }
  return Positroid(m.n(), m.k(), std::move(bases));
}

Positroid ground_reversal(const Positroid& m) {
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    bases.push_back(map_elements(b, m.n(), [](int i, int n, int) { return n + 1 - i; }, 0));
  }
  return Positroid(m.n(), m.k(), std::move(bases));
}

Positroid direct_sum(const Positroid& a, const Positroid& b) {
  if (a.n() + b.n() > kMaxGround) throw std::invalid_argument("direct sum too large");
  std::vector<Mask> bases;
  for (Mask x : a.bases())
    for (Mask y : b.bases()) bases.push_back(x | (y << a.n()));
  return Positroid(a.n() + b.n(), a.k() + b.k(), std::move(bases));
}

std::vector<KSubset> connected_components(const Positroid& m) {
  // Elements are joined through fundamental circuits of a single basis.
  const int n = m.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Mask B = m.bases().front();
  for (int e : mask_elements(full_mask(n) & ~B)) {
    for (int b : mask_elements(B)) {
      if (m.contains((B & ~bit(b)) | bit(e))) {
        int x = find(e), y = find(b);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  }
  std::vector<Mask> comps(n + 1, 0);
  for (int i = 1; i <= n; ++i) comps[find(i)] |= bit(i);
  std::vector<KSubset> out;
  for (int i = 1; i <= n; ++i)
    if (comps[i]) out.emplace_back(n, comps[i]);
  return out;
}

}  // namespace positroid
