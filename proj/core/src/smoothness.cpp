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

#include "positroid/smoothness.hpp"

#include <algorithm>
#include <stdexcept>

#include "positroid/bruhat.hpp"
#include "positroid/error.hpp"

namespace positroid {
namespace {

inline int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

// There is x in [a, r-1] with w^{-1}(x) in [r, n].
bool cond1(const DecoratedPermutation& w, int a, int r) {
  for (int x = a; x <= r - 1; ++x)
    if (w.inv(x) >= r) return true;
  return false;
}

// There is y in [r, b] with w^{-1}(y) in [1, r-1].
bool cond2(const DecoratedPermutation& w, int b, int r) {
  for (int y = r; y <= b; ++y)
    if (w.inv(y) <= r - 1) return true;
  return false;
}

bool cond1_fails_somewhere(const DecoratedPermutation& w, int a, int b) {
  for (int r = a + 1; r <= b; ++r)
    if (!cond1(w, a, r)) return true;
  return false;
}

bool cond2_fails_somewhere(const DecoratedPermutation& w, int a, int b) {
  for (int r = a + 1; r <= b; ++r)
    if (!cond2(w, b, r)) return true;
  return false;
}

Arc rotate_arc(const Arc& x, int s, int n) {
  return Arc{mod1(x.tail + s, n), mod1(x.head + s, n), x.loop};
}

}  // namespace

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kC2: return "C2";
    case Criterion::kC3: return "C3";
    case Criterion::kC4: return "C4";
    case Criterion::kC5: return "C5";
    case Criterion::kC6: return "C6";
    case Criterion::kC7: return "C7";
  }
  return "?";
}

bool criterion_c5(const DecoratedPermutation& w) { return !first_crossed_alignment(w).has_value(); }

bool criterion_c6(const DecoratedPermutation& w) {
  for (const auto& c : sif_decomposition(w).components)
    if (!is_spirograph(c)) return false;
  return true;
}

bool criterion_c7(const Positroid& m, std::optional<KSubset>* witness) {
  // M is the direct sum of its restrictions, which are uniform exactly
  // when every r-subset of the block occurs.
  for (const KSubset& block : connected_components(m)) {
    std::vector<Mask> pieces;
    for (Mask b : m.bases()) pieces.push_back(b & block.mask());
    std::sort(pieces.begin(), pieces.end());
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    const int size = block.size(), r = popcount(pieces.front());
    BigInt binom = 1;
    for (int i = 0; i < r; ++i) binom = binom * (size - i) / (i + 1);
    if (binom != static_cast<long long>(pieces.size())) {
      if (witness) *witness = block;
      return false;
    }
  }
  return true;
}

SmoothnessReport smoothness_report(const DecoratedPermutation& w, bool include_c2) {
  const int n = w.n();
  SmoothnessReport rep;
  rep.n = n;
  const Positroid m = positroid_from_decorated(w);
  const GrassmannInterval iv = to_grassmann_interval(w);
  rep.k = iv.k;
  const int dim = length(iv.v) - length(iv.u);
  const int align = alignment_count(w);
  rep.codimension = align;
  const std::vector<int> deg = johnson_degrees(m);

  bool c3 = true, c4 = true;
  for (size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] != iv.k * (n - iv.k) - align) c3 = false;
    if (deg[i] != deg.front() || deg[i] != dim) c4 = false;
  }
  rep.criteria[Criterion::kC3] = c3;
  rep.criteria[Criterion::kC4] = c4;

  rep.crossed_alignment = witness_crossed_alignment(w);
  rep.criteria[Criterion::kC5] = !rep.crossed_alignment.has_value();
  rep.criteria[Criterion::kC6] = criterion_c6(w);
  rep.criteria[Criterion::kC7] = criterion_c7(m, &rep.nonuniform_component);

  if (include_c2) {
    if (n > kMaxIntervalN) throw DomainError("criterion C2 is limited to n <= 8");
    bool c2 = true;
    for (const auto& y : bruhat_interval(iv.u, iv.v)) {
      Mask yk = initial_set(y, iv.k).mask();
      auto it = std::lower_bound(m.bases().begin(), m.bases().end(), yk, lex_less);
      if (deg[it - m.bases().begin()] != dim) {
        c2 = false;
        break;
      }
    }
    rep.criteria[Criterion::kC2] = c2;
  }

  for (size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] != dim) {
      KSubset J(n, m.bases()[i]);
      if (!rep.irregular_vertex) rep.irregular_vertex = IrregularVertex{J, deg[i], dim};
      if (!rep.singular_point && tangent_codim(m, J) < align) rep.singular_point = J;
    }
  }

  rep.smooth = rep.criteria.begin()->second;
  for (const auto& [c, ok] : rep.criteria) {
    if (ok != rep.smooth) {
      throw InvariantViolation("smoothness criteria disagree on " + w.to_string() + " at " +
                               criterion_name(c));
    }
  }
  return rep;
}

std::vector<KSubset> singular_tfixed_points(const Positroid& m) {
  const int codim = alignment_count(decorated_from_positroid(m));
  std::vector<KSubset> out;
  for (Mask b : m.bases())
    if (tangent_codim(m, b) < codim) out.emplace_back(m.n(), b);
  return out;
}

bool exchange_test_I1(const DecoratedPermutation& w, int a, int b) {
  const KSubset I1 = anti_exceedance_set(w, 1);
  if (!I1.contains(a) || b < 1 || b > w.n() || I1.contains(b)) {
    throw std::invalid_argument("exchange test needs a in I_1 and b outside I_1");
  }
  if (a > b) return false;
  for (int r = a + 1; r <= b; ++r)
    if (!cond1(w, a, r) || !cond2(w, b, r)) return false;
  return true;
}

std::vector<AntiExchangePair> anti_exchange_pairs(const DecoratedPermutation& w) {
  const int n = w.n();
  const KSubset I1 = anti_exceedance_set(w, 1);
  const std::vector<int> in = I1.elements();
  std::vector<int> out_set;
  for (int i = 1; i <= n; ++i)
    if (!I1.contains(i)) out_set.push_back(i);

  std::vector<AntiExchangePair> pairs;
  for (int a : in) {
    for (int b : out_set) {
      if (exchange_test_I1(w, a, b)) continue;
      AntiExchangePair pair{a, b, AeClass::kGreater, std::nullopt};
      if (a < b) {
        if (cond1_fails_somewhere(w, a, b)) {
          pair.cls = AeClass::kFirst;
          for (int b1 : out_set) {
            if (b1 > a && cond1_fails_somewhere(w, a, b1)) {
              for (int r = a + 1; r <= b1; ++r) {
                if (!cond1(w, a, r)) {
                  pair.witness_r = r;
                  break;
                }
              }
              break;
            }
          }
        } else {
          pair.cls = AeClass::kSecond;
          for (auto it = in.rbegin(); it != in.rend(); ++it) {
            const int as = *it;
            if (as < b && cond2_fails_somewhere(w, as, b)) {
              for (int r = b; r >= as + 1; --r) {
                if (!cond2(w, b, r)) {
                  pair.witness_r = r;
                  break;
                }
              }
              break;
            }
          }
        }
        if (!pair.witness_r) throw InvariantViolation("anti-exchange pair without a witness");
      }
      pairs.push_back(pair);
    }
  }
  return pairs;
}

Alignment psi_map(const DecoratedPermutation& w, const AntiExchangePair& pair) {
  const auto pairs = anti_exchange_pairs(w);
  if (std::find(pairs.begin(), pairs.end(), pair) == pairs.end()) {
    throw DomainError("not an anti-exchange pair of this decorated permutation");
  }
  const int n = w.n();
  int p = w.inv(pair.b), s = w.inv(pair.a);
  int steps = 0;
  if (pair.cls == AeClass::kFirst) {
    while (!(p >= *pair.witness_r && p <= n)) {
      p = w.inv(p);
      if (++steps > n) throw InvariantViolation("psi iteration did not terminate");
    }
  } else if (pair.cls == AeClass::kSecond) {
    while (!(s >= 1 && s <= *pair.witness_r - 1)) {
      s = w.inv(s);
      if (++steps > n) throw InvariantViolation("psi iteration did not terminate");
    }
  }
  return Alignment{arc_of(w, p), arc_of(w, s)};
}

std::pair<DecoratedPermutation, CrossedAlignment> normalize_crossed_alignment(
    const DecoratedPermutation& w, const CrossedAlignment& ca) {
  const int n = w.n();
  const int s = mod1(1 - ca.crosser.tail, n) % n;
  DecoratedPermutation z = transform(w, Rotate{s});
  CrossedAlignment out{{rotate_arc(ca.alignment.port, s, n), rotate_arc(ca.alignment.starboard, s, n)},
                       rotate_arc(ca.crosser, s, n),
                       ca.tacking};
  return {z, out};
}

}  // namespace positroid
