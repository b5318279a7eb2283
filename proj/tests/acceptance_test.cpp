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

// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "positroid/bruhat.hpp"
#include "positroid/chord_diagram.hpp"
#include "positroid/decorated.hpp"
#include "positroid/enumeration.hpp"
#include "positroid/jacobian.hpp"
#include "positroid/positroid.hpp"
#include "positroid/smoothness.hpp"

namespace {

using namespace positroid;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first few failures; later ones are only counted.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) msgs_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    std::ostringstream s;
    s << failures_ << " failure(s): " << msgs_.str();
    return {false, s.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream msgs_;
};

std::string mask_str(int n, Mask m) { return KSubset(n, m).to_string(); }

Outcome alignment_fidelity() {
  Check c;
  auto w = DecoratedPermutation::parse("895↺47↻6132");
  std::set<std::pair<int, int>> got, want(testing::kExampleAlignments.begin(), testing::kExampleAlignments.end());
  for (const auto& a : alignments(w)) got.insert({a.port.tail, a.starboard.tail});
  c.expect(got == want, "alignment set differs");
  return c.done("13 alignments match");
}

Outcome codimension_identity() {
  Check c;
  std::size_t count = 0;
  for (int n = 1; n <= 7; ++n)
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      ++count;
      auto iv = to_grassmann_interval(w);
      int rhs = iv.k * (n - iv.k) - (length(iv.v) - length(iv.u));
      c.expect(alignment_count(w) == rhs, w.to_string());
    });
  return c.done(std::to_string(count) + " decorated permutations");
}

Outcome round_trips() {
  Check c;
  std::size_t count = 0;
  for (int n = 1; n <= 6; ++n)
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      ++count;
      c.expect(from_grassmann_interval(to_grassmann_interval(w)) == w, "interval " + w.to_string());
      c.expect(from_necklace(grassmann_necklace(w)) == w, "necklace " + w.to_string());
      c.expect(decorated_from_positroid(positroid_from_decorated(w)) == w, "positroid " + w.to_string());
    });
  return c.done(std::to_string(count) + " decorated permutations, three maps each");
}

Outcome initial_sets() {
  Check c;
  std::size_t count = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      ++count;
      c.expect(positroid_from_interval(to_grassmann_interval(w)) == positroid_from_decorated(w), w.to_string());
    });
  auto all6 = all_decorated(6);
  std::mt19937 rng(20230101);
  std::uniform_int_distribution<std::size_t> pick(0, all6.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const auto& w = all6[pick(rng)];
    c.expect(positroid_from_interval(to_grassmann_interval(w)) == positroid_from_decorated(w), w.to_string());
  }
  return c.done(std::to_string(count) + " exhaustive (n <= 5) + 100 random at n = 6");
}

Outcome jacobian_rank() {
  Check c;
  std::size_t pairs = 0;
  for (int n = 1; n <= 5; ++n)
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      auto m = positroid_from_decorated(w);
      for (Mask J : m.bases()) {
        ++pairs;
        c.expect(jacobian_rank_oracle(m, KSubset(n, J)) == tangent_codim(m, J), w.to_string());
      }
    });
  // worked instance
  auto mm = positroid_from_matrix(RationalMatrix::from_ints({{1, 2, 3, 0, 4, 0}, {0, 1, 0, 0, 2, 1}})).matroid;
  KSubset J(6, std::vector<int>{1, 2});
  c.expect(tangent_codim(mm, J) == 4, "tangent codim of the 2x6 instance");
  c.expect(jacobian_rank_oracle(mm, J) == 4, "jacobian rank of the 2x6 instance");
  auto jac = nonbasis_jacobian(mm, fixed_point_matrix(6, J));
  const std::vector<Mask> rows = {mask_of({1, 3}), mask_of({1, 4}), mask_of({2, 4}), mask_of({2, 5})};
  const std::vector<std::pair<int, int>> cols = {{2, 3}, {2, 4}, {1, 4}, {1, 5}};
  std::ostringstream sub;
  for (int i = 0; i < 4; ++i) {
    sub << (i ? " " : "") << "[";
    for (int j = 0; j < 4; ++j) {
      Rational x = jac.values.at(jac.row_index(rows[i]), jac.column_index(cols[j].first, cols[j].second));
      sub << (j ? "," : "") << x;
      if (j > i) c.expect(x == 0, "submatrix not lower triangular");
      if (j == i) c.expect(x == 1 || x == -1, "diagonal entry not +-1");
    }
    sub << "]";
  }
  return c.done(std::to_string(pairs) + " (positroid, basis) pairs; submatrix " + sub.str());
}

Outcome seven_criteria() {
  Check c;
  std::size_t count = 0, smooth = 0;
  for (int n = 1; n <= 8; ++n)
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      ++count;
      try {
        // the report throws if any two evaluated criteria disagree
        auto r = smoothness_report(w, n <= 5);
        c.expect(r.criteria.size() == (n <= 5 ? 6u : 5u), "criteria missing for " + w.to_string());
        smooth += r.smooth;
      } catch (const std::exception& e) {
        c.expect(false, e.what());
      }
    });
  return c.done(std::to_string(count) + " decorated permutations, " + std::to_string(smooth) + " smooth");
}

Outcome pipeline() {
  Check c;
  auto mm = positroid_from_matrix(RationalMatrix::from_ints({{0, 3, 1, 2, 4, 0}, {0, 0, 0, 1, 2, 1}}));
  c.expect(mm.matroid.size() == 8, "8 bases");
  c.expect(mm.tnn, "tnn flag");
  std::vector<Mask> want_bases;
  for (auto e : std::vector<std::vector<int>>{{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 6}})
    want_bases.push_back(mask_of(e));
  c.expect(mm.matroid.bases() == want_bases, "basis list");
  auto N = necklace_of(mm.matroid);
  std::vector<std::vector<int>> want_n = {{2, 4}, {2, 4}, {3, 4}, {4, 6}, {5, 6}, {2, 6}};
  for (int r = 0; r < 6; ++r) c.expect(N.sets[r].elements() == want_n[r], "necklace entry " + std::to_string(r + 1));
  auto w = from_necklace(N);
  c.expect(w == DecoratedPermutation::parse("↺136524"), "decorated permutation " + w.to_string());
  auto iv = to_grassmann_interval(w);
  c.expect(iv.u.to_string() == "241365" && iv.v.to_string() == "561234", "interval");
  std::vector<Mask> want_nb;
  for (auto e : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {4, 5}})
    want_nb.push_back(mask_of(e));
  c.expect(positroid_from_interval(iv).nonbases() == want_nb, "nonbases");
  c.expect(!smoothness_report(w, true).smooth, "verdict");
  return c.done("matrix -> " + w.to_string() + " -> [" + iv.u.to_string() + ", " + iv.v.to_string() +
                "] -> singular");
}

Outcome psi_machinery() {
  Check c;
  std::size_t pairs = 0, gaps = 0;
  for (int n = 1; n <= 7; ++n)
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      auto ae = anti_exchange_pairs(w);
      pairs += ae.size();
      std::set<std::pair<int, int>> images;
      for (const auto& p : ae) {
        auto a = psi_map(w, p);
        c.expect(is_alignment(w, a.port.tail, a.starboard.tail), "image not an alignment " + w.to_string());
        c.expect(images.insert({a.port.tail, a.starboard.tail}).second, "not injective " + w.to_string());
      }
      auto m = positroid_from_decorated(w);
      c.expect(static_cast<int>(ae.size()) == tangent_codim(m, anti_exceedance_set(w, 1)), "|AE| " + w.to_string());
      for (const auto& ca : crossed_alignments(w)) {
        if (ca.tacking != Tacking::kStarboard) continue;
        ++gaps;
        auto [z, zc] = normalize_crossed_alignment(w, ca);
        for (const auto& p : anti_exchange_pairs(z))
          c.expect(!(psi_map(z, p) == zc.alignment), "gap hit " + w.to_string());
      }
    });
  return c.done(std::to_string(pairs) + " anti-exchange pairs, " + std::to_string(gaps) +
                " starboard crossed alignments checked");
}

Outcome rigid_invariance() {
  Check c;
  std::size_t count = 0;
  for (int n = 1; n <= 6; ++n)
    for_each_decorated(n, [&](const DecoratedPermutation& w) {
      ++count;
      const bool s = smoothness_report(w).smooth;
      const int a = alignment_count(w);
      auto m = positroid_from_decorated(w);
      auto r = transform(w, ReverseArcs{});
      auto f = transform(w, Reflect{});
      for (const auto& z : {r, f}) {
        c.expect(smoothness_report(z).smooth == s, "smoothness " + w.to_string());
        c.expect(alignment_count(z) == a, "alignments " + w.to_string());
      }
      for (int t = 1; t < n; ++t) {
        auto z = transform(w, Rotate{t});
        c.expect(smoothness_report(z).smooth == s, "rotation smoothness " + w.to_string());
        c.expect(alignment_count(z) == a, "rotation alignments " + w.to_string());
        c.expect(cyclic_shift(m, t) == positroid_from_decorated(z), "shift " + w.to_string());
      }
      c.expect(dual(m) == positroid_from_decorated(r), "dual " + w.to_string());
      c.expect(ground_reversal(m) == positroid_from_decorated(transform(r, Reflect{})), "reversal " + w.to_string());
    });
  return c.done(std::to_string(count) + " decorated permutations");
}

Outcome direct_sums() {
  Check c;
  std::map<int, std::vector<DecoratedPermutation>> pool;
  for (int n = 1; n <= 9; ++n) pool[n] = n <= 6 ? all_decorated(n) : std::vector<DecoratedPermutation>{};
  std::mt19937 rng(42);
  auto random_decorated = [&](int n) {
    if (!pool[n].empty()) return pool[n][std::uniform_int_distribution<std::size_t>(0, pool[n].size() - 1)(rng)];
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    Mask cw = 0;
    for (int i = 1; i <= n; ++i)
      if (v[i - 1] == i && rng() % 2) cw |= bit(i);
    return DecoratedPermutation(Permutation(v), cw);
  };
  int smooth_pairs = 0;
  for (int t = 0; t < 200; ++t) {
    const int n1 = std::uniform_int_distribution<int>(1, 9)(rng);
    const int n2 = std::uniform_int_distribution<int>(1, 10 - n1)(rng);
    auto w1 = random_decorated(n1), w2 = random_decorated(n2);
    // bias toward smooth components so both sides of the equivalence occur
    if (t % 4 == 0 && n1 > 1) w1 = spirograph(n1, 1 + static_cast<int>(rng() % (n1 - 1)));
    if (t % 4 == 0 && n2 > 1) w2 = spirograph(n2, 1 + static_cast<int>(rng() % (n2 - 1)));
    const int k1 = w1.k(), k2 = w2.k(), cross = k1 * (n2 - k2) + k2 * (n1 - k1);
    auto w = direct_sum(w1, w2);
    const std::string tag = w1.to_string() + " + " + w2.to_string();
    c.expect(alignment_count(w) == alignment_count(w1) + alignment_count(w2) + cross, "alignments " + tag);
    auto m1 = positroid_from_decorated(w1), m2 = positroid_from_decorated(w2);
    auto m = direct_sum(m1, m2);
    c.expect(m == positroid_from_decorated(w), "positroid " + tag);
    for (Mask I1 : m1.bases())
      for (Mask I2 : m2.bases())
        c.expect(tangent_codim(m, I1 | (I2 << n1)) == tangent_codim(m1, I1) + tangent_codim(m2, I2) + cross,
                 "tangent codim " + tag);
    const bool s1 = smoothness_report(w1).smooth, s2 = smoothness_report(w2).smooth;
    smooth_pairs += s1 && s2;
    c.expect(smoothness_report(w).smooth == (s1 && s2), "smoothness " + tag);
  }
  return c.done("200 pairs, " + std::to_string(smooth_pairs) + " with both components smooth");
}

Outcome enumeration() {
  Check c;
  using clock = std::chrono::steady_clock;
  for (int n = 1; n <= 9; ++n) {
    c.expect(smooth_count_coeff(n).str() == testing::kSmoothCounts[n - 1], "coefficient formula n=" + std::to_string(n));
    c.expect(smooth_count_bell(n).str() == testing::kSmoothCounts[n - 1], "Bell formula n=" + std::to_string(n));
  }
  auto t0 = clock::now();
  auto rows = census_through(10);
  double census_s = std::chrono::duration<double>(clock::now() - t0).count();
  c.expect(census_s < 5.0, "census n <= 10 took too long");
  for (int n = 1; n <= 10; ++n) {
    const auto& r = rows[n - 1];
    std::vector<std::string> s1, s2;
    for (std::size_t k = 0; k < r.s1.by_k.size(); ++k) s1.push_back(r.s1.by_k[k].str());
    for (std::size_t k = 1; k < r.s2.by_k.size(); ++k) s2.push_back(r.s2.by_k[k].str());
    c.expect(s1 == testing::kTableS1[n - 1], "s1 row " + std::to_string(n));
    c.expect(s2 == testing::kTableS2[n - 1], "s2 row " + std::to_string(n));
  }
  for (const auto& r : census_through(20)) c.expect(r.q2() == r.q3(), "q2 != q3 at n=" + std::to_string(r.n));
  BellTriangle tri(100);
  for (int n = 1; n <= 100; ++n) {
    BigInt f = 1;
    for (int k = n; k >= 1; --k) {
      f *= n - k + 1;
      c.expect(tri.b(n, k) % f == 0, "integrality " + std::to_string(n) + "," + std::to_string(k));
    }
  }
  t0 = clock::now();
  for (int n = 1; n <= 8; ++n) {
    auto b = brute_force_census(n);
    for (int k = 0; k <= n; ++k) {
      c.expect(BigInt(b.s1[k]) == rows[n - 1].s1.by_k[k], "brute s1 n=" + std::to_string(n));
      c.expect(BigInt(b.s2[k]) == rows[n - 1].s2.by_k[k], "brute s2 n=" + std::to_string(n));
    }
  }
  double brute_s = std::chrono::duration<double>(clock::now() - t0).count();
  c.expect(brute_s < 300.0, "brute force took too long");
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << "census n<=10 " << census_s << "s, brute force n<=8 " << brute_s << "s";
  return c.done(s.str());
}

Outcome growth_ratios() {
  Check c;
  std::ostringstream s;
  for (const auto& rc : testing::kPrintedRatios) {
    std::string got = growth_ratio(rc.n, rc.digits);
    if (s.tellp() > 0) s << ", ";
    s << "n=" << rc.n << " " << got << (got == rc.printed ? "" : " (printed " + rc.printed + ")");
    c.expect(got == rc.printed, "n=" + std::to_string(rc.n) + " gives " + got + ", printed " + rc.printed);
  }
  return c.done(s.str());
}

struct Item {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Item> criteria = {
      {1, "alignment fidelity", 1.0, alignment_fidelity},
      {2, "codimension identity n <= 7", 10.0, codimension_identity},
      {3, "bijection round trips n <= 6", 30.0, round_trips},
      {4, "interval initial sets = positroid", 600.0, initial_sets},
      {5, "jacobian rank = tangent codimension", 60.0, jacobian_rank},
      {6, "smoothness criteria agree n <= 8", 600.0, seven_criteria},
      {7, "worked pipeline", 600.0, pipeline},
      {8, "anti-exchange pairs and psi", 600.0, psi_machinery},
      {9, "rigid transformation invariance n <= 6", 600.0, rigid_invariance},
      {10, "direct sum laws", 600.0, direct_sums},
      {11, "smooth positroid enumeration", 600.0, enumeration},
      {12, "growth ratios", 30.0, growth_ratios},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(cr.budget_s)) + "s budget)";
    }
    failed += !o.ok;
    std::printf("%s criterion %2d: %s [%.2fs] %s\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
