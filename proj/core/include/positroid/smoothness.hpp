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

#ifndef POSITROID_SMOOTHNESS_HPP_
#define POSITROID_SMOOTHNESS_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "positroid/chord_diagram.hpp"
#include "positroid/decorated.hpp"
#include "positroid/positroid.hpp"

namespace positroid {

// C2: every y in [u, v] has deg y[k] = l(v) - l(u) in J(M).
// C3: every basis has degree k(n-k) - #alignments.
// C4: J(M) is regular of degree l(v) - l(u).
// C5: no crossed alignments.
// C6: every SIF component is a spirograph.
// C7: every connected component of M is uniform.
enum class Criterion { kC2, kC3, kC4, kC5, kC6, kC7 };

std::string criterion_name(Criterion c);

struct IrregularVertex {
  KSubset basis;
  int degree = 0;
  int expected = 0;  // l(v) - l(u)
};

struct SmoothnessReport {
  bool smooth = false;
  int n = 0;
  int k = 0;
  int codimension = 0;
  std::map<Criterion, bool> criteria;
  std::optional<CrossedAlignment> crossed_alignment;
  std::optional<IrregularVertex> irregular_vertex;
  std::optional<KSubset> singular_point;
  std::optional<KSubset> nonuniform_component;
};

// Evaluates C3-C7, and C2 when asked (n <= kMaxIntervalN). Throws
// InvariantViolation if the criteria disagree.
SmoothnessReport smoothness_report(const DecoratedPermutation& w, bool include_c2 = false);

// Individual criteria, for callers that need only one of them.
bool criterion_c5(const DecoratedPermutation& w);
bool criterion_c6(const DecoratedPermutation& w);
bool criterion_c7(const Positroid& m, std::optional<KSubset>* witness = nullptr);

// Bases J with tangent_codim(M, J) below the codimension.
std::vector<KSubset> singular_tfixed_points(const Positroid& m);

// Whether (I_1 - {a}) + {b} is a basis, decided from the arcs alone.
// Needs a in I_1 and b outside it.
bool exchange_test_I1(const DecoratedPermutation& w, int a, int b);

enum class AeClass { kGreater, kFirst, kSecond };

struct AntiExchangePair {
  int a = 0;
  int b = 0;
  AeClass cls = AeClass::kGreater;
  std::optional<int> witness_r;  // r-bar(a) for kFirst, r-underbar(b) for kSecond
  friend bool operator==(const AntiExchangePair&, const AntiExchangePair&) = default;
};

// Sorted by (a, b).
std::vector<AntiExchangePair> anti_exchange_pairs(const DecoratedPermutation& w);

Alignment psi_map(const DecoratedPermutation& w, const AntiExchangePair& pair);

// Rotates the diagram so the crossing arc starts at 1.
std::pair<DecoratedPermutation, CrossedAlignment> normalize_crossed_alignment(
    const DecoratedPermutation& w, const CrossedAlignment& ca);

}  // namespace positroid

#endif  // POSITROID_SMOOTHNESS_HPP_
