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

#ifndef POSITROID_POSITROID_HPP_
#define POSITROID_POSITROID_HPP_

#include <utility>
#include <vector>

#include "positroid/decorated.hpp"
#include "positroid/permutation.hpp"
#include "positroid/rational_matrix.hpp"

namespace positroid {

// Rank-k basis collection on [n], bases kept as lexicographically
// sorted masks. The constructor checks sizes only; use
// satisfies_basis_exchange() or decorated_from_positroid() to validate.
class Positroid {
 public:
  Positroid() = default;
  Positroid(int n, int k, std::vector<Mask> bases);
  Positroid(int n, int k, const std::vector<KSubset>& bases);

  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(bases_.size()); }
  const std::vector<Mask>& bases() const { return bases_; }
  std::vector<KSubset> basis_sets() const;
  bool contains(Mask m) const;
  bool contains(const KSubset& s) const { return s.n() == n_ && contains(s.mask()); }
  // Complement of the bases in C([n], k), lexicographic.
  std::vector<Mask> nonbases() const;

  bool satisfies_basis_exchange() const;

  friend bool operator==(const Positroid& a, const Positroid& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.bases_ == b.bases_;
  }

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Mask> bases_;
};

// All k-subsets of [n] in lexicographic order.
std::vector<Mask> all_k_subsets(int n, int k);

// I <=_r J: componentwise after sorting both in the order starting at r.
bool gale_leq(const KSubset& I, const KSubset& J, int r);
bool gale_leq(int n, Mask I, Mask J, int r);

Positroid positroid_from_necklace(const GrassmannNecklace& necklace);
Positroid positroid_from_decorated(const DecoratedPermutation& w);
// Initial sets of the interval; n <= kMaxIntervalN.
Positroid positroid_from_interval(const GrassmannInterval& iv);

struct MatrixMatroid {
  Positroid matroid;
  bool tnn = false;  // every maximal minor >= 0
};
// Throws DomainError when A does not have full row rank.
MatrixMatroid positroid_from_matrix(const RationalMatrix& a);
// A totally nonnegative integer k x n matrix A with M_A = M(w), built by
// adding one bridge at a time.
RationalMatrix tnn_matrix(const DecoratedPermutation& w);

// Necklace of Gale-order minima.
GrassmannNecklace necklace_of(const Positroid& m);
// Throws DomainError when M is not a positroid.
DecoratedPermutation decorated_from_positroid(const Positroid& m);

struct JohnsonGraph {
  int n = 0;
  int k = 0;
  std::vector<KSubset> vertices;
  // Vertex indices. When oriented, first -> second follows the Gale
  // rule: I - {i} + {j} = J with i < j gives I -> J.
  std::vector<std::pair<int, int>> edges;
  bool oriented = false;

  std::vector<int> degrees() const;
};

JohnsonGraph johnson_graph(const Positroid& m, bool oriented);
// Degree of every basis in J(M), in basis order.
std::vector<int> johnson_degrees(const Positroid& m);

// #alignments, asserted equal to k(n-k) - (l(v) - l(u)).
int codimension(const DecoratedPermutation& w);
// Nonbases at Johnson distance one from J.
int tangent_codim(const Positroid& m, const KSubset& J);
int tangent_codim(const Positroid& m, Mask J);

Positroid dual(const Positroid& m);
// I -> I + s mod n.
Positroid cyclic_shift(const Positroid& m, int s);
// i -> n + 1 - i.
Positroid ground_reversal(const Positroid& m);
// M1 + M2 shifted by n1.
Positroid direct_sum(const Positroid& a, const Positroid& b);

// Connected components of the matroid, sorted by least element.
std::vector<KSubset> connected_components(const Positroid& m);

}  // namespace positroid

#endif  // POSITROID_POSITROID_HPP_
