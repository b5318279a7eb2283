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

#ifndef POSITROID_CHORD_DIAGRAM_HPP_
#define POSITROID_CHORD_DIAGRAM_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "positroid/decorated.hpp"

namespace positroid {

struct Arc {
  int tail = 0;
  int head = 0;
  std::optional<Orientation> loop;  // set iff tail == head

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

Arc arc_of(const DecoratedPermutation& w, int i);

// Loops never cross. Two other arcs (i -> w(i)), (j -> w(j)) cross when,
// for one of the two role orders, with d(x) = (x - i) mod n and
// D = n if w(j) = i else d(w(j)), we have 0 < d(j) <= d(w(i)) < D.
// So arcs meeting head to tail count as crossing.
bool crossing(const Arc& a, const Arc& b, int n);

struct Alignment {
  Arc port;
  Arc starboard;
  friend bool operator==(const Alignment&, const Alignment&) = default;
};

enum class Tacking { kPort, kStarboard };

struct CrossedAlignment {
  Alignment alignment;
  Arc crosser;
  Tacking tacking;
  friend bool operator==(const CrossedAlignment&, const CrossedAlignment&) = default;
};

// True iff arcs from p and s form an alignment with p on the port side.
bool is_alignment(const DecoratedPermutation& w, int p, int s);

// Sorted by (port tail, starboard tail).
std::vector<Alignment> alignments(const DecoratedPermutation& w);
int alignment_count(const DecoratedPermutation& w);

std::vector<CrossedAlignment> crossed_alignments(const DecoratedPermutation& w);
std::optional<CrossedAlignment> first_crossed_alignment(const DecoratedPermutation& w);
// Report witness: the last starboard tacking crossed alignment in the
// order above, or the last one of any kind.
std::optional<CrossedAlignment> witness_crossed_alignment(const DecoratedPermutation& w);

// pi_{n,k}: i -> i + k mod n. For n = 1, k = 0 is the ccw loop and
// k = 1 the cw loop.
DecoratedPermutation spirograph(int n, int k);
// The shift m when w is a spirograph (m = 0 only for n = 1).
std::optional<int> spirograph_shift(const DecoratedPermutation& w);
inline bool is_spirograph(const DecoratedPermutation& w) {
  return spirograph_shift(w).has_value();
}

struct NoncrossingPartition {
  int n = 0;
  std::vector<KSubset> blocks;  // sorted by least element

  bool is_partition() const;
  bool is_noncrossing() const;
  friend bool operator==(const NoncrossingPartition&, const NoncrossingPartition&) = default;
};

struct SifDecomposition {
  NoncrossingPartition partition;
  std::vector<DecoratedPermutation> components;  // relabeled to [|B|]
};

// No proper nonempty interval [a, b] with w[a, b] = [a, b].
bool is_decorated_sif(const DecoratedPermutation& w);

// Restriction to a union of cycles, relabeled order-preservingly.
DecoratedPermutation restrict_to_block(const DecoratedPermutation& w, const KSubset& block);
DecoratedPermutation reassemble(const NoncrossingPartition& partition,
                                const std::vector<DecoratedPermutation>& components);

SifDecomposition sif_decomposition(const DecoratedPermutation& w);

DecoratedPermutation direct_sum(const DecoratedPermutation& a, const DecoratedPermutation& b);

struct ReverseArcs {};
struct Reflect {};
struct Rotate {
  int s = 0;
};
using Transform = std::variant<ReverseArcs, Reflect, Rotate>;

// ReverseArcs: (w^{-1}, flipped). Reflect: conjugation by w0 with
// flipped orientations. Rotate(s): i + s -> w(i) + s.
DecoratedPermutation transform(const DecoratedPermutation& w, const Transform& t);

}  // namespace positroid

#endif  // POSITROID_CHORD_DIAGRAM_HPP_
