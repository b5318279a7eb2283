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

#ifndef POSITROID_BRUHAT_HPP_
#define POSITROID_BRUHAT_HPP_

#include <functional>
#include <vector>

#include "positroid/permutation.hpp"

namespace positroid {

// Number of inversions.
int length(const Permutation& w);

bool is_k_grassmannian(const Permutation& w, int k);

// Tableau criterion: sorted u[i] <= sorted v[i] entrywise for all i.
bool bruhat_leq_tableau(const Permutation& u, const Permutation& v);

// Bergeron-Sottile test, valid only when v is k-Grassmannian:
// u(j) <= v(j) for j <= k and u(m) >= v(m) for m > k.
bool bruhat_leq_grassmannian(const Permutation& u, const Permutation& v, int k);

// Uses the Grassmannian test when v has at most one descent.
bool bruhat_leq(const Permutation& u, const Permutation& v);

// Lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> all_permutations(int n);

inline constexpr int kMaxIntervalN = 8;

// {y : u <= y <= v} by filtering S_n; n <= kMaxIntervalN.
std::vector<Permutation> bruhat_interval(const Permutation& u, const Permutation& v);

// u(I, v): the maximal permutation below the k-Grassmannian v with
// initial set I. Requires i_j <= v(j) for the sorted elements of I.
Permutation canonical_rep(const KSubset& I, const Permutation& v, int k);

}  // namespace positroid

#endif  // POSITROID_BRUHAT_HPP_
