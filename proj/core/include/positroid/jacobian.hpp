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

#ifndef POSITROID_JACOBIAN_HPP_
#define POSITROID_JACOBIAN_HPP_

#include <vector>

#include "positroid/positroid.hpp"
#include "positroid/rational_matrix.hpp"

namespace positroid {

// The variable x_{row, col} of a generic k x n matrix, 1-based.
struct MatrixVariable {
  int row = 0;
  int col = 0;
  friend bool operator==(const MatrixVariable&, const MatrixVariable&) = default;
};

struct NonbasisJacobian {
  std::vector<Mask> rows;               // nonbases, lexicographic
  std::vector<MatrixVariable> columns;  // x_{11}, x_{12}, ..., x_{kn}
  RationalMatrix values;

  int row_index(Mask I) const;
  int column_index(int row, int col) const;
};

// Partial derivatives of every nonbasis minor Delta_I, evaluated at A.
NonbasisJacobian nonbasis_jacobian(const Positroid& m, const RationalMatrix& a);

// The 0/1 matrix with an identity in the columns of J.
RationalMatrix fixed_point_matrix(int n, const KSubset& J);

// Exact rank of the nonbasis Jacobian at the fixed point of J.
int jacobian_rank_oracle(const Positroid& m, const KSubset& J);

}  // namespace positroid

#endif  // POSITROID_JACOBIAN_HPP_
