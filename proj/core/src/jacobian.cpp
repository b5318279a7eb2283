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

#include "positroid/jacobian.hpp"

#include <algorithm>
#include <stdexcept>

#include "positroid/error.hpp"

namespace positroid {

int NonbasisJacobian::row_index(Mask I) const {
  auto it = std::find(rows.begin(), rows.end(), I);
  return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int NonbasisJacobian::column_index(int row, int col) const {
  auto it = std::find(columns.begin(), columns.end(), MatrixVariable{row, col});
  return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

NonbasisJacobian nonbasis_jacobian(const Positroid& m, const RationalMatrix& a) {
  const int k = m.k(), n = m.n();
  if (a.rows() != k || a.cols() != n) throw std::invalid_argument("matrix shape does not match the positroid");
  NonbasisJacobian jac;
  jac.rows = m.nonbases();
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n; ++j) jac.columns.push_back({i, j});
  jac.values = RationalMatrix(static_cast<int>(jac.rows.size()), k * n);

  for (size_t r = 0; r < jac.rows.size(); ++r) {
    std::vector<int> cols = mask_elements(jac.rows[r]);
    for (int pos = 1; pos <= k; ++pos) {
      const int j = cols[pos - 1];
      std::vector<int> rest = cols;
      rest.erase(rest.begin() + (pos - 1));
      for (int i = 1; i <= k; ++i) {
        // Cofactor of entry (i, pos) in A restricted to the columns of I.
        RationalMatrix minor(k - 1, k - 1);
        int mi = 0;
        for (int row = 1; row <= k; ++row) {
          if (row == i) continue;
          for (int c = 0; c < k - 1; ++c) minor.at(mi, c) = a.at(row - 1, rest[c] - 1);
          ++mi;
        }
        Rational d = determinant(minor);
        if ((i + pos) % 2) d = -d;
        jac.values.at(static_cast<int>(r), (i - 1) * n + (j - 1)) = d;
      }
    }
  }
  return jac;
}

RationalMatrix fixed_point_matrix(int n, const KSubset& J) {
  if (J.n() != n) throw std::invalid_argument("subset on the wrong ground set");
  std::vector<int> cols = J.elements();
  RationalMatrix a(static_cast<int>(cols.size()), n);
  for (size_t i = 0; i < cols.size(); ++i) a.at(static_cast<int>(i), cols[i] - 1) = 1;
  return a;
}

int jacobian_rank_oracle(const Positroid& m, const KSubset& J) {
  if (!m.contains(J)) throw DomainError("Jacobian oracle needs a basis");
  NonbasisJacobian jac = nonbasis_jacobian(m, fixed_point_matrix(m.n(), J));
  return rank(jac.values);
}

}  // namespace positroid
