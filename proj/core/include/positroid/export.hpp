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

#ifndef POSITROID_EXPORT_HPP_
#define POSITROID_EXPORT_HPP_

#include <string>
#include <vector>

#include "positroid/decorated.hpp"
#include "positroid/enumeration.hpp"
#include "positroid/positroid.hpp"

namespace positroid {

// Vertices labelled "{i,j,...}"; a digraph when the graph is oriented.
std::string to_dot(const JohnsonGraph& g);

// Points on a circle numbered clockwise from the top, arrowheads at heads.
std::string chord_diagram_svg(const DecoratedPermutation& w, int size = 400);

enum class CensusTable { kS1, kS2, kS3 };

// One line per n, comma separated, k ascending. s1 starts at k = 0,
// s2/s3 at k = 1.
std::string census_row_csv(const Census& c, CensusTable table);
// Rows n = 1..N padded with empty cells to a rectangle, with a header.
std::string census_table_csv(const std::vector<Census>& rows, CensusTable table);

}  // namespace positroid

#endif  // POSITROID_EXPORT_HPP_
