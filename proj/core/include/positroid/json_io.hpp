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

#ifndef POSITROID_JSON_IO_HPP_
#define POSITROID_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include "positroid/chord_diagram.hpp"
#include "positroid/decorated.hpp"
#include "positroid/enumeration.hpp"
#include "positroid/jacobian.hpp"
#include "positroid/permutation.hpp"
#include "positroid/positroid.hpp"
#include "positroid/rational_matrix.hpp"
#include "positroid/smoothness.hpp"

namespace positroid {

using Json = nlohmann::json;

// Readers throw std::invalid_argument on malformed input.

Json to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

Json to_json(const KSubset& s);
KSubset ksubset_from_json(const Json& j, int n);

// {"n":9, "w":[...], "cw":[6], "ccw":[4]}
Json to_json(const DecoratedPermutation& w);
DecoratedPermutation decorated_from_json(const Json& j);

// {"n":6, "k":2, "u":[...], "v":[...]}
Json to_json(const GrassmannInterval& iv);
GrassmannInterval interval_from_json(const Json& j);

// Array of the n sets. Also reads {"n":..,"k":..,"sets":[...]}.
Json to_json(const GrassmannNecklace& N);
GrassmannNecklace necklace_from_json(const Json& j);

// {"n":6, "k":2, "bases":[[2,4], ...]}
Json to_json(const Positroid& m);
Positroid positroid_from_json(const Json& j);

// Rows of integers or "p/q" strings.
Json to_json(const RationalMatrix& a);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const Arc& a);
Json to_json(const Alignment& a);
Json to_json(const CrossedAlignment& c);
Json to_json(const NoncrossingPartition& p);
Json to_json(const SifDecomposition& d);
Json to_json(const AntiExchangePair& p);
Json to_json(const SmoothnessReport& r);
Json to_json(const NonbasisJacobian& jac);
Json to_json(const BigInt& x);  // decimal string
Json to_json(const Census& c);

}  // namespace positroid

#endif  // POSITROID_JSON_IO_HPP_
