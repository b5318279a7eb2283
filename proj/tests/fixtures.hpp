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

#ifndef POSITROID_TESTS_FIXTURES_HPP_
#define POSITROID_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

namespace positroid::testing {

// Smooth positroid varieties in Gr(k, n), rows n = 1..10, k = 0..n.
inline const std::vector<std::vector<std::string>> kTableS1 = {
    {"1", "1"},
    {"1", "3", "1"},
    {"1", "7", "7", "1"},
    {"1", "15", "29", "15", "1"},
    {"1", "31", "96", "96", "31", "1"},
    {"1", "63", "282", "440", "282", "63", "1"},
    {"1", "127", "771", "1688", "1688", "771", "127", "1"},
    {"1", "255", "2011", "5803", "8089", "5803", "2011", "255", "1"},
    {"1", "511", "5074", "18520", "33721", "33721", "18520", "5074", "511", "1"},
    {"1", "1023", "12488", "55998", "127698", "166325", "127698", "55998", "12488", "1023", "1"},
};

// Smooth positroids with k SIF components, rows n = 1..10, k = 1..n.
inline const std::vector<std::vector<std::string>> kTableS2 = {
    {"2"},
    {"1", "4"},
    {"2", "6", "8"},
    {"3", "18", "24", "16"},
    {"4", "40", "100", "80", "32"},
    {"5", "78", "305", "440", "240", "64"},
    {"6", "140", "798", "1750", "1680", "672", "128"},
    {"7", "236", "1876", "5838", "8400", "5824", "1792", "256"},
    {"8", "378", "4056", "17136", "34524", "35616", "18816", "4608", "512"},
    {"9", "580", "8190", "45480", "122682", "175896", "137760", "57600", "11520", "1024"},
};

// s(1), ..., s(9) as listed with the generating function.
inline const std::vector<std::string> kSmoothCounts = {"2",    "5",     "16",    "61",    "256",
                                                       "1132", "5174", "24229", "115654"};

struct RatioCase {
  int n;
  int digits;
  std::string printed;
};

inline const std::vector<RatioCase> kPrintedRatios = {
    {50, 8, "5.4489775"}, {100, 7, "5.528236"}, {150, 7, "5.555362"},
    {200, 7, "5.569062"}, {250, 8, "5.5773263"},
};

// Alignments of the nine-point running example.
inline const std::vector<std::pair<int, int>> kExampleAlignments = {
    {3, 1}, {3, 2}, {3, 6}, {4, 1}, {4, 2}, {4, 3}, {4, 6},
    {5, 1}, {5, 2}, {7, 6}, {8, 6}, {9, 6}, {9, 8}};

}  // namespace positroid::testing

#endif  // POSITROID_TESTS_FIXTURES_HPP_
