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

#include "positroid/export.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace positroid {
namespace {

const CensusRow& pick(const Census& c, CensusTable t) {
  switch (t) {
    case CensusTable::kS1: return c.s1;
    case CensusTable::kS2: return c.s2;
    case CensusTable::kS3: return c.s3;
  }
  return c.s1;
}

int first_k(CensusTable t) { return t == CensusTable::kS1 ? 0 : 1; }

std::string fmt(double x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << x;
  return os.str();
}

}  // namespace

std::string to_dot(const JohnsonGraph& g) {
  std::ostringstream os;
  const char* edge = g.oriented ? " -> " : " -- ";
  os << (g.oriented ? "digraph" : "graph") << " J {\n";
  for (const auto& v : g.vertices) os << "  \"" << v.to_string() << "\";\n";
  for (const auto& [a, b] : g.edges) {
    os << "  \"" << g.vertices[a].to_string() << "\"" << edge << "\"" << g.vertices[b].to_string() << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::string chord_diagram_svg(const DecoratedPermutation& w, int size) {
  const int n = w.n();
  const double c = size / 2.0, r = size * 0.38;
  auto px = [&](int i) { return c + r * std::cos(2 * std::numbers::pi * (i - 1) / n - std::numbers::pi / 2); };
  auto py = [&](int i) { return c + r * std::sin(2 * std::numbers::pi * (i - 1) / n - std::numbers::pi / 2); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  os << "  <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  os << "  <circle cx=\"" << fmt(c) << "\" cy=\"" << fmt(c) << "\" r=\"" << fmt(r)
     << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  for (int i = 1; i <= n; ++i) {
    if (w.is_fixed(i)) {
      // small loop just inside the boundary; sweep flag follows the orientation
      const double ux = (px(i) - c) / r, uy = (py(i) - c) / r;
      const double lx = px(i) - ux * 14, ly = py(i) - uy * 14;
      const int sweep = w.is_cw_loop(i) ? 1 : 0;
      os << "  <path d=\"M " << fmt(px(i)) << " " << fmt(py(i)) << " A 7 7 0 1 " << sweep << " " << fmt(lx + 0.5)
         << " " << fmt(ly + 0.5) << "\" fill=\"none\" stroke=\"black\" marker-end=\"url(#head)\"/>\n";
    } else {
      os << "  <line x1=\"" << fmt(px(i)) << "\" y1=\"" << fmt(py(i)) << "\" x2=\"" << fmt(px(w(i)))
         << "\" y2=\"" << fmt(py(w(i))) << "\" stroke=\"black\" marker-end=\"url(#head)\"/>\n";
    }
  }
  for (int i = 1; i <= n; ++i) {
    const double lx = c + (px(i) - c) * 1.12, ly = c + (py(i) - c) * 1.12;
    os << "  <text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
       << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\"14\">" << i << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string census_row_csv(const Census& c, CensusTable table) {
  const CensusRow& row = pick(c, table);
  std::string out;
  for (int k = first_k(table); k <= c.n; ++k) {
    if (!out.empty()) out += ',';
    out += row.by_k[k].str();
  }
  return out;
}

std::string census_table_csv(const std::vector<Census>& rows, CensusTable table) {
  if (rows.empty()) return "";
  const int max_n = rows.back().n;
  const int k0 = first_k(table);
  std::string out = "n";
  for (int k = k0; k <= max_n; ++k) out += ",k=" + std::to_string(k);
  out += '\n';
  for (const auto& c : rows) {
    out += std::to_string(c.n);
    const CensusRow& row = pick(c, table);
    for (int k = k0; k <= max_n; ++k) {
      out += ',';
      if (k <= c.n) out += row.by_k[k].str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace positroid
