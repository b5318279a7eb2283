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

#include "positroid/json_io.hpp"

#include <stdexcept>
#include <string>

namespace positroid {
namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

Json pair_json(int a, int b) { return Json::array({a, b}); }

std::string tacking_name(Tacking t) { return t == Tacking::kPort ? "port" : "starboard"; }

std::string ae_class_name(AeClass c) {
  switch (c) {
    case AeClass::kGreater: return "AE_gt";
    case AeClass::kFirst: return "AE_1";
    case AeClass::kSecond: return "AE_2";
  }
  return "?";
}

Json row_json(const CensusRow& row, int first_k) {
  Json out = Json::array();
  for (int k = first_k; k < static_cast<int>(row.by_k.size()); ++k) out.push_back(row.by_k[k].str());
  return out;
}

}  // namespace

Json to_json(const Permutation& w) { return w.values(); }

Permutation permutation_from_json(const Json& j) { return Permutation(int_array(j, "permutation")); }

Json to_json(const KSubset& s) { return s.elements(); }

KSubset ksubset_from_json(const Json& j, int n) {
  std::vector<int> e = int_array(j, "subset");
  for (size_t i = 1; i < e.size(); ++i) {
    if (e[i] <= e[i - 1]) throw std::invalid_argument("subset must be strictly increasing");
  }
  return KSubset(n, e);
}

Json to_json(const DecoratedPermutation& w) {
  return Json{{"n", w.n()}, {"w", w.perm().values()}, {"cw", w.cw_points()}, {"ccw", w.ccw_points()}};
}

DecoratedPermutation decorated_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("w")) throw std::invalid_argument("decorated permutation needs \"w\"");
  Permutation w = permutation_from_json(j["w"]);
  if (j.contains("n") && int_field(j, "n") != w.n()) throw std::invalid_argument("\"n\" does not match \"w\"");
  std::vector<int> cw = j.contains("cw") ? int_array(j["cw"], "cw") : std::vector<int>{};
  std::vector<int> ccw = j.contains("ccw") ? int_array(j["ccw"], "ccw") : std::vector<int>{};
  return DecoratedPermutation(std::move(w), cw, ccw);
}

Json to_json(const GrassmannInterval& iv) {
  return Json{{"n", iv.v.n()}, {"k", iv.k}, {"u", iv.u.values()}, {"v", iv.v.values()}};
}

GrassmannInterval interval_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j.contains("k")) {
    throw std::invalid_argument("interval needs \"u\", \"v\" and \"k\"");
  }
  GrassmannInterval iv{permutation_from_json(j["u"]), permutation_from_json(j["v"]), int_field(j, "k")};
  if (iv.u.n() != iv.v.n()) throw std::invalid_argument("u and v differ in size");
  if (iv.k < 0 || iv.k > iv.v.n()) throw std::invalid_argument("k out of range");
  return iv;
}

Json to_json(const GrassmannNecklace& N) {
  Json out = Json::array();
  for (const auto& s : N.sets) out.push_back(to_json(s));
  return out;
}

GrassmannNecklace necklace_from_json(const Json& j) {
  const Json& sets = j.is_object() ? j.at("sets") : j;
  if (!sets.is_array() || sets.empty()) throw std::invalid_argument("necklace must be a nonempty array");
  GrassmannNecklace N;
  N.n = static_cast<int>(sets.size());
  if (j.is_object() && j.contains("n") && int_field(j, "n") != N.n) {
    throw std::invalid_argument("necklace \"n\" does not match its length");
  }
  for (const auto& s : sets) N.sets.push_back(ksubset_from_json(s, N.n));
  N.k = N.sets.front().size();
  for (const auto& s : N.sets) {
    if (s.size() != N.k) throw std::invalid_argument("necklace sets differ in size");
  }
  if (j.is_object() && j.contains("k") && int_field(j, "k") != N.k) {
    throw std::invalid_argument("necklace \"k\" does not match its sets");
  }
  return N;
}

Json to_json(const Positroid& m) {
  Json bases = Json::array();
  for (const auto& b : m.basis_sets()) bases.push_back(to_json(b));
  return Json{{"n", m.n()}, {"k", m.k()}, {"bases", bases}};
}

Positroid positroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bases")) throw std::invalid_argument("positroid needs \"bases\"");
  const int n = int_field(j, "n");
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("n out of range");
  if (!j["bases"].is_array() || j["bases"].empty()) throw std::invalid_argument("bases must be a nonempty array");
  std::vector<KSubset> bases;
  for (const auto& b : j["bases"]) bases.push_back(ksubset_from_json(b, n));
  const int k = j.contains("k") ? int_field(j, "k") : bases.front().size();
  return Positroid(n, k, bases);
}

Json to_json(const RationalMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < a.cols(); ++c) {
      const Rational& q = a.at(i, c);
      // small integers as numbers, everything else as "p/q" strings
      if (denominator(q) == 1 && abs(numerator(q)) <= BigInt(1) << 53) {
        row.push_back(static_cast<long long>(numerator(q)));
      } else {
        row.push_back(rational_to_string(q));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    std::vector<Rational> row;
    for (const auto& x : r) {
      if (x.is_number_integer()) row.emplace_back(x.get<long long>());
      else if (x.is_string()) row.push_back(parse_rational(x.get<std::string>()));
      else throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings");
    }
    rows.push_back(std::move(row));
  }
  return RationalMatrix(rows);
}

Json to_json(const Arc& a) { return pair_json(a.tail, a.head); }

Json to_json(const Alignment& a) {
  return Json{{"port", to_json(a.port)}, {"starboard", to_json(a.starboard)}};
}

Json to_json(const CrossedAlignment& c) {
  return Json{{"port", to_json(c.alignment.port)},
              {"starboard", to_json(c.alignment.starboard)},
              {"crosser", to_json(c.crosser)},
              {"tacking", tacking_name(c.tacking)}};
}

Json to_json(const NoncrossingPartition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) blocks.push_back(to_json(b));
  return blocks;
}

Json to_json(const SifDecomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back(to_json(c));
  return Json{{"blocks", to_json(d.partition)}, {"components", comps}};
}

Json to_json(const AntiExchangePair& p) {
  Json out{{"a", p.a}, {"b", p.b}, {"class", ae_class_name(p.cls)}};
  if (p.witness_r) out["r"] = *p.witness_r;
  return out;
}

Json to_json(const SmoothnessReport& r) {
  Json criteria = Json::object();
  for (const auto& [c, ok] : r.criteria) criteria[criterion_name(c)] = ok;
  Json out{{"verdict", r.smooth ? "smooth" : "singular"},
           {"n", r.n},
           {"k", r.k},
           {"codimension", r.codimension},
           {"criteria", criteria}};
  if (r.crossed_alignment) {
    Json w = to_json(*r.crossed_alignment);
    w["type"] = "crossed_alignment";
    out["witness"] = w;
  } else if (r.irregular_vertex) {
    out["witness"] = Json{{"type", "irregular_vertex"},
                          {"basis", to_json(r.irregular_vertex->basis)},
                          {"degree", r.irregular_vertex->degree},
                          {"expected", r.irregular_vertex->expected}};
  } else if (r.singular_point) {
    out["witness"] = Json{{"type", "singular_point"}, {"basis", to_json(*r.singular_point)}};
  }
  if (r.singular_point) out["singular_point"] = to_json(*r.singular_point);
  if (r.nonuniform_component) out["nonuniform_component"] = to_json(*r.nonuniform_component);
  return out;
}

Json to_json(const NonbasisJacobian& jac) {
  Json rows = Json::array();
  for (Mask m : jac.rows) rows.push_back(mask_elements(m));
  Json cols = Json::array();
  for (const auto& v : jac.columns) cols.push_back(pair_json(v.row, v.col));
  return Json{{"rows", rows}, {"columns", cols}, {"values", to_json(jac.values)}};
}

Json to_json(const BigInt& x) { return x.str(); }

Json to_json(const Census& c) {
  return Json{{"n", c.n},
              {"total", c.total.str()},
              {"s1", row_json(c.s1, 0)},
              {"s2", row_json(c.s2, 1)},
              {"s3", row_json(c.s3, 1)},
              {"q1", row_json(c.s1, 0)},
              {"q2", row_json(c.s2, 0)},
              {"q3", row_json(c.s3, 0)}};
}

}  // namespace positroid
