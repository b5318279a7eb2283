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

#include "cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "positroid/bruhat.hpp"
#include "positroid/chord_diagram.hpp"
#include "positroid/decorated.hpp"
#include "positroid/enumeration.hpp"
#include "positroid/error.hpp"
#include "positroid/export.hpp"
#include "positroid/json_io.hpp"
#include "positroid/positroid.hpp"
#include "positroid/smoothness.hpp"

namespace positroid::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InputOpts {
  std::string decorated, interval, necklace, positroid, matrix;
  std::string from, file;
};

struct Loaded {
  std::string type;
  std::string text;
};

void add_input(CLI::App* sub, InputOpts& o) {
  sub->add_option("--decorated", o.decorated, "decorated permutation, JSON or e.g. '↺136524'");
  sub->add_option("--interval", o.interval, "Grassmann interval JSON");
  sub->add_option("--necklace", o.necklace, "Grassmann necklace JSON");
  sub->add_option("--positroid", o.positroid, "positroid JSON");
  sub->add_option("--matrix", o.matrix, "matrix JSON (rows of integers or \"p/q\")");
  sub->add_option("--from", o.from, "input type when reading --file or stdin")
      ->check(CLI::IsMember({"decorated", "interval", "necklace", "positroid", "matrix"}));
  sub->add_option("--file", o.file, "input file, '-' for stdin");
}

Loaded load(const InputOpts& o, std::istream& in) {
  std::vector<Loaded> given;
  if (!o.decorated.empty()) given.push_back({"decorated", o.decorated});
  if (!o.interval.empty()) given.push_back({"interval", o.interval});
  if (!o.necklace.empty()) given.push_back({"necklace", o.necklace});
  if (!o.positroid.empty()) given.push_back({"positroid", o.positroid});
  if (!o.matrix.empty()) given.push_back({"matrix", o.matrix});
  if (!o.from.empty()) {
    std::string text;
    if (o.file.empty() || o.file == "-") {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream f(o.file);
      if (!f) throw UsageError("cannot read " + o.file);
      text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    given.push_back({o.from, text});
  } else if (!o.file.empty()) {
    throw UsageError("--file needs --from TYPE");
  }
  if (given.size() != 1) throw UsageError("give exactly one input source");
  return given.front();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

DecoratedPermutation decorated_from_text(const std::string& text) {
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  size_t start = t.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw UsageError("empty input");
  t = t.substr(start);
  if (t[0] == '{') return decorated_from_json(parse_json(t));
  return DecoratedPermutation::parse(t);
}

DecoratedPermutation as_decorated(const Loaded& in) {
  if (in.type == "decorated") return decorated_from_text(in.text);
  if (in.type == "interval") return from_grassmann_interval(interval_from_json(parse_json(in.text)));
  if (in.type == "necklace") return from_necklace(necklace_from_json(parse_json(in.text)));
  if (in.type == "positroid") return decorated_from_positroid(positroid_from_json(parse_json(in.text)));
  return decorated_from_positroid(positroid_from_matrix(matrix_from_json(parse_json(in.text))).matroid);
}

Positroid as_positroid(const Loaded& in) {
  if (in.type == "positroid") return positroid_from_json(parse_json(in.text));
  if (in.type == "matrix") return positroid_from_matrix(matrix_from_json(parse_json(in.text))).matroid;
  return positroid_from_decorated(as_decorated(in));
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
      use_file_ = true;
    }
  }
  std::ostream& stream() { return use_file_ ? file_ : fallback_; }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
  bool use_file_ = false;
};

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

CensusTable table_of(const std::string& name) {
  if (name == "s2") return CensusTable::kS2;
  if (name == "s3") return CensusTable::kS3;
  return CensusTable::kS1;
}

Json brute_json(const BruteForceCensus& b) {
  return Json{{"n", b.n}, {"iterated", b.iterated}, {"s1", b.s1},
              {"s2", std::vector<std::uint64_t>(b.s2.begin() + 1, b.s2.end())}};
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positroids, decorated permutations and smooth positroid varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  bool pretty = false;
  app.add_option("-o,--output", output, "write to this file instead of stdout");
  app.add_flag("--pretty", pretty, "indented JSON");

  InputOpts conv_in, an_in, sm_in, jo_in, tr_in;

  auto* convert = app.add_subcommand("convert", "convert between index objects");
  add_input(convert, conv_in);
  std::string to = "decorated";
  convert->add_option("--to", to, "target representation")
      ->check(CLI::IsMember({"decorated", "interval", "necklace", "positroid", "matrix"}));

  auto* analyze = app.add_subcommand("analyze", "alignments, crossed alignments, codimension, SIF decomposition");
  add_input(analyze, an_in);
  std::string svg;
  analyze->add_option("--svg", svg, "also write the chord diagram as SVG");

  auto* smooth = app.add_subcommand("smooth", "decide smoothness with every criterion");
  add_input(smooth, sm_in);
  bool include_c2 = false, allow_factorial = false, list_singular = false;
  smooth->add_flag("--include-c2", include_c2, "also check the interval criterion (n <= 8)");
  smooth->add_flag("--allow-factorial", allow_factorial, "permit Bruhat interval enumeration");
  smooth->add_flag("--singular-points", list_singular, "list every singular T-fixed basis");

  auto* johnson = app.add_subcommand("johnson", "Johnson graph of the bases as DOT");
  add_input(johnson, jo_in);
  bool oriented = false;
  johnson->add_flag("--oriented", oriented, "orient edges by the Gale rule");

  auto* trans = app.add_subcommand("transform", "rigid transformations and matroid operations");
  add_input(trans, tr_in);
  std::string op;
  int shift = 0;
  trans->add_option("--op", op, "operation")
      ->required()
      ->check(CLI::IsMember({"reverse", "reflect", "rotate", "dual", "shift", "reversal"}));
  trans->add_option("-s,--by", shift, "amount for rotate / shift");

  auto* cen = app.add_subcommand("census", "smooth positroid counts");
  int cen_n = 0;
  bool through = false, brute = false;
  std::string table = "s1", format = "csv";
  cen->add_option("--n", cen_n, "ground set size")->required()->check(CLI::PositiveNumber);
  cen->add_flag("--through", through, "rows 1..n instead of row n");
  cen->add_option("--table", table, "s1, s2, s3 or total")->check(CLI::IsMember({"s1", "s2", "s3", "total"}));
  cen->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cen->add_flag("--brute-force", brute, "classify every decorated permutation instead (n <= 9)");

  auto* rat = app.add_subcommand("ratio", "growth ratios s(n+1)/s(n)");
  std::vector<int> rat_n;
  int digits = 8;
  std::string rat_format = "csv";
  rat->add_option("--n", rat_n, "one or more n")->required()->check(CLI::PositiveNumber);
  rat->add_option("--digits", digits, "significant digits")->check(CLI::Range(1, 1000));
  rat->add_option("--format", rat_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*convert) {
      DecoratedPermutation w = as_decorated(load(conv_in, in));
      Json j;
      if (to == "decorated") j = to_json(w);
      else if (to == "interval") j = to_json(to_grassmann_interval(w));
      else if (to == "necklace") j = to_json(grassmann_necklace(w));
      else if (to == "matrix") j = to_json(tnn_matrix(w));
      else j = to_json(positroid_from_decorated(w));
      Output(output, out).stream() << dump(j, pretty) << "\n";
    } else if (*analyze) {
      Loaded src = load(an_in, in);
      DecoratedPermutation w = as_decorated(src);
      Json al = Json::array(), ca = Json::array();
      for (const auto& a : alignments(w)) al.push_back(to_json(a));
      for (const auto& c : crossed_alignments(w)) ca.push_back(to_json(c));
      Json j{{"decorated", to_json(w)},
             {"notation", w.to_string()},
             {"n", w.n()},
             {"k", w.k()},
             {"interval", to_json(to_grassmann_interval(w))},
             {"necklace", to_json(grassmann_necklace(w))},
             {"alignments", al},
             {"crossed_alignments", ca},
             {"codimension", codimension(w)},
             {"sif", to_json(sif_decomposition(w))}};
      auto m = spirograph_shift(w);
      j["spirograph_shift"] = m ? Json(*m) : Json(nullptr);
      if (src.type == "matrix") {
        j["tnn"] = positroid_from_matrix(matrix_from_json(parse_json(src.text))).tnn;
      }
      if (!svg.empty()) {
        std::ofstream f(svg);
        if (!f) throw UsageError("cannot write " + svg);
        f << chord_diagram_svg(w);
      }
      Output(output, out).stream() << dump(j, pretty) << "\n";
    } else if (*smooth) {
      if (include_c2 && !allow_factorial) throw UsageError("--include-c2 needs --allow-factorial");
      DecoratedPermutation w = as_decorated(load(sm_in, in));
      Json j = to_json(smoothness_report(w, include_c2));
      if (list_singular) {
        Json pts = Json::array();
        for (const auto& s : singular_tfixed_points(positroid_from_decorated(w))) pts.push_back(to_json(s));
        j["singular_points"] = pts;
      }
      Output(output, out).stream() << dump(j, pretty) << "\n";
    } else if (*johnson) {
      Output(output, out).stream() << to_dot(johnson_graph(as_positroid(load(jo_in, in)), oriented));
    } else if (*trans) {
      Loaded src = load(tr_in, in);
      Json j;
      if (op == "reverse" || op == "reflect" || op == "rotate") {
        Transform t = op == "reverse" ? Transform(ReverseArcs{})
                      : op == "reflect" ? Transform(Reflect{})
                                        : Transform(Rotate{shift});
        j = to_json(transform(as_decorated(src), t));
      } else {
        Positroid m = as_positroid(src);
        if (op == "dual") j = to_json(dual(m));
        else if (op == "shift") j = to_json(cyclic_shift(m, shift));
        else j = to_json(ground_reversal(m));
      }
      Output(output, out).stream() << dump(j, pretty) << "\n";
    } else if (*cen) {
      Output sink(output, out);
      std::ostream& os = sink.stream();
      if (brute) {
        if (table == "s3") throw UsageError("brute force gives s1 and s2 only");
        std::vector<BruteForceCensus> rows;
        for (int n = through ? 1 : cen_n; n <= cen_n; ++n) rows.push_back(brute_force_census(n));
        if (format == "json") {
          Json j = Json::array();
          for (const auto& b : rows) j.push_back(brute_json(b));
          os << dump(through ? j : j.front(), pretty) << "\n";
        } else {
          for (const auto& b : rows) {
            std::string line;
            if (table == "total") {
              std::uint64_t t = 0;
              for (auto x : b.s1) t += x;
              line = std::to_string(t);
            } else {
              const auto& v = table == "s1" ? b.s1 : b.s2;
              for (size_t k = table == "s1" ? 0 : 1; k < v.size(); ++k) {
                if (!line.empty()) line += ',';
                line += std::to_string(v[k]);
              }
            }
            os << (through ? std::to_string(b.n) + "," : "") << line << "\n";
          }
        }
      } else {
        std::vector<Census> rows = census_through(cen_n);
        if (!through) rows.erase(rows.begin(), rows.end() - 1);
        if (format == "json") {
          Json j = Json::array();
          for (const auto& c : rows) j.push_back(to_json(c));
          os << dump(through ? j : j.front(), pretty) << "\n";
        } else if (table == "total") {
          for (const auto& c : rows) os << (through ? std::to_string(c.n) + "," : "") << c.total.str() << "\n";
        } else if (through) {
          os << census_table_csv(rows, table_of(table));
        } else {
          os << census_row_csv(rows.front(), table_of(table)) << "\n";
        }
      }
    } else if (*rat) {
      Output sink(output, out);
      std::ostream& os = sink.stream();
      Json j = Json::array();
      for (int n : rat_n) {
        std::string r = growth_ratio(n, digits);
        if (rat_format == "json") j.push_back(Json{{"n", n}, {"ratio", r}});
        else if (rat_n.size() == 1) os << r << "\n";
        else os << n << "," << r << "\n";
      }
      if (rat_format == "json") os << dump(j, pretty) << "\n";
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace positroid::cli
