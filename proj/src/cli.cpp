// Copyright 2026 The posetop Authors
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

#include "posetop/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetop/compose.hpp"
#include "posetop/duality.hpp"
#include "posetop/enumerate.hpp"
#include "posetop/io.hpp"
#include "posetop/operad.hpp"
#include "posetop/pascal.hpp"
#include "posetop/structure.hpp"

namespace posetop {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool json_output = false;
  std::string output_path;
  std::string op = "square";
  int index = 0;
  int max_n = 3;
  long random_trials = 0;
  std::uint64_t seed = 0;
  std::string alpha;
  int order = 0;
  bool list_classes = false;
  std::string filter = "all";
  std::string format = "pm";
  std::vector<std::string> files;
};

json matrix_json(const BitMatrix& m) {
  return {{"n", m.rows()}, {"rows", m.row_strings()}};
}

json matrix_json(const PosetMatrix& a) { return matrix_json(a.matrix()); }

json indices_json(const IndexSet& s) {
  return json(std::vector<int>(s.begin(), s.end()));
}

PosetMatrix load_poset(const std::string& path) {
  return validate(parse_matrix_file(path));
}

IndexSet parse_alpha(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      return IndexSet::range(std::stoi(text.substr(0, dots)),
                             std::stoi(text.substr(dots + 2)));
    }
    std::vector<int> indices;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) indices.push_back(std::stoi(item));
    return IndexSet(std::move(indices));
  } catch (const std::logic_error&) {
    throw UsageError("cannot parse index set '" + text +
                     "'; use a range such as 1..3 or a list such as 1,2,3");
  }
}

ClassFilter parse_filter(const std::string& text) {
  if (text == "all") return ClassFilter::All;
  if (text == "connected") return ClassFilter::Connected;
  if (text == "disconnected") return ClassFilter::Disconnected;
  throw UsageError("unknown filter '" + text + "'");
}

CompositionKind parse_kind(const std::string& text) {
  try {
    return CompositionKind::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<std::pair<int, int>> first_difference(const PosetMatrix& x,
                                                    const PosetMatrix& y) {
  if (x.order() != y.order()) return std::nullopt;
  for (int r = 1; r <= x.order(); ++r) {
    for (int c = 1; c <= x.order(); ++c) {
      if (x.get(r, c) != y.get(r, c)) return std::pair(r, c);
    }
  }
  return std::nullopt;
}

json report_json(const LawReport& report) {
  json out = {{"law", law_name(report.law)},
              {"kind", report.kind.name()},
              {"verdict", report.passed ? "pass" : "fail"},
              {"cases_checked", report.cases_checked},
              {"cases_skipped", report.cases_skipped},
              {"failures", report.failures},
              {"witness", nullptr}};
  if (report.witness) {
    const LawWitness& w = *report.witness;
    json witness = {{"A", matrix_json(w.a)},
                    {"i", w.i},
                    {"left", matrix_json(w.left)},
                    {"right", matrix_json(w.right)}};
    if (w.b) witness["B"] = matrix_json(*w.b);
    if (w.c) witness["C"] = matrix_json(*w.c);
    if (report.law != Law::Unit) witness["j"] = w.j;
    if (const auto diff = first_difference(w.left, w.right)) {
      witness["first_difference"] = {diff->first, diff->second};
    }
    out["witness"] = witness;
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& options, std::ostream& out)
      : opt_(options), out_(out) {}

  // Writes a primary result to -o when given, else to standard output.
  void emit(const std::string& text) {
    if (opt_.output_path.empty()) {
      out_ << text;
    } else {
      write_text_file(opt_.output_path, text);
    }
  }

  void emit_matrix(const PosetMatrix& a) {
    emit(opt_.json_output ? matrix_json(a).dump() + "\n" : emit_pm(a));
  }

  int check() {
    const BitMatrix raw = parse_matrix_file(opt_.files.at(0));
    const auto violation = find_violation(raw);
    if (violation) {
      if (opt_.json_output) {
        out_ << json{{"valid", false},
                     {"n", raw.rows()},
                     {"violation", violation->to_string()}}
                    .dump()
             << "\n";
      } else {
        out_ << "invalid: " << violation->to_string() << "\n";
      }
      return kExitDomainError;
    }
    const bool connected = is_connected(unchecked_poset(raw));
    if (opt_.json_output) {
      out_ << json{{"valid", true}, {"n", raw.rows()}, {"connected", connected}}
                  .dump()
           << "\n";
    } else {
      out_ << "valid poset matrix ("
           << (connected ? "connected" : "disconnected") << ")\n";
    }
    return kExitOk;
  }

  int compose_cmd() {
    const CompositionKind kind = parse_kind(opt_.op);
    const PosetMatrix a = load_poset(opt_.files.at(0));
    const PosetMatrix b = load_poset(opt_.files.at(1));
    emit_matrix(compose(kind, a, opt_.index, b));
    return kExitOk;
  }

  int laws() {
    const CompositionKind kind = parse_kind(opt_.op);
    const LawSearch search =
        opt_.random_trials > 0
            ? LawSearch::random(opt_.seed, opt_.random_trials)
            : LawSearch::exhaustive();
    const auto reports = verify_laws(kind, opt_.max_n, search);
    json out = json::array();
    bool all_pass = true;
    for (const auto& report : reports) {
      out.push_back(report_json(report));
      all_pass = all_pass && report.passed;
    }
    emit(out.dump(2) + "\n");
    return all_pass ? kExitOk : kExitDomainError;
  }

  int dual_cmd() {
    emit_matrix(dual(load_poset(opt_.files.at(0))));
    return kExitOk;
  }

  int selfdual() {
    const bool yes = is_self_dual(load_poset(opt_.files.at(0)));
    if (opt_.json_output) {
      out_ << json{{"self_dual", yes}}.dump() << "\n";
    } else {
      out_ << (yes ? "self-dual" : "not self-dual") << "\n";
    }
    return yes ? kExitOk : kExitDomainError;
  }

  int semiequidual() {
    const auto witness = semi_equidual(load_poset(opt_.files.at(0)),
                                       load_poset(opt_.files.at(1)));
    const json out =
        witness ? json{{"alpha", indices_json(witness->alpha)}} : json(nullptr);
    emit(out.dump() + "\n");
    return witness ? kExitOk : kExitDomainError;
  }

  int classify() {
    const ConnectivityClass cls =
        classify_connectivity(load_poset(opt_.files.at(0)));
    if (opt_.json_output) {
      json out = {{"connected", cls.connected}, {"witness", nullptr}};
      if (!cls.connected) out["witness"] = indices_json(cls.witness);
      out_ << out.dump() << "\n";
    } else if (cls.connected) {
      out_ << "connected\n";
    } else {
      out_ << "disconnected, isolated block " << cls.witness.to_string()
           << "\n";
    }
    return kExitOk;
  }

  int factor_cmd() {
    const CompositionKind kind = parse_kind(opt_.op);
    const auto found = factor(load_poset(opt_.files.at(0)), kind);
    if (opt_.json_output) {
      json out = json::array();
      for (const auto& f : found) {
        out.push_back({{"A", matrix_json(f.a)},
                       {"i", f.i},
                       {"B", matrix_json(f.b)},
                       {"kind", f.kind.name()}});
      }
      emit(out.dump(2) + "\n");
    } else {
      std::ostringstream text;
      text << found.size() << " factorization"
           << (found.size() == 1 ? "" : "s") << " under " << kind.name()
           << "\n";
      for (const auto& f : found) {
        text << "A = " << f.a.to_string() << "  i = " << f.i
             << "  B = " << f.b.to_string() << "\n";
      }
      emit(text.str());
    }
    return kExitOk;
  }

  int invariance() {
    const IndexSet alpha = parse_alpha(opt_.alpha);
    const bool same = insertion_invariance_class(
        load_poset(opt_.files.at(0)), alpha, load_poset(opt_.files.at(1)));
    if (opt_.json_output) {
      out_ << json{{"alpha", indices_json(alpha)}, {"identical", same}}.dump()
           << "\n";
    } else {
      out_ << (same ? "identical outputs over " : "outputs differ over ")
           << alpha.to_string() << "\n";
    }
    return same ? kExitOk : kExitDomainError;
  }

  int enumerate_cmd() {
    if (opt_.format != "pm" && opt_.format != "json") {
      throw UsageError("unknown format '" + opt_.format + "'");
    }
    const ClassFilter filter = parse_filter(opt_.filter);
    std::vector<PosetMatrix> matrices;
    std::vector<IsoClass> iso;
    if (opt_.list_classes) {
      iso = classes(opt_.order, filter);
      for (const auto& c : iso) matrices.push_back(c.canonical);
    } else {
      for (auto& a : generate_all(opt_.order)) {
        const bool connected = is_connected(a);
        if ((filter == ClassFilter::Connected && !connected) ||
            (filter == ClassFilter::Disconnected && connected)) {
          continue;
        }
        matrices.push_back(std::move(a));
      }
    }
    std::string body;
    if (opt_.format == "json") {
      json list = json::array();
      for (std::size_t p = 0; p < matrices.size(); ++p) {
        json item = matrix_json(matrices[p]);
        if (opt_.list_classes) {
          item["labeled_count"] = iso[p].labeled_count;
          item["connected"] = iso[p].connected;
        }
        list.push_back(item);
      }
      body = list.dump() + "\n";
    } else {
      for (std::size_t p = 0; p < matrices.size(); ++p) {
        if (p > 0) body += "\n";
        body += emit_pm(matrices[p]);
      }
    }
    const long connected = std::count_if(
        matrices.begin(), matrices.end(),
        [](const PosetMatrix& a) { return is_connected(a); });
    const long total = static_cast<long>(matrices.size());
    const char* noun = opt_.list_classes ? "classes" : "matrices";
    if (opt_.json_output) {
      json summary = {{"n", opt_.order},
                      {"count", total},
                      {"connected", connected},
                      {"disconnected", total - connected}};
      out_ << summary.dump() << "\n";
    } else {
      out_ << "order " << opt_.order << ": " << total << " " << noun << " ("
           << connected << " connected, " << total - connected
           << " disconnected)\n";
    }
    if (opt_.output_path.empty()) {
      out_ << body;
    } else {
      write_text_file(opt_.output_path, body);
    }
    return kExitOk;
  }

  int pascal() {
    emit_matrix(pascal_matrix(opt_.order));
    return kExitOk;
  }

  int hasse() {
    emit(hasse_dot(load_poset(opt_.files.at(0))));
    return kExitOk;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json_output, "Machine-readable JSON output");
  cmd->add_option("-o,--output", opt.output_path, "Write the result to a file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"Poset matrices and their partial compositions", "posetop"};
  app.require_subcommand(1, 1);

  auto* check =
      app.add_subcommand("check", "Validate a matrix file as a poset matrix");
  check->add_option("file", opt.files, "Matrix file")->required()->expected(1);

  auto* compose_cmd = app.add_subcommand("compose", "Compose A o_i B");
  compose_cmd->add_option("--op", opt.op, "square|min|max|minmax|boxed:UAV");
  compose_cmd->add_option("--i", opt.index, "Insertion position")->required();
  compose_cmd->add_option("files", opt.files, "A.pm B.pm")
      ->required()
      ->expected(2);

  auto* laws = app.add_subcommand("laws", "Check the operad axioms");
  laws->add_option("--op", opt.op, "Composition kind");
  laws->add_option("--max-n", opt.max_n, "Largest operand order");
  laws->add_option("--random", opt.random_trials,
                   "Number of random trials instead of exhaustive search");
  laws->add_option("--seed", opt.seed, "Seed for random trials");

  auto* dual_cmd = app.add_subcommand("dual", "Flip-transpose dual");
  dual_cmd->add_option("file", opt.files)->required()->expected(1);

  auto* selfdual = app.add_subcommand("selfdual", "Test self-duality");
  selfdual->add_option("file", opt.files)->required()->expected(1);

  auto* semi =
      app.add_subcommand("semiequidual", "Find a semi-equidual block");
  semi->add_option("files", opt.files, "A.pm B.pm")->required()->expected(2);

  auto* classify = app.add_subcommand("classify", "Connected or disconnected");
  classify->add_option("file", opt.files)->required()->expected(1);

  auto* factor_cmd = app.add_subcommand("factor", "Factor C as A o_i B");
  factor_cmd->add_option("--op", opt.op, "Composition kind");
  factor_cmd->add_option("file", opt.files)->required()->expected(1);

  auto* invariance =
      app.add_subcommand("invariance", "Compare A sq_i B over i in alpha");
  invariance->add_option("--alpha", opt.alpha, "Range such as 1..3")
      ->required();
  invariance->add_option("files", opt.files, "A.pm B.pm")
      ->required()
      ->expected(2);

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List all poset matrices of an order");
  enumerate_cmd->add_option("--n", opt.order, "Order")->required();
  enumerate_cmd->add_flag("--classes", opt.list_classes,
                          "One canonical matrix per permutation class");
  enumerate_cmd->add_option("--filter", opt.filter,
                            "all|connected|disconnected");
  enumerate_cmd->add_option("--format", opt.format, "pm|json");

  auto* pascal = app.add_subcommand("pascal", "Binary Pascal matrix");
  pascal->add_option("--n", opt.order, "Order")->required();

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram as DOT");
  hasse->add_option("file", opt.files)->required()->expected(1);

  for (auto* cmd : {check, compose_cmd, laws, dual_cmd, selfdual, semi,
                    classify, factor_cmd, invariance, enumerate_cmd, pascal,
                    hasse}) {
    add_common(cmd, opt);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner runner(opt, out);
  try {
    if (check->parsed()) return runner.check();
    if (compose_cmd->parsed()) return runner.compose_cmd();
    if (laws->parsed()) return runner.laws();
    if (dual_cmd->parsed()) return runner.dual_cmd();
    if (selfdual->parsed()) return runner.selfdual();
    if (semi->parsed()) return runner.semiequidual();
    if (classify->parsed()) return runner.classify();
    if (factor_cmd->parsed()) return runner.factor_cmd();
    if (invariance->parsed()) return runner.invariance();
    if (enumerate_cmd->parsed()) return runner.enumerate_cmd();
    if (pascal->parsed()) return runner.pascal();
    if (hasse->parsed()) return runner.hasse();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexOutOfRange& e) {
    err << "index out of range: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace posetop
