// Copyright 2026 The circ Authors.
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

#include "circ/cli.h"

#include <CLI11.hpp>
#include <cstdint>
#include <json.hpp>
#include <optional>

#include "circ/circumscribe.h"
#include "circ/core.h"
#include "circ/formula.h"
#include "circ/oracle.h"
#include "circ/theory_file.h"

namespace circ {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string file;
  bool json = false;
  bool trace = false;
  std::string tiers;
};

Json ModelsJson(const ModelSet& models) {
  Json arr = Json::array();
  for (const AtomSet& m : models) {
    Json atoms = Json::array();
    for (const Atom& a : m) atoms.push_back(a);
    arr.push_back(std::move(atoms));
  }
  return arr;
}

Json TraceJson(const CircResult& r) {
  Json arr = Json::array();
  for (const TraceEntry& e : r.trace) arr.push_back(e.step + ": " + e.text);
  return arr;
}

void PrintModels(std::ostream& out, const char* label, const ModelSet& models) {
  out << label << ": " << models.size() << "\n";
  for (const AtomSet& m : models) out << "  " << ToString(m) << "\n";
}

TheoryFile Load(const CommonOptions& opts, std::ostream& err) {
  TheoryFile file = LoadTheoryFile(opts.file);
  if (!opts.tiers.empty()) OverrideTiers(&file, opts.tiers);
  for (const std::string& w : file.warnings) err << "warning: " << w << "\n";
  return file;
}

std::string InferAlgorithm(const Theory& theory) {
  if (theory.policy.tiers.size() > 1) return "prioritized";
  if (!theory.policy.varied.empty()) return "varied";
  return "fixed";
}

CircResult RunAlgorithm(const std::string& algorithm, const Theory& theory,
                        std::ostream& err) {
  if (algorithm == "nerode") {
    if (!theory.policy.fixed.empty()) {
      err << "WARNING: the nerode algorithm is known to be incomplete when "
             "fixed atoms are present; it can miss minimal models (see the "
             "bird/ab/fly counterexample). Use --algorithm fixed or varied.\n";
    }
    return NerodeAlgorithm(theory);
  }
  if (algorithm == "fixed") return MinimalModelsFixed(theory);
  if (algorithm == "varied") return MinimalModelsVaried(theory);
  return MinimalModelsPrioritized(theory);
}

// Models as reported by the oracle, projected for the nerode comparison.
ModelSet OracleModels(const Theory& theory, int cap) {
  return theory.policy.tiers.size() == 1 ? OracleMinimal(theory, cap)
                                         : OraclePrioritized(theory, cap);
}

int CmdModels(const CommonOptions& opts, std::string algorithm,
              std::ostream& out, std::ostream& err) {
  const TheoryFile file = Load(opts, err);
  if (algorithm.empty()) algorithm = InferAlgorithm(file.theory);
  const CircResult r = RunAlgorithm(algorithm, file.theory, err);
  if (opts.json) {
    Json j;
    j["algorithm"] = algorithm;
    j["models"] = ModelsJson(r.models);
    j["iterations"] = r.iterations;
    if (opts.trace) j["trace"] = TraceJson(r);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (opts.trace) out << FormatTrace(r);
  out << "algorithm: " << algorithm << "\n";
  out << "iterations: " << r.iterations << "\n";
  PrintModels(out, algorithm == "nerode" ? "projections" : "models", r.models);
  return kExitOk;
}

int CmdEntail(const CommonOptions& opts, const std::string& query,
              std::ostream& out, std::ostream& err) {
  const TheoryFile file = Load(opts, err);
  std::vector<NamedQuery> queries;
  if (!query.empty()) {
    queries.push_back({"query", ParseFormula(query), 0});
  } else {
    queries = file.queries;
  }
  if (queries.empty()) {
    throw InputError("no --query given and the file declares no queries");
  }
  const bool prioritized = file.theory.policy.tiers.size() > 1;
  Json results = Json::array();
  bool all = true;
  for (const NamedQuery& q : queries) {
    const bool yes = prioritized ? EntailsPrioritized(file.theory, q.formula)
                                 : Entails(file.theory, q.formula);
    all = all && yes;
    if (opts.json) {
      Json j;
      j["name"] = q.name;
      j["query"] = ToString(q.formula);
      j["entailed"] = yes;
      results.push_back(std::move(j));
    } else if (queries.size() == 1 && query.size() > 0) {
      out << (yes ? "yes" : "no") << "\n";
    } else {
      out << q.name << ": " << (yes ? "yes" : "no") << "\n";
    }
  }
  if (opts.json) {
    Json j;
    j["algorithm"] = prioritized ? "prioritized" : "varied";
    j["entailed"] = all;
    j["queries"] = std::move(results);
    out << j.dump(2) << "\n";
  }
  return all ? kExitOk : kExitNegative;
}

int CmdOracle(const CommonOptions& opts, int cap, std::ostream& out,
              std::ostream& err) {
  const TheoryFile file = Load(opts, err);
  const ModelSet models = OracleModels(file.theory, cap);
  const std::int64_t scanned = std::int64_t{1} << file.theory.vocabulary.size();
  if (opts.json) {
    Json j;
    j["algorithm"] = "oracle";
    j["models"] = ModelsJson(models);
    j["iterations"] = scanned;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "algorithm: oracle\n";
  out << "interpretations scanned: " << scanned << "\n";
  PrintModels(out, "models", models);
  return kExitOk;
}

int CmdCompare(const CommonOptions& opts, std::string algorithm, int cap,
               std::ostream& out, std::ostream& err) {
  const TheoryFile file = Load(opts, err);
  if (algorithm.empty()) algorithm = InferAlgorithm(file.theory);
  const CircResult r = RunAlgorithm(algorithm, file.theory, err);
  ModelSet expected = OracleModels(file.theory, cap);
  if (algorithm == "nerode") {
    expected = expected.ProjectAll(file.theory.policy.tiers[0]);
  }
  const bool match = r.models == expected;
  if (opts.json) {
    Json j;
    j["algorithm"] = algorithm;
    j["models"] = ModelsJson(r.models);
    j["oracle_models"] = ModelsJson(expected);
    j["match"] = match;
    j["iterations"] = r.iterations;
    if (opts.trace) j["trace"] = TraceJson(r);
    out << j.dump(2) << "\n";
  } else {
    if (opts.trace) out << FormatTrace(r);
    out << "algorithm: " << algorithm << "\n";
    PrintModels(out, "algorithm models", r.models);
    PrintModels(out, "oracle models", expected);
    out << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? kExitOk : kExitNegative;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Minimal models of propositional circumscription via 0-1 "
               "integer programming",
               "circ"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string algorithm;
  std::string query;
  int cap = kDefaultOracleCap;
  const std::vector<std::string> algorithms = {"nerode", "fixed", "varied",
                                               "prioritized"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "theory file")->required();
    sub->add_flag("--json", common.json, "machine-readable output");
    sub->add_flag("--trace", common.trace, "step-numbered algorithm log");
    sub->add_option("--tiers", common.tiers,
                    "override minimized tiers, e.g. \"ab2 > ab1\"");
  };

  CLI::App* models = app.add_subcommand("models", "list minimal models");
  add_common(models);
  models->add_option("--algorithm", algorithm, "enumeration algorithm")
      ->check(CLI::IsMember(algorithms));

  CLI::App* entail =
      app.add_subcommand("entail", "decide circumscriptive entailment");
  add_common(entail);
  entail->add_option("--query", query,
                     "formula; defaults to the file's named queries");

  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force minimal models");
  add_common(oracle);
  oracle->add_option("--cap", cap, "maximum vocabulary size");

  CLI::App* compare = app.add_subcommand(
      "compare", "check an algorithm against the brute-force oracle");
  add_common(compare);
  compare->add_option("--algorithm", algorithm, "enumeration algorithm")
      ->check(CLI::IsMember(algorithms));
  compare->add_option("--cap", cap, "maximum vocabulary size");

  std::vector<std::string> argv_storage = {"circ"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (models->parsed()) return CmdModels(common, algorithm, out, err);
    if (entail->parsed()) return CmdEntail(common, query, out, err);
    if (oracle->parsed()) return CmdOracle(common, cap, out, err);
    return CmdCompare(common, algorithm, cap, out, err);
  } catch (const ParseError& e) {
    err << "error: " << common.file << ":" << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  }
}

}  // namespace circ
