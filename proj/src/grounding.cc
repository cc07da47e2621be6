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

#include "circ/grounding.h"

#include <algorithm>
#include <cctype>

namespace circ {

namespace {

std::string AtLine(int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " : "";
}

}  // namespace

bool IsVariable(const std::string& term) {
  return !term.empty() && std::isupper(static_cast<unsigned char>(term[0]));
}

std::map<std::string, int> ResolveArities(const GroundingSpec& spec) {
  std::map<std::string, int> arities = spec.predicates;
  for (const SchemaClause& clause : spec.clauses) {
    for (const SchemaLiteral& lit : clause.literals) {
      const int arity = static_cast<int>(lit.args.size());
      auto [it, inserted] = arities.emplace(lit.predicate, arity);
      if (!inserted && it->second != arity) {
        throw InputError(AtLine(clause.line) + "predicate '" + lit.predicate +
                         "' used with arity " + std::to_string(arity) +
                         " but has arity " + std::to_string(it->second));
      }
    }
  }
  return arities;
}

std::vector<Atom> GroundAtoms(const std::string& predicate, int arity,
                              const std::vector<std::string>& constants) {
  std::vector<Atom> out;
  if (arity == 0) {
    out.push_back(predicate);
    return out;
  }
  if (constants.empty()) return out;
  std::vector<std::size_t> digits(arity, 0);
  std::vector<std::string> args(arity);
  while (true) {
    for (int i = 0; i < arity; ++i) args[i] = constants[digits[i]];
    out.push_back(FlattenGroundAtom(predicate, args));
    int i = arity - 1;
    while (i >= 0 && ++digits[i] == constants.size()) digits[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

GroundResult Ground(const GroundingSpec& spec) {
  const std::map<std::string, int> arities = ResolveArities(spec);
  const AtomSet constants(spec.constants.begin(), spec.constants.end());

  GroundResult result;
  for (const auto& [pred, arity] : arities) {
    for (Atom& a : GroundAtoms(pred, arity, spec.constants)) {
      result.vocabulary.insert(std::move(a));
    }
  }

  for (const SchemaClause& schema : spec.clauses) {
    std::vector<std::string> vars;
    for (const SchemaLiteral& lit : schema.literals) {
      for (const std::string& arg : lit.args) {
        if (IsVariable(arg)) {
          if (std::find(vars.begin(), vars.end(), arg) == vars.end()) {
            vars.push_back(arg);
          }
        } else if (!constants.contains(arg)) {
          throw InputError(AtLine(schema.line) + "unknown constant '" + arg +
                           "'");
        }
      }
    }
    if (!vars.empty() && spec.constants.empty()) {
      throw InputError(AtLine(schema.line) + "clause has variable '" +
                       vars.front() + "' but no constants are declared");
    }

    std::vector<std::size_t> digits(vars.size(), 0);
    while (true) {
      GroundClause ground;
      for (const SchemaLiteral& lit : schema.literals) {
        std::vector<std::string> args;
        for (const std::string& arg : lit.args) {
          if (IsVariable(arg)) {
            const auto k = std::find(vars.begin(), vars.end(), arg) - vars.begin();
            args.push_back(spec.constants[digits[k]]);
          } else {
            args.push_back(arg);
          }
        }
        Atom atom = FlattenGroundAtom(lit.predicate, args);
        (lit.positive ? ground.clause.positives : ground.clause.negatives)
            .insert(std::move(atom));
      }
      ground.tautology = ground.clause.IsTautology();
      result.clauses.push_back(std::move(ground));

      int i = static_cast<int>(vars.size()) - 1;
      while (i >= 0 && ++digits[i] == spec.constants.size()) digits[i--] = 0;
      if (i < 0) break;
    }
  }
  return result;
}

}  // namespace circ
