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

// Grounding of function-free clause schemas. Domain closure and unique names
// are implicit: variables range over exactly the declared constants and
// distinct constants yield distinct propositions.

#ifndef CIRC_GROUNDING_H_
#define CIRC_GROUNDING_H_

#include <map>
#include <string>
#include <vector>

#include "circ/core.h"

namespace circ {

// Arguments starting with an uppercase letter are variables.
bool IsVariable(const std::string& term);

struct SchemaLiteral {
  bool positive = true;
  std::string predicate;
  std::vector<std::string> args;
};

struct SchemaClause {
  std::vector<SchemaLiteral> literals;
  // Source position for diagnostics; 0 when unknown.
  int line = 0;
};

struct GroundingSpec {
  std::vector<std::string> constants;
  // Declared arities. Predicates used but not declared get the arity of their
  // first use.
  std::map<std::string, int> predicates;
  std::vector<SchemaClause> clauses;
};

struct GroundClause {
  Clause clause;
  bool tautology = false;
};

struct GroundResult {
  // One entry per substitution, in schema order then substitution order
  // (constants enumerated odometer-style, last variable fastest).
  std::vector<GroundClause> clauses;
  // Every ground atom of every predicate.
  AtomSet vocabulary;
};

// Resolves the arity of every predicate in `spec`, filling in undeclared ones.
// Throws InputError on inconsistent use.
std::map<std::string, int> ResolveArities(const GroundingSpec& spec);

// All ground atoms of `predicate` over `constants`.
std::vector<Atom> GroundAtoms(const std::string& predicate, int arity,
                              const std::vector<std::string>& constants);

GroundResult Ground(const GroundingSpec& spec);

}  // namespace circ

#endif  // CIRC_GROUNDING_H_
