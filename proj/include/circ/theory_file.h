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

// The line-oriented theory format read by the command line tool.
//
//   # comment
//   const tweety, sam.            grounding constants
//   pred bird/1, ab/1.            predicate declarations (optional for 0-ary)
//   minimize ab.                  one directive per tier, first = first
//   vary fly.                     varied atoms
//   fix bird.                     fixed atoms
//   ~bird(X) | ab(X) | fly(X).    clause; uppercase arguments are variables
//   query flies: bird(tweety) -> fly(tweety).
//
// Directive items are ground atoms or predicate names; a predicate name
// stands for all of its ground atoms. Terminating dots are optional. Atoms
// that no directive mentions are fixed, with a warning.

#ifndef CIRC_THEORY_FILE_H_
#define CIRC_THEORY_FILE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "circ/core.h"
#include "circ/formula.h"
#include "circ/grounding.h"

namespace circ {

struct NamedQuery {
  std::string name;
  Formula formula;
  int line = 0;
};

struct TheoryFile {
  GroundingSpec spec;
  std::map<std::string, int> arities;
  Theory theory;
  std::vector<NamedQuery> queries;
  // Directive contents after expansion, before defaulting.
  std::vector<AtomSet> declared_tiers;
  AtomSet declared_varied;
  AtomSet declared_fixed;
  int tautologies = 0;
  std::vector<std::string> warnings;
};

// Throws ParseError (with line and column) or InputError.
TheoryFile ParseTheoryFile(std::string_view text);
TheoryFile LoadTheoryFile(const std::string& path);

// Replaces the minimized tiers with `tiers`, written "ab2 > ab1, ab3": tiers
// separated by '>' in priority order. Atoms moved into a tier leave the
// varied/fixed sets; atoms no longer mentioned default to fixed.
void OverrideTiers(TheoryFile* file, std::string_view tiers);

// Propositional rendering of a theory that parses back to the same theory.
std::string WriteTheoryFile(const Theory& theory);

}  // namespace circ

#endif  // CIRC_THEORY_FILE_H_
