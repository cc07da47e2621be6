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

// Clause sets as 0-1 inequality systems, plus the blocking constraints the
// enumeration algorithms add after each solution.

#ifndef CIRC_TRANSLATE_H_
#define CIRC_TRANSLATE_H_

#include <map>
#include <vector>

#include "circ/core.h"
#include "circ/ilp.h"

namespace circ {

// Bijection between propositions and the 0-1 variables X_p of a system.
class TrMap {
 public:
  const LinearSystem& system() const { return system_; }
  LinearSystem& system() { return system_; }

  int size() const { return static_cast<int>(atoms_.size()); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool Contains(const Atom& atom) const { return index_.contains(atom); }
  // Throws std::out_of_range for atoms outside the map.
  VarIndex Var(const Atom& atom) const;
  const Atom& AtomOf(VarIndex var) const { return atoms_.at(var); }

  Interpretation ToInterpretation(const Assignment& x) const;
  Assignment ToAssignment(const Interpretation& interp) const;

  // sum_{p in atoms} X_p.
  Objective CountObjective(const AtomSet& atoms) const;

  // Renders with proposition names: "X_ab + X_bird - X_fly <= 1".
  std::string Render(const LinearConstraint& c) const;

 private:
  friend TrMap TrClauses(const std::vector<Clause>& clauses,
                         const AtomSet& vocabulary);
  VarIndex Add(const Atom& atom);

  std::vector<Atom> atoms_;
  std::map<Atom, VarIndex> index_;
  LinearSystem system_;
};

// One row per distinct non-tautological clause:
//   sum X_p - sum X_q >= 1 - |negatives|.
// Variables are numbered by first appearance in the sorted clause list, then
// the remaining vocabulary atoms in name order. Clause atoms outside
// `vocabulary` are added to the map.
TrMap TrClauses(const std::vector<Clause>& clauses, const AtomSet& vocabulary);

// sum_{p in M[P]} X_p <= |M[P]| - 1. Also the per-tier blocking constraint of
// the prioritized algorithm.
LinearConstraint BlockNerode(const Interpretation& m, const AtomSet& minimized,
                             const TrMap& map);

// sum_{p in M[P]} X_p + sum_{q in M[Q]} X_q + sum_{q not in M} (1 - X_q)
//   <= |M[P]| + |Q| - 1, with the constant terms moved to the bound.
// Violated exactly by the N with N[Q] = M[Q] and M[P] a subset of N[P].
LinearConstraint BlockFixed(const Interpretation& m, const AtomSet& minimized,
                            const AtomSet& fixed, const TrMap& map);

}  // namespace circ

#endif  // CIRC_TRANSLATE_H_
