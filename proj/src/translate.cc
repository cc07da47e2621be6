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

#include "circ/translate.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace circ {

VarIndex TrMap::Var(const Atom& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) {
    throw std::out_of_range("no variable for atom '" + atom + "'");
  }
  return it->second;
}

VarIndex TrMap::Add(const Atom& atom) {
  auto [it, inserted] = index_.emplace(atom, size());
  if (inserted) {
    atoms_.push_back(atom);
    system_.AddVar("X_" + atom);
  }
  return it->second;
}

Interpretation TrMap::ToInterpretation(const Assignment& x) const {
  AtomSet atoms;
  for (int i = 0; i < size(); ++i) {
    if (x.at(i)) atoms.insert(atoms_[i]);
  }
  return Interpretation(std::move(atoms));
}

Assignment TrMap::ToAssignment(const Interpretation& interp) const {
  Assignment x(size(), 0);
  for (const Atom& a : interp.atoms()) x[Var(a)] = 1;
  return x;
}

Objective TrMap::CountObjective(const AtomSet& atoms) const {
  Objective obj;
  for (const Atom& a : atoms) obj.terms.push_back({1, Var(a)});
  return obj;
}

std::string TrMap::Render(const LinearConstraint& c) const {
  std::string out;
  for (const Term& t : c.terms()) {
    const std::string name = "X_" + AtomOf(t.var);
    if (out.empty()) {
      if (t.coeff == -1) {
        out += "-";
      } else if (t.coeff != 1) {
        out += std::to_string(t.coeff);
      }
    } else {
      out += t.coeff < 0 ? " - " : " + ";
      if (std::abs(t.coeff) != 1) out += std::to_string(std::abs(t.coeff));
    }
    out += name;
  }
  if (out.empty()) out = "0";
  out += c.sense() == Sense::kGreaterEqual ? " >= " : " <= ";
  return out + std::to_string(c.bound());
}

TrMap TrClauses(const std::vector<Clause>& clauses, const AtomSet& vocabulary) {
  // Canonical order: deduplicated and sorted, independent of input order.
  const std::set<Clause> canonical(clauses.begin(), clauses.end());

  TrMap map;
  for (const Clause& c : canonical) {
    for (const Atom& a : c.negatives) map.Add(a);
    for (const Atom& a : c.positives) map.Add(a);
  }
  for (const Atom& a : vocabulary) map.Add(a);

  for (const Clause& c : canonical) {
    if (c.IsTautology()) continue;
    std::vector<Term> terms;
    for (const Atom& p : c.positives) terms.push_back({1, map.Var(p)});
    for (const Atom& q : c.negatives) terms.push_back({-1, map.Var(q)});
    map.system().Add(LinearConstraint::AtLeast(
        std::move(terms), 1 - static_cast<std::int64_t>(c.negatives.size())));
  }
  return map;
}

LinearConstraint BlockNerode(const Interpretation& m, const AtomSet& minimized,
                             const TrMap& map) {
  const AtomSet on = Project(m, minimized);
  std::vector<Term> terms;
  for (const Atom& p : on) terms.push_back({1, map.Var(p)});
  return LinearConstraint::AtMost(std::move(terms),
                                  static_cast<std::int64_t>(on.size()) - 1);
}

LinearConstraint BlockFixed(const Interpretation& m, const AtomSet& minimized,
                            const AtomSet& fixed, const TrMap& map) {
  const AtomSet on_p = Project(m, minimized);
  const AtomSet on_q = Project(m, fixed);
  const AtomSet off_q = CoProject(m, fixed);
  std::vector<Term> terms;
  for (const Atom& p : on_p) terms.push_back({1, map.Var(p)});
  for (const Atom& q : on_q) terms.push_back({1, map.Var(q)});
  for (const Atom& q : off_q) terms.push_back({-1, map.Var(q)});
  const auto bound = static_cast<std::int64_t>(on_p.size() + fixed.size()) -
                     1 - static_cast<std::int64_t>(off_q.size());
  return LinearConstraint::AtMost(std::move(terms), bound);
}

}  // namespace circ
