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

#include "circ/oracle.h"

#include <cstdint>
#include <vector>

namespace circ {

namespace {

void CheckCap(const AtomSet& vocabulary, int cap) {
  if (static_cast<int>(vocabulary.size()) > cap) {
    throw ResourceError("oracle cap exceeded: " +
                        std::to_string(vocabulary.size()) +
                        " propositions, cap is " + std::to_string(cap));
  }
}

std::vector<Interpretation> ModelList(const std::set<Clause>& clauses,
                                      const AtomSet& vocabulary) {
  const std::vector<Atom> atoms(vocabulary.begin(), vocabulary.end());
  const std::uint64_t count = std::uint64_t{1} << atoms.size();
  std::vector<Interpretation> out;
  // Plain binary counter over the sorted vocabulary.
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    AtomSet true_atoms;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (bits >> i & 1) true_atoms.insert(atoms[i]);
    }
    bool model = true;
    for (const Clause& c : clauses) {
      if (!c.SatisfiedBy(true_atoms)) {
        model = false;
        break;
      }
    }
    if (model) out.emplace_back(std::move(true_atoms));
  }
  return out;
}

template <typename StrictlyBelow>
ModelSet Minimal(const Theory& theory, int cap, StrictlyBelow below) {
  CheckCap(theory.vocabulary, cap);
  const std::vector<Interpretation> models =
      ModelList(theory.clauses, theory.vocabulary);
  ModelSet out;
  for (const Interpretation& m : models) {
    bool minimal = true;
    for (const Interpretation& other : models) {
      if (below(other, m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.Insert(m);
  }
  return out;
}

}  // namespace

ModelSet AllModels(const std::set<Clause>& clauses, const AtomSet& vocabulary,
                   int cap) {
  CheckCap(vocabulary, cap);
  ModelSet out;
  for (const Interpretation& m : ModelList(clauses, vocabulary)) out.Insert(m);
  return out;
}

ModelSet OracleMinimal(const Theory& theory, int cap) {
  theory.Validate();
  return Minimal(theory, cap,
                 [&](const Interpretation& a, const Interpretation& b) {
                   return LtPZ(a, b, theory.policy);
                 });
}

ModelSet OraclePrioritized(const Theory& theory, int cap) {
  theory.Validate();
  return Minimal(theory, cap,
                 [&](const Interpretation& a, const Interpretation& b) {
                   return PrecStrict(a, b, theory.policy);
                 });
}

bool OracleEntails(const Theory& theory, const Formula& alpha, int cap) {
  const ModelSet minimal = theory.policy.tiers.size() == 1
                               ? OracleMinimal(theory, cap)
                               : OraclePrioritized(theory, cap);
  for (const AtomSet& m : minimal) {
    if (!alpha.Evaluate(m)) return false;
  }
  return true;
}

}  // namespace circ
