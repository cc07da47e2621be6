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

#include "circ/circumscribe.h"

#include <functional>

#include "circ/ilp.h"
#include "circ/translate.h"

namespace circ {

namespace {

std::string Sum(const AtomSet& atoms) {
  if (atoms.empty()) return "0";
  std::string out;
  for (const Atom& a : atoms) {
    if (!out.empty()) out += " + ";
    out += "X_" + a;
  }
  return out;
}

// Shared bookkeeping for one algorithm run.
class Run {
 public:
  Run(const Theory& theory, const CircOptions& opts)
      : theory_(theory), opts_(opts) {}

  const Theory& theory() const { return theory_; }
  CircResult& result() { return result_; }

  void Log(std::string step, std::string text) {
    if (result_.trace.size() >= opts_.max_trace) {
      result_.trace_truncated = true;
      return;
    }
    result_.trace.push_back({std::move(step), std::move(text)});
  }

  std::optional<Solution> Minimize(const TrMap& map, const AtomSet& atoms) {
    if (static_cast<std::size_t>(result_.iterations) >= opts_.max_iterations) {
      throw ResourceError("iteration budget of " +
                          std::to_string(opts_.max_iterations) +
                          " minimizations exhausted");
    }
    ++result_.iterations;
    return SolveMin(map.system(), map.CountObjective(atoms));
  }

  // Solver output restricted to the theory's own vocabulary.
  Interpretation Decode(const TrMap& map, const Assignment& x) const {
    return Interpretation(
        Project(map.ToInterpretation(x), theory_.vocabulary));
  }

  // Clauses of A plus `extra` (already clausified).
  std::vector<Clause> ClausesWith(const ClauseSet& extra) const {
    std::vector<Clause> out(theory_.clauses.begin(), theory_.clauses.end());
    out.insert(out.end(), extra.clauses.begin(), extra.clauses.end());
    return out;
  }

  AtomSet VocabularyWith(const ClauseSet& extra) const {
    return Union(theory_.vocabulary, extra.auxiliaries);
  }

 private:
  const Theory& theory_;
  const CircOptions& opts_;
  CircResult result_;
};

enum class Blocking { kNerode, kFixed };

// Steps 1-4 shared by every algorithm: minimize `minimized` under Tr(A) u AC
// until infeasible. `on_solution` receives each optimum.
void FirstTierLoop(Run& run, const AtomSet& minimized, const AtomSet& fixed,
                   Blocking blocking,
                   const std::function<std::string(const Interpretation&)>&
                       on_solution) {
  const Theory& theory = run.theory();
  TrMap map = TrClauses(
      std::vector<Clause>(theory.clauses.begin(), theory.clauses.end()),
      theory.vocabulary);
  run.Log("Step 1", "AC := {}, SS := {}");
  for (int k = 1;; ++k) {
    const std::string n = "(" + std::to_string(k) + ")";
    run.Log("Step 2" + n, "minimize " + Sum(minimized) + " under Tr(A) u AC");
    const std::optional<Solution> sol = run.Minimize(map, minimized);
    if (!sol) {
      run.Log("Step 3" + n, "no solution");
      return;
    }
    const Interpretation m = run.Decode(map, sol->assignment);
    const LinearConstraint block =
        blocking == Blocking::kNerode
            ? BlockNerode(m, minimized, map)
            : BlockFixed(m, minimized, fixed, map);
    const std::string recorded = on_solution(m);
    run.Log("Step 4" + n, "M = " + ToString(m.atoms()) + " (objective " +
                              std::to_string(sol->value) + "); add " +
                              recorded + " to SS; add " + map.Render(block) +
                              " to AC");
    map.system().Add(block);
  }
}

// All models of A & fact(S, frozen - S), added to `out`.
void ExpandRecord(Run& run, const AtomSet& record, const AtomSet& frozen,
                  ModelSet* out) {
  const ClauseSet fact =
      ToClauses(FactFormula(record, Difference(frozen, record)));
  const TrMap map =
      TrClauses(run.ClausesWith(fact), run.VocabularyWith(fact));
  ModelSet models;
  for (const Assignment& x : EnumerateAll(map.system())) {
    models.Insert(run.Decode(map, x));
  }
  run.Log("Step 5", "S = " + ToString(record) + ": models of A' are " +
                        ToString(models));
  out->InsertAll(models);
}

// True iff A & fact(S, frozen - S) & ~alpha has a model.
bool HasCounterModel(Run& run, const AtomSet& record, const AtomSet& frozen,
                     const Formula& alpha) {
  const Formula query = Formula::And(
      {FactFormula(record, Difference(frozen, record)), Negate(alpha)});
  const ClauseSet extra = ToClauses(query);
  const TrMap map = TrClauses(run.ClausesWith(extra), run.VocabularyWith(extra));
  const bool sat = Feasible(map.system()).has_value();
  run.Log("Check", "S = " + ToString(record) + ": A' & ~alpha is " +
                       (sat ? "satisfiable" : "unsatisfiable"));
  return sat;
}

void RequireSingleTier(const Theory& theory, const char* what) {
  if (theory.policy.tiers.size() != 1) {
    throw InputError(std::string(what) + " needs a single minimized tier; got " +
                     std::to_string(theory.policy.tiers.size()));
  }
}

void RequireQueryVocabulary(const Theory& theory, const Formula& alpha) {
  for (const Atom& a : alpha.Atoms()) {
    if (!theory.vocabulary.contains(a)) {
      throw InputError("query mentions unknown atom '" + a + "'");
    }
  }
}

// Steps 1-4 of the varied algorithm: the records M[P u Q].
ModelSet VariedRecords(Run& run) {
  const Policy& policy = run.theory().policy;
  const AtomSet& p = policy.tiers[0];
  const AtomSet frozen = Union(p, policy.fixed);
  ModelSet records;
  FirstTierLoop(run, p, policy.fixed, Blocking::kFixed,
                [&](const Interpretation& m) {
                  const AtomSet s = Project(m, frozen);
                  records.Insert(s);
                  return ToString(s);
                });
  return records;
}

// Steps 1-5 of the prioritized algorithm without the final expansion: the
// records M[P1 u ... u Pn u Q].
ModelSet PrioritizedRecords(Run& run) {
  const Theory& theory = run.theory();
  const Policy& policy = theory.policy;
  const AtomSet& fixed = policy.fixed;

  ModelSet records;
  {
    const AtomSet frozen = Union(policy.tiers[0], fixed);
    FirstTierLoop(run, policy.tiers[0], fixed, Blocking::kFixed,
                  [&](const Interpretation& m) {
                    const AtomSet s = Project(m, frozen);
                    records.Insert(s);
                    return ToString(s);
                  });
  }

  for (std::size_t i = 1; i < policy.tiers.size(); ++i) {
    const AtomSet& tier = policy.tiers[i];
    const AtomSet earlier = Union(policy.MinimizedPrefix(i), fixed);
    const AtomSet through = Union(earlier, tier);
    const std::string tier_label = "i=" + std::to_string(i + 1);
    ModelSet refined;
    for (const AtomSet& s : records) {
      const ClauseSet fact = ToClauses(FactFormula(s, Difference(earlier, s)));
      // A fresh system per record: AC starts empty for every S.
      TrMap map = TrClauses(run.ClausesWith(fact), run.VocabularyWith(fact));
      run.Log("Step 5-1", tier_label + ", S = " + ToString(s) + ": AC := {}");
      for (int k = 1;; ++k) {
        const std::string n = "(" + std::to_string(k) + ")";
        run.Log("Step 5-2" + n, "minimize " + Sum(tier) +
                                    " under Tr(A & fact) u AC");
        const std::optional<Solution> sol = run.Minimize(map, tier);
        if (!sol) {
          run.Log("Step 5-3" + n, "no solution");
          break;
        }
        const Interpretation m = run.Decode(map, sol->assignment);
        const AtomSet rec = Project(m, through);
        refined.Insert(rec);
        // When M[Pi] is empty this is 0 <= -1 and ends the loop for S.
        const LinearConstraint block = BlockNerode(m, tier, map);
        run.Log("Step 5-4" + n, "M = " + ToString(m.atoms()) +
                                    " (objective " +
                                    std::to_string(sol->value) + "); add " +
                                    ToString(rec) + " to SS'; add " +
                                    map.Render(block) + " to AC");
        map.system().Add(block);
      }
    }
    records = std::move(refined);
    run.Log("Step 5", tier_label + ": SS := " + ToString(records));
  }
  return records;
}

}  // namespace

CircResult NerodeAlgorithm(const Theory& theory, const CircOptions& opts) {
  theory.Validate();
  RequireSingleTier(theory, "the Nerode algorithm");
  Run run(theory, opts);
  const AtomSet& p = theory.policy.tiers[0];
  FirstTierLoop(run, p, theory.policy.fixed, Blocking::kNerode,
                [&](const Interpretation& m) {
                  const AtomSet s = Project(m, p);
                  run.result().models.Insert(s);
                  return ToString(s);
                });
  return std::move(run.result());
}

CircResult MinimalModelsFixed(const Theory& theory, const CircOptions& opts) {
  theory.Validate();
  RequireSingleTier(theory, "the fixed-atom algorithm");
  if (!theory.policy.varied.empty()) {
    throw InputError(
        "the fixed-atom algorithm does not allow varied atoms; use the varied "
        "algorithm");
  }
  Run run(theory, opts);
  FirstTierLoop(run, theory.policy.tiers[0], theory.policy.fixed,
                Blocking::kFixed, [&](const Interpretation& m) {
                  run.result().models.Insert(m);
                  return ToString(m.atoms());
                });
  return std::move(run.result());
}

CircResult MinimalModelsVaried(const Theory& theory, const CircOptions& opts) {
  theory.Validate();
  RequireSingleTier(theory, "the varied-atom algorithm");
  Run run(theory, opts);
  const ModelSet records = VariedRecords(run);
  const AtomSet frozen = Union(theory.policy.tiers[0], theory.policy.fixed);
  ModelSet models;
  for (const AtomSet& s : records) ExpandRecord(run, s, frozen, &models);
  run.result().models = std::move(models);
  return std::move(run.result());
}

CircResult MinimalModelsPrioritized(const Theory& theory,
                                    const CircOptions& opts) {
  theory.Validate();
  Run run(theory, opts);
  const ModelSet records = PrioritizedRecords(run);
  const AtomSet frozen =
      Union(theory.policy.Minimized(), theory.policy.fixed);
  ModelSet models;
  for (const AtomSet& s : records) ExpandRecord(run, s, frozen, &models);
  run.result().models = std::move(models);
  return std::move(run.result());
}

bool Entails(const Theory& theory, const Formula& alpha,
             const CircOptions& opts) {
  theory.Validate();
  RequireSingleTier(theory, "entailment");
  RequireQueryVocabulary(theory, alpha);
  Run run(theory, opts);
  const ModelSet records = VariedRecords(run);
  const AtomSet frozen = Union(theory.policy.tiers[0], theory.policy.fixed);
  for (const AtomSet& s : records) {
    if (HasCounterModel(run, s, frozen, alpha)) return false;
  }
  return true;
}

bool EntailsPrioritized(const Theory& theory, const Formula& alpha,
                        const CircOptions& opts) {
  theory.Validate();
  RequireQueryVocabulary(theory, alpha);
  Run run(theory, opts);
  const ModelSet records = PrioritizedRecords(run);
  const AtomSet frozen =
      Union(theory.policy.Minimized(), theory.policy.fixed);
  for (const AtomSet& s : records) {
    if (HasCounterModel(run, s, frozen, alpha)) return false;
  }
  return true;
}

DeKleerImage DeKleerTransform(const Theory& theory, bool prioritized) {
  if (!prioritized) RequireSingleTier(theory, "the non-prioritized transform");
  DeKleerImage image;
  image.theory = theory;
  const AtomSet fixed = theory.policy.fixed;
  if (fixed.empty()) return image;

  AtomSet added = fixed;
  for (const Atom& q : fixed) {
    const Atom r = std::string(kComplementPrefix) + q;
    if (theory.vocabulary.contains(r)) {
      throw InputError("complement name '" + r +
                       "' already occurs in the vocabulary");
    }
    image.complement.emplace(q, r);
    image.theory.vocabulary.insert(r);
    added.insert(r);
    // r <-> ~q.
    image.theory.clauses.insert(Clause::Of({r, q}));
    image.theory.clauses.insert(Clause::Of({}, {r, q}));
  }

  Policy& policy = image.theory.policy;
  policy.fixed.clear();
  if (prioritized) {
    policy.tiers.insert(policy.tiers.begin(), added);
  } else {
    policy.tiers[0].insert(added.begin(), added.end());
  }
  return image;
}

std::string FormatTrace(const CircResult& result) {
  std::string out;
  for (const TraceEntry& e : result.trace) {
    out += e.step + ": " + e.text + "\n";
  }
  if (result.trace_truncated) out += "... (trace truncated)\n";
  return out;
}

}  // namespace circ
