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

// Minimal-model enumeration for propositional circumscription through 0-1
// integer programming.
//
// Every algorithm repeatedly minimizes the number of true minimized atoms
// under the clause inequalities plus an accumulating set of blocking
// constraints (AC), recording each optimum in a solution set (SS):
//
//   NerodeAlgorithm           blocks M[P] supersets only. Complete when there
//                             are no fixed atoms; misses models otherwise.
//   MinimalModelsFixed        blocks supersets with the same fixed part.
//   MinimalModelsVaried       records M[P u Q], then expands each record into
//                             all models agreeing with it.
//   MinimalModelsPrioritized  as above for tier 1, then refines every record
//                             tier by tier with the fixed part and earlier
//                             tiers frozen.
//
// Tier 0 of a Policy is minimized first.

#ifndef CIRC_CIRCUMSCRIBE_H_
#define CIRC_CIRCUMSCRIBE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circ/core.h"
#include "circ/formula.h"

namespace circ {

struct TraceEntry {
  // Step label in the algorithm's numbering, e.g. "Step 4(2)" or "Step 5-4(1)".
  std::string step;
  std::string text;
};

struct CircResult {
  ModelSet models;
  // Minimization calls made by the iterative phases.
  int iterations = 0;
  std::vector<TraceEntry> trace;
  bool trace_truncated = false;
};

struct CircOptions {
  // Minimization calls allowed before ResourceError.
  std::size_t max_iterations = 1'000'000;
  // Trace entries kept; later ones are dropped and trace_truncated is set.
  std::size_t max_trace = 10'000;
};

// The original enumeration: SS holds projections M[P] of the single tier.
CircResult NerodeAlgorithm(const Theory& theory, const CircOptions& opts = {});

// All minimal models with fixed atoms and nothing varied.
CircResult MinimalModelsFixed(const Theory& theory,
                              const CircOptions& opts = {});

// All minimal models of a single-tier policy with any varied/fixed split.
CircResult MinimalModelsVaried(const Theory& theory,
                               const CircOptions& opts = {});

// All minimal models under the prioritized order; any number of tiers.
CircResult MinimalModelsPrioritized(const Theory& theory,
                                    const CircOptions& opts = {});

// True iff `alpha` holds in every minimal model of a single-tier theory.
// Decided without enumerating the minimal models: each record M[P u Q] is
// checked for a model that also satisfies ~alpha. Unsatisfiable theories
// entail everything.
bool Entails(const Theory& theory, const Formula& alpha,
             const CircOptions& opts = {});

// Prioritized counterpart of Entails.
bool EntailsPrioritized(const Theory& theory, const Formula& alpha,
                        const CircOptions& opts = {});

// Prefix of the fresh atom paired with each fixed atom: r_<q> <-> ~q.
inline constexpr std::string_view kComplementPrefix = "r_";

struct DeKleerImage {
  // Theory with r <-> ~q added for every fixed q and an empty fixed set.
  Theory theory;
  // q -> r.
  std::map<Atom, Atom> complement;
};

// Eliminates fixed atoms. Non-prioritized: Q u R join the single minimized
// tier. Prioritized: Q u R become a new first tier ahead of the existing ones.
// Throws InputError when a complement name already exists, or when a
// multi-tier theory is transformed non-prioritized.
DeKleerImage DeKleerTransform(const Theory& theory, bool prioritized);

std::string FormatTrace(const CircResult& result);

}  // namespace circ

#endif  // CIRC_CIRCUMSCRIBE_H_
