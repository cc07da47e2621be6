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

// Brute-force reference semantics: scan all 2^n interpretations and apply the
// model-theoretic definitions directly. Shares nothing with the integer
// programming path except the core types.

#ifndef CIRC_ORACLE_H_
#define CIRC_ORACLE_H_

#include "circ/core.h"
#include "circ/formula.h"

namespace circ {

inline constexpr int kDefaultOracleCap = 20;

// Every interpretation over `vocabulary` satisfying all clauses. Throws
// ResourceError when the vocabulary exceeds `cap` atoms.
ModelSet AllModels(const std::set<Clause>& clauses, const AtomSet& vocabulary,
                   int cap = kDefaultOracleCap);

// Models with no strictly <^{P;Z}-smaller model. Single tier only.
ModelSet OracleMinimal(const Theory& theory, int cap = kDefaultOracleCap);

// Models with no strictly prioritized-smaller model.
ModelSet OraclePrioritized(const Theory& theory, int cap = kDefaultOracleCap);

// `alpha` holds in every minimal model (prioritized when several tiers).
bool OracleEntails(const Theory& theory, const Formula& alpha,
                   int cap = kDefaultOracleCap);

}  // namespace circ

#endif  // CIRC_ORACLE_H_
