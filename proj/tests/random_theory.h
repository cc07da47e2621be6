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

// Seeded generators for property tests.

#ifndef CIRC_TESTS_RANDOM_THEORY_H_
#define CIRC_TESTS_RANDOM_THEORY_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "circ/core.h"

namespace circ::testing {

inline int Uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<Atom> AtomNames(int n) {
  std::vector<Atom> out;
  for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

inline Clause RandomClause(std::mt19937& rng, const std::vector<Atom>& atoms,
                           int max_len) {
  Clause c;
  const int len = Uniform(rng, 1, max_len);
  for (int k = 0; k < len; ++k) {
    const Atom& a = atoms[Uniform(rng, 0, static_cast<int>(atoms.size()) - 1)];
    (Uniform(rng, 0, 1) ? c.positives : c.negatives).insert(a);
  }
  return c;
}

inline std::set<Clause> RandomClauses(std::mt19937& rng,
                                      const std::vector<Atom>& atoms,
                                      int num_clauses, int max_len) {
  std::set<Clause> out;
  for (int i = 0; i < num_clauses; ++i) {
    out.insert(RandomClause(rng, atoms, max_len));
  }
  return out;
}

// Splits `atoms` at random into `num_tiers` minimized tiers (each non-empty
// when possible), a varied set and a fixed set.
inline Policy RandomPolicy(std::mt19937& rng, const std::vector<Atom>& atoms,
                           int num_tiers, bool varied, bool fixed) {
  Policy p;
  p.tiers.resize(num_tiers);
  std::vector<Atom> shuffled = atoms;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::size_t i = 0;
  for (int t = 0; t < num_tiers && i < shuffled.size(); ++t) {
    p.tiers[t].insert(shuffled[i++]);
  }
  const int buckets = num_tiers + (varied ? 1 : 0) + (fixed ? 1 : 0);
  for (; i < shuffled.size(); ++i) {
    const int b = Uniform(rng, 0, buckets - 1);
    if (b < num_tiers) {
      p.tiers[b].insert(shuffled[i]);
    } else if (varied && b == num_tiers) {
      p.varied.insert(shuffled[i]);
    } else {
      p.fixed.insert(shuffled[i]);
    }
  }
  return p;
}

inline Theory RandomTheory(std::mt19937& rng, int num_atoms, int num_clauses,
                           int max_len, int num_tiers, bool varied,
                           bool fixed) {
  const std::vector<Atom> atoms = AtomNames(num_atoms);
  Theory t;
  t.vocabulary = AtomSet(atoms.begin(), atoms.end());
  t.clauses = RandomClauses(rng, atoms, num_clauses, max_len);
  t.policy = RandomPolicy(rng, atoms, num_tiers, varied, fixed);
  return t;
}

// The running bird example: ~bird | ab | fly, bird.
inline Theory BirdTheory(AtomSet minimized, AtomSet varied, AtomSet fixed) {
  Theory t;
  t.vocabulary = {"ab", "bird", "fly"};
  t.clauses = {Clause::Of({"ab", "fly"}, {"bird"}), Clause::Of({"bird"})};
  t.policy = Policy::Simple(std::move(minimized), std::move(varied),
                            std::move(fixed));
  return t;
}

// ab1 | ~fly, ~bird | ab2 | fly with ab2 minimized before ab1.
inline Theory PrioritizedBirdTheory() {
  Theory t;
  t.vocabulary = {"ab1", "ab2", "bird", "fly"};
  t.clauses = {Clause::Of({"ab1"}, {"fly"}),
               Clause::Of({"ab2", "fly"}, {"bird"})};
  t.policy.tiers = {{"ab2"}, {"ab1"}};
  t.policy.varied = {"fly"};
  t.policy.fixed = {"bird"};
  return t;
}

}  // namespace circ::testing

#endif  // CIRC_TESTS_RANDOM_THEORY_H_
