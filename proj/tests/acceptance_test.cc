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

// Release gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "circ/circumscribe.h"
#include "circ/cli.h"
#include "circ/ilp.h"
#include "circ/oracle.h"
#include "circ/translate.h"
#include "random_theory.h"

namespace circ {
namespace {

using testing::Uniform;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

ModelSet Models(std::initializer_list<AtomSet> members) {
  ModelSet s;
  for (const AtomSet& m : members) s.Insert(m);
  return s;
}

Theory BirdTheory(AtomSet p, AtomSet z, AtomSet q) {
  return testing::BirdTheory(std::move(p), std::move(z), std::move(q));
}

Theory SatisfiableTheory(std::mt19937& rng, int max_atoms, int num_tiers,
                         bool varied, bool fixed) {
  for (;;) {
    Theory t = testing::RandomTheory(rng, Uniform(rng, 1, max_atoms),
                                     Uniform(rng, 1, 12), 3, num_tiers,
                                     varied, fixed);
    bool empty_tier = false;
    for (const AtomSet& tier : t.policy.tiers) empty_tier |= tier.empty();
    if (empty_tier) continue;
    if (!AllModels(t.clauses, t.vocabulary).empty()) return t;
  }
}

Outcome BirdFixed() {
  Outcome o;
  const Theory t = BirdTheory({"ab"}, {}, {"bird", "fly"});
  o.Expect(NerodeAlgorithm(t).models == Models({{}}), "nerode output");
  o.Expect(MinimalModelsFixed(t).models ==
               Models({{"bird", "fly"}, {"ab", "bird"}}),
           "fixed output");
  return o;
}

Outcome BirdVaried() {
  Outcome o;
  const Theory varied = BirdTheory({"ab"}, {"fly"}, {"bird"});
  o.Expect(MinimalModelsVaried(varied).models == Models({{"bird", "fly"}}),
           "varied output");
  o.Expect(Entails(varied, Formula::Var("fly")), "fly not entailed");
  o.Expect(!Entails(BirdTheory({"ab"}, {}, {"bird", "fly"}),
                    Formula::Var("fly")),
           "fly entailed with fly fixed");
  return o;
}

Outcome BirdPrioritized() {
  Outcome o;
  o.Expect(MinimalModelsPrioritized(testing::PrioritizedBirdTheory()).models ==
               Models({{"ab1", "bird", "fly"}, {}}),
           "prioritized output");
  return o;
}

Outcome TrFaithfulness() {
  Outcome o;
  std::mt19937 rng(1001);
  for (int round = 0; round < 500; ++round) {
    const int n = Uniform(rng, 1, 10);
    const std::vector<Atom> atoms = testing::AtomNames(n);
    const AtomSet vocab(atoms.begin(), atoms.end());
    const std::set<Clause> clauses =
        testing::RandomClauses(rng, atoms, Uniform(rng, 0, 15), 4);
    const TrMap map =
        TrClauses(std::vector<Clause>(clauses.begin(), clauses.end()), vocab);
    const std::vector<Assignment> solutions = EnumerateAll(map.system());
    ModelSet decoded;
    for (const Assignment& x : solutions) {
      decoded.Insert(map.ToInterpretation(x).atoms());
    }
    o.Expect(decoded.size() == solutions.size(), "decoding not injective");
    o.Expect(decoded == AllModels(clauses, vocab),
             "round " + std::to_string(round));
  }
  return o;
}

Outcome OracleEquivalence() {
  Outcome o;
  std::mt19937 rng(1002);
  for (int round = 0; round < 300; ++round) {
    const std::string tag = " round " + std::to_string(round);
    switch (round % 3) {
      case 0: {
        const Theory t = SatisfiableTheory(rng, 9, 1, false, true);
        o.Expect(MinimalModelsFixed(t).models == OracleMinimal(t),
                 "fixed" + tag);
        break;
      }
      case 1: {
        const Theory t = SatisfiableTheory(rng, 9, 1, true, true);
        o.Expect(MinimalModelsVaried(t).models == OracleMinimal(t),
                 "varied" + tag);
        break;
      }
      default: {
        const Theory t =
            SatisfiableTheory(rng, 9, Uniform(rng, 2, 3), true, true);
        o.Expect(MinimalModelsPrioritized(t).models == OraclePrioritized(t),
                 "prioritized" + tag);
      }
    }
  }
  return o;
}

Outcome NerodeWithoutFixed() {
  Outcome o;
  std::mt19937 rng(1003);
  for (int round = 0; round < 100; ++round) {
    const Theory t = SatisfiableTheory(rng, 9, 1, true, false);
    o.Expect(NerodeAlgorithm(t).models ==
                 OracleMinimal(t).ProjectAll(t.policy.tiers[0]),
             "round " + std::to_string(round));
  }
  return o;
}

Outcome BlockingSemantics() {
  Outcome o;
  std::mt19937 rng(1004);
  for (int n = 1; n <= 8; ++n) {
    const std::vector<Atom> atoms = testing::AtomNames(n);
    const TrMap map = TrClauses({}, AtomSet(atoms.begin(), atoms.end()));
    for (int round = 0; round < 8; ++round) {
      const Policy policy = testing::RandomPolicy(rng, atoms, 1, true, true);
      const AtomSet& p = policy.tiers[0];
      const AtomSet& q = policy.fixed;
      for (std::uint32_t mb = 0; mb < (1u << n); ++mb) {
        Assignment mx(n);
        for (int i = 0; i < n; ++i) mx[i] = mb >> i & 1;
        const Interpretation m = map.ToInterpretation(mx);
        const LinearConstraint nerode = BlockNerode(m, p, map);
        const LinearConstraint fixed = BlockFixed(m, p, q, map);
        for (std::uint32_t nb = 0; nb < (1u << n); ++nb) {
          Assignment nx(n);
          for (int i = 0; i < n; ++i) nx[i] = nb >> i & 1;
          const Interpretation other = map.ToInterpretation(nx);
          const bool above = IsSubset(Project(m, p), Project(other, p));
          const bool same_q = Project(m, q) == Project(other, q);
          if (nerode.SatisfiedBy(nx) == above ||
              fixed.SatisfiedBy(nx) == (above && same_q)) {
            o.Expect(false, "n=" + std::to_string(n));
          }
        }
      }
    }
  }
  return o;
}

Outcome DeKleerEquivalence() {
  Outcome o;
  std::mt19937 rng(1005);
  int done = 0;
  while (done < 100) {
    const int tiers = done % 2 == 0 ? 1 : Uniform(rng, 2, 3);
    const Theory t = SatisfiableTheory(rng, 7, tiers, true, true);
    if (t.policy.fixed.empty()) continue;
    ++done;
    const bool prioritized = tiers > 1;
    const DeKleerImage image = DeKleerTransform(t, prioritized);
    auto entails = [&](const Theory& th, const Formula& f) {
      return prioritized ? EntailsPrioritized(th, f) : Entails(th, f);
    };
    std::vector<Formula> literals;
    for (const Atom& p : t.policy.Minimized()) {
      literals.push_back(Formula::Var(p));
      literals.push_back(Formula::Not(Formula::Var(p)));
    }
    std::vector<Formula> alphas = literals;
    for (std::size_t i = 0; i < literals.size(); ++i) {
      for (std::size_t j = i + 1; j < literals.size(); ++j) {
        alphas.push_back(Formula::Or({literals[i], literals[j]}));
      }
    }
    for (const Formula& alpha : alphas) {
      o.Expect(entails(image.theory, alpha) == entails(t, alpha),
               "theory " + std::to_string(done) + ", " + ToString(alpha));
    }
  }
  return o;
}

Outcome IlpOptimality() {
  Outcome o;
  std::mt19937 rng(1006);
  for (int round = 0; round < 300; ++round) {
    const int n = Uniform(rng, 1, 12);
    LinearSystem sys(n);
    const int m = Uniform(rng, 0, 20);
    for (int c = 0; c < m; ++c) {
      std::vector<Term> terms;
      for (int k = Uniform(rng, 1, std::min(n, 6)); k > 0; --k) {
        terms.push_back({Uniform(rng, -3, 3), Uniform(rng, 0, n - 1)});
      }
      sys.Add(LinearConstraint(
          std::move(terms),
          Uniform(rng, 0, 1) ? Sense::kGreaterEqual : Sense::kLessEqual,
          Uniform(rng, -4, 4)));
    }
    Objective obj;
    for (int i = 0; i < n; ++i) obj.terms.push_back({Uniform(rng, -3, 3), i});

    std::optional<std::int64_t> best;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      Assignment x(n);
      for (int i = 0; i < n; ++i) x[i] = bits >> i & 1;
      if (!sys.SatisfiedBy(x)) continue;
      const std::int64_t v = obj.Evaluate(x);
      if (!best || v < *best) best = v;
    }
    const std::optional<Solution> got = SolveMin(sys, obj);
    const std::string tag = "round " + std::to_string(round);
    o.Expect(got.has_value() == best.has_value(), "verdict " + tag);
    if (got && best) {
      o.Expect(got->value == *best, "optimum " + tag);
      o.Expect(sys.SatisfiedBy(got->assignment), "infeasible point " + tag);
    }
  }
  return o;
}

Outcome JsonDeterminism() {
  Outcome o;
  const std::string dir = CIRC_THEORY_DIR;
  const std::vector<std::vector<std::string>> commands = {
      {"models", dir + "/example1.circ", "--json", "--trace"},
      {"models", dir + "/example1.circ", "--json", "--algorithm", "nerode"},
      {"models", dir + "/prioritized.circ", "--json", "--trace"},
      {"entail", dir + "/example1-varied.circ", "--json"},
      {"entail", dir + "/prioritized.circ", "--json"},
      {"oracle", dir + "/tweety.circ", "--json"},
      {"compare", dir + "/tweety.circ", "--json", "--trace"},
  };
  for (const auto& args : commands) {
    std::ostringstream a, b, err;
    const int ca = RunCli(args, a, err);
    const int cb = RunCli(args, b, err);
    o.Expect(ca == cb && a.str() == b.str() && !a.str().empty(),
             args[0] + " " + args[1]);
  }
  return o;
}

}  // namespace
}  // namespace circ

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<circ::Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"bird example, fixed atoms", 1, circ::BirdFixed},
      {"bird example, varied atoms", 1, circ::BirdVaried},
      {"bird example, prioritized", 1, circ::BirdPrioritized},
      {"translation faithfulness (500 clause sets)", 60,
       circ::TrFaithfulness},
      {"algorithms match oracle (300 theories)", 120,
       circ::OracleEquivalence},
      {"nerode complete without fixed atoms (100 theories)", 0,
       circ::NerodeWithoutFixed},
      {"blocking constraint semantics (exhaustive, <= 8 atoms)", 0,
       circ::BlockingSemantics},
      {"complement transform preserves entailment (100 theories)", 0,
       circ::DeKleerEquivalence},
      {"solver optimality (300 systems)", 0, circ::IlpOptimality},
      {"deterministic JSON output", 0, circ::JsonDeterminism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    circ::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (outcome.ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.ok = false;
      outcome.detail = "time limit exceeded";
    }
    if (!outcome.ok) ++failures;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " " << i + 1 << " "
              << c.name;
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << seconds;
    std::cout << " (" << secs.str() << " s)";
    if (!outcome.ok) std::cout << ": " << outcome.detail;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
