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

// Exact 0-1 integer programming by depth-first branch and bound.
//
// Variables are branched in index order, value 0 before 1, so the first
// optimum reached is the lexicographically smallest one. Constraints are
// propagated on every assignment: a constraint whose best achievable left-hand
// side misses its bound fails the node, and a term too large for the
// remaining slack forces its variable.

#ifndef CIRC_ILP_H_
#define CIRC_ILP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circ {

using VarIndex = int;
// One 0/1 entry per variable of a system.
using Assignment = std::vector<std::uint8_t>;

struct Term {
  std::int64_t coeff = 0;
  VarIndex var = 0;

  bool operator==(const Term&) const = default;
};

enum class Sense { kGreaterEqual, kLessEqual };

class LinearConstraint {
 public:
  // Merges terms on the same variable, drops zero coefficients and sorts by
  // variable index.
  LinearConstraint(std::vector<Term> terms, Sense sense, std::int64_t bound);

  static LinearConstraint AtLeast(std::vector<Term> terms, std::int64_t bound) {
    return LinearConstraint(std::move(terms), Sense::kGreaterEqual, bound);
  }
  static LinearConstraint AtMost(std::vector<Term> terms, std::int64_t bound) {
    return LinearConstraint(std::move(terms), Sense::kLessEqual, bound);
  }

  const std::vector<Term>& terms() const { return terms_; }
  Sense sense() const { return sense_; }
  std::int64_t bound() const { return bound_; }

  std::int64_t Evaluate(std::span<const std::uint8_t> x) const;
  bool SatisfiedBy(std::span<const std::uint8_t> x) const;

  bool operator==(const LinearConstraint&) const = default;

 private:
  std::vector<Term> terms_;
  Sense sense_;
  std::int64_t bound_;
};

struct Objective {
  std::vector<Term> terms;
  std::int64_t offset = 0;

  std::int64_t Evaluate(std::span<const std::uint8_t> x) const;
};

class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(int num_vars);

  // Appends a variable and returns its index.
  VarIndex AddVar(std::string label = {});
  // Throws std::out_of_range when the constraint references an unknown var.
  void Add(LinearConstraint constraint);

  int num_vars() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }

  bool SatisfiedBy(std::span<const std::uint8_t> x) const;

 private:
  std::vector<std::string> labels_;
  std::vector<LinearConstraint> constraints_;
};

struct Solution {
  Assignment assignment;
  std::int64_t value = 0;
};

// Minimizes `objective` over the 0-1 solutions of `system`. Among optimal
// solutions the lexicographically smallest assignment is returned. Empty when
// the system is infeasible.
std::optional<Solution> SolveMin(const LinearSystem& system,
                                 const Objective& objective);

// Any solution (the lexicographically smallest), or empty.
std::optional<Assignment> Feasible(const LinearSystem& system);

// All 0-1 solutions, found by repeated Feasible calls with each solution
// blocked before the next call. Sorted lexicographically.
std::vector<Assignment> EnumerateAll(const LinearSystem& system);

// sum_{x_i = 1} x_i + sum_{x_i = 0} (1 - x_i) <= n - 1, in normal form.
LinearConstraint BlockAssignment(std::span<const std::uint8_t> x);

// "3x0 + -1x2 >= 1"; the degenerate constraint renders as "0 <= -1".
std::string DebugString(const LinearConstraint& c);
// One constraint per line.
std::string DebugString(const LinearSystem& system);

}  // namespace circ

#endif  // CIRC_ILP_H_
