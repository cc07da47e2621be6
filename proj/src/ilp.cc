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

#include "circ/ilp.h"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace circ {

namespace {

std::vector<Term> MergeTerms(std::vector<Term> terms) {
  std::map<VarIndex, std::int64_t> merged;
  for (const Term& t : terms) merged[t.var] += t.coeff;
  std::vector<Term> out;
  for (const auto& [var, coeff] : merged) {
    if (coeff != 0) out.push_back({coeff, var});
  }
  return out;
}

std::int64_t Dot(const std::vector<Term>& terms,
                 std::span<const std::uint8_t> x) {
  std::int64_t sum = 0;
  for (const Term& t : terms) sum += t.coeff * x[t.var];
  return sum;
}

}  // namespace

LinearConstraint::LinearConstraint(std::vector<Term> terms, Sense sense,
                                   std::int64_t bound)
    : terms_(MergeTerms(std::move(terms))), sense_(sense), bound_(bound) {}

std::int64_t LinearConstraint::Evaluate(std::span<const std::uint8_t> x) const {
  return Dot(terms_, x);
}

bool LinearConstraint::SatisfiedBy(std::span<const std::uint8_t> x) const {
  const std::int64_t lhs = Evaluate(x);
  return sense_ == Sense::kGreaterEqual ? lhs >= bound_ : lhs <= bound_;
}

std::int64_t Objective::Evaluate(std::span<const std::uint8_t> x) const {
  return offset + Dot(terms, x);
}

LinearSystem::LinearSystem(int num_vars) {
  for (int i = 0; i < num_vars; ++i) AddVar();
}

VarIndex LinearSystem::AddVar(std::string label) {
  if (label.empty()) label = "x" + std::to_string(labels_.size());
  labels_.push_back(std::move(label));
  return num_vars() - 1;
}

void LinearSystem::Add(LinearConstraint constraint) {
  for (const Term& t : constraint.terms()) {
    if (t.var < 0 || t.var >= num_vars()) {
      throw std::out_of_range("constraint references unknown variable " +
                              std::to_string(t.var));
    }
  }
  constraints_.push_back(std::move(constraint));
}

bool LinearSystem::SatisfiedBy(std::span<const std::uint8_t> x) const {
  if (static_cast<int>(x.size()) != num_vars()) return false;
  return std::all_of(
      constraints_.begin(), constraints_.end(),
      [&](const LinearConstraint& c) { return c.SatisfiedBy(x); });
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::int8_t kUnassigned = -1;

class BranchAndBound {
 public:
  BranchAndBound(const LinearSystem& system, const Objective& objective)
      : n_(system.num_vars()),
        value_(n_, kUnassigned),
        occurrences_(n_),
        cost_(n_, 0) {
    for (const LinearConstraint& c : system.constraints()) {
      // Everything is kept as sum >= bound.
      const std::int64_t sign = c.sense() == Sense::kGreaterEqual ? 1 : -1;
      Row row;
      row.bound = sign * c.bound();
      for (const Term& t : c.terms()) {
        const std::int64_t a = sign * t.coeff;
        row.terms.push_back({a, t.var});
        row.max_lhs += std::max<std::int64_t>(a, 0);
        row.max_abs = std::max(row.max_abs, std::abs(a));
        occurrences_[t.var].push_back(
            {static_cast<int>(rows_.size()), a});
      }
      rows_.push_back(std::move(row));
    }
    lower_bound_ = objective.offset;
    for (const Term& t : objective.terms) {
      if (t.var < 0 || t.var >= n_) {
        throw std::out_of_range("objective references unknown variable " +
                                std::to_string(t.var));
      }
      cost_[t.var] += t.coeff;
    }
    for (std::int64_t c : cost_) lower_bound_ += std::min<std::int64_t>(c, 0);
  }

  std::optional<Solution> Run() {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (!CheckRow(r)) return std::nullopt;
    }
    if (!Propagate()) return std::nullopt;
    Search(0);
    return best_;
  }

 private:
  struct Row {
    std::vector<Term> terms;
    std::int64_t bound = 0;
    // Largest left-hand side still reachable under the partial assignment.
    std::int64_t max_lhs = 0;
    std::int64_t max_abs = 0;
  };
  struct Occurrence {
    int row;
    std::int64_t coeff;
  };

  static std::int64_t Loss(std::int64_t coeff, std::uint8_t v) {
    return std::max<std::int64_t>(coeff, 0) - coeff * v;
  }

  void Assign(VarIndex var, std::uint8_t v) {
    value_[var] = static_cast<std::int8_t>(v);
    trail_.push_back(var);
    for (const Occurrence& o : occurrences_[var]) {
      rows_[o.row].max_lhs -= Loss(o.coeff, v);
    }
    lower_bound_ += cost_[var] * v - std::min<std::int64_t>(cost_[var], 0);
    queue_.push_back(var);
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const VarIndex var = trail_.back();
      trail_.pop_back();
      const auto v = static_cast<std::uint8_t>(value_[var]);
      for (const Occurrence& o : occurrences_[var]) {
        rows_[o.row].max_lhs += Loss(o.coeff, v);
      }
      lower_bound_ -= cost_[var] * v - std::min<std::int64_t>(cost_[var], 0);
      value_[var] = kUnassigned;
    }
    queue_.clear();
  }

  // Fails when the row cannot be satisfied; otherwise assigns every variable
  // whose wrong value would exceed the remaining slack. Forced values do not
  // change this row's max_lhs.
  bool CheckRow(int r) {
    Row& row = rows_[r];
    if (row.max_lhs < row.bound) return false;
    const std::int64_t slack = row.max_lhs - row.bound;
    if (slack >= row.max_abs) return true;
    for (const Term& t : row.terms) {
      if (value_[t.var] == kUnassigned && std::abs(t.coeff) > slack) {
        Assign(t.var, t.coeff > 0 ? 1 : 0);
      }
    }
    return true;
  }

  bool Propagate() {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      for (const Occurrence& o : occurrences_[queue_[head]]) {
        if (!CheckRow(o.row)) {
          queue_.clear();
          return false;
        }
      }
    }
    queue_.clear();
    return true;
  }

  void Search(VarIndex next) {
    if (best_ && lower_bound_ >= best_->value) return;
    while (next < n_ && value_[next] != kUnassigned) ++next;
    if (next == n_) {
      Solution s;
      s.assignment.assign(value_.begin(), value_.end());
      s.value = lower_bound_;
      best_ = std::move(s);
      return;
    }
    for (std::uint8_t v : {0, 1}) {
      const std::size_t mark = trail_.size();
      Assign(next, v);
      if (Propagate()) Search(next + 1);
      Undo(mark);
    }
  }

  int n_;
  std::vector<std::int8_t> value_;
  std::vector<Row> rows_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::int64_t> cost_;
  std::int64_t lower_bound_ = 0;
  std::vector<VarIndex> trail_;
  std::vector<VarIndex> queue_;
  std::optional<Solution> best_;
};

}  // namespace

std::optional<Solution> SolveMin(const LinearSystem& system,
                                 const Objective& objective) {
  return BranchAndBound(system, objective).Run();
}

std::optional<Assignment> Feasible(const LinearSystem& system) {
  auto solution = SolveMin(system, Objective{});
  if (!solution) return std::nullopt;
  return std::move(solution->assignment);
}

std::vector<Assignment> EnumerateAll(const LinearSystem& system) {
  LinearSystem work = system;
  std::vector<Assignment> out;
  while (auto x = Feasible(work)) {
    work.Add(BlockAssignment(*x));
    out.push_back(std::move(*x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinearConstraint BlockAssignment(std::span<const std::uint8_t> x) {
  std::vector<Term> terms;
  std::int64_t zeros = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) {
      terms.push_back({1, static_cast<VarIndex>(i)});
    } else {
      terms.push_back({-1, static_cast<VarIndex>(i)});
      ++zeros;
    }
  }
  return LinearConstraint::AtMost(
      std::move(terms), static_cast<std::int64_t>(x.size()) - 1 - zeros);
}

std::string DebugString(const LinearConstraint& c) {
  std::ostringstream out;
  if (c.terms().empty()) out << "0";
  for (std::size_t i = 0; i < c.terms().size(); ++i) {
    if (i > 0) out << " + ";
    out << c.terms()[i].coeff << "x" << c.terms()[i].var;
  }
  out << (c.sense() == Sense::kGreaterEqual ? " >= " : " <= ") << c.bound();
  return out.str();
}

std::string DebugString(const LinearSystem& system) {
  std::string out;
  for (const LinearConstraint& c : system.constraints()) {
    out += DebugString(c);
    out += '\n';
  }
  return out;
}

}  // namespace circ
