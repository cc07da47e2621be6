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

// Propositional formulas: an immutable shared AST, the query parser, and
// definitional clausification.

#ifndef CIRC_FORMULA_H_
#define CIRC_FORMULA_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "circ/core.h"

namespace circ {

class Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies, kIff };

  // Defaults to the constant true.
  Formula();

  static Formula True();
  static Formula False();
  static Formula Var(Atom atom);
  static Formula Not(Formula f);
  // An empty conjunction is true, an empty disjunction false.
  static Formula And(std::vector<Formula> operands);
  static Formula Or(std::vector<Formula> operands);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);

  Kind kind() const;
  // Only meaningful for kAtom.
  const Atom& atom() const;
  const std::vector<Formula>& operands() const;

  bool Evaluate(const AtomSet& true_atoms) const;
  // Atoms occurring anywhere in the formula.
  AtomSet Atoms() const;

 private:
  struct Node;
  static const std::shared_ptr<const Node>& TrueNode();
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Fully parenthesized rendering using the query surface syntax.
std::string ToString(const Formula& f);

// Parses the query syntax: atoms, `~`, `&`, `|`, `->` (right associative),
// `<->`, parentheses and the constants `true` / `false`. Binding strength
// decreases in that order. Atoms may be ground atoms such as `fly(tweety)`.
// Throws ParseError with a 1-based column.
Formula ParseFormula(std::string_view text);

// Syntactic negation.
Formula Negate(const Formula& f);

// fact(F, G): every atom of F true and every atom of G false. Throws
// InputError when F and G overlap.
Formula FactFormula(const AtomSet& true_atoms, const AtomSet& false_atoms);

struct ClauseSet {
  std::vector<Clause> clauses;
  // Fresh "__aux<N>" propositions introduced by the encoding.
  AtomSet auxiliaries;
};

// Definitional clausification. Literals and clause-shaped conjuncts are
// emitted as is; every other subformula gets an auxiliary atom constrained
// to be equivalent to it, so each model of `f` extends uniquely.
ClauseSet ToClauses(const Formula& f);

}  // namespace circ

#endif  // CIRC_FORMULA_H_
