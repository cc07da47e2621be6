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

#include "circ/formula.h"

#include <cctype>
#include <utility>

namespace circ {

struct Formula::Node {
  Kind kind;
  Atom atom;
  std::vector<Formula> operands;
};

const std::shared_ptr<const Formula::Node>& Formula::TrueNode() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::kTrue, {}, {}});
  return node;
}

Formula::Formula() : node_(TrueNode()) {}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::True() { return Formula(); }

Formula Formula::False() {
  return Formula(std::make_shared<const Node>(Node{Kind::kFalse, {}, {}}));
}

Formula Formula::Var(Atom atom) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kAtom, std::move(atom), {}}));
}

Formula Formula::Not(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kNot, {}, {std::move(f)}}));
}

Formula Formula::And(std::vector<Formula> operands) {
  if (operands.empty()) return True();
  if (operands.size() == 1) return operands.front();
  return Formula(
      std::make_shared<const Node>(Node{Kind::kAnd, {}, std::move(operands)}));
}

Formula Formula::Or(std::vector<Formula> operands) {
  if (operands.empty()) return False();
  if (operands.size() == 1) return operands.front();
  return Formula(
      std::make_shared<const Node>(Node{Kind::kOr, {}, std::move(operands)}));
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kImplies, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::Iff(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kIff, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Atom& Formula::atom() const { return node_->atom; }
const std::vector<Formula>& Formula::operands() const {
  return node_->operands;
}

bool Formula::Evaluate(const AtomSet& true_atoms) const {
  const auto& ops = node_->operands;
  switch (node_->kind) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kAtom:
      return true_atoms.contains(node_->atom);
    case Kind::kNot:
      return !ops[0].Evaluate(true_atoms);
    case Kind::kAnd:
      for (const Formula& f : ops) {
        if (!f.Evaluate(true_atoms)) return false;
      }
      return true;
    case Kind::kOr:
      for (const Formula& f : ops) {
        if (f.Evaluate(true_atoms)) return true;
      }
      return false;
    case Kind::kImplies:
      return !ops[0].Evaluate(true_atoms) || ops[1].Evaluate(true_atoms);
    case Kind::kIff:
      return ops[0].Evaluate(true_atoms) == ops[1].Evaluate(true_atoms);
  }
  return false;
}

AtomSet Formula::Atoms() const {
  AtomSet out;
  if (node_->kind == Kind::kAtom) out.insert(node_->atom);
  for (const Formula& f : node_->operands) {
    AtomSet sub = f.Atoms();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::string ToString(const Formula& f) {
  const auto& ops = f.operands();
  auto joined = [&](const char* sep) {
    std::string out = "(";
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i > 0) out += sep;
      out += ToString(ops[i]);
    }
    return out + ")";
  };
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return "true";
    case Formula::Kind::kFalse:
      return "false";
    case Formula::Kind::kAtom:
      return f.atom();
    case Formula::Kind::kNot:
      return "~" + ToString(ops[0]);
    case Formula::Kind::kAnd:
      return joined(" & ");
    case Formula::Kind::kOr:
      return joined(" | ");
    case Formula::Kind::kImplies:
      return joined(" -> ");
    case Formula::Kind::kIff:
      return joined(" <-> ");
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parser: recursive descent, one function per precedence level.

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula Parse() {
    Formula f = ParseIff();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, Peek()) + "'");
    return f;
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, 1, static_cast<int>(pos_) + 1);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool Accept(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula ParseIff() {
    Formula lhs = ParseImplies();
    while (Accept("<->")) lhs = Formula::Iff(lhs, ParseImplies());
    return lhs;
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (Accept("->")) return Formula::Implies(lhs, ParseImplies());
    return lhs;
  }

  Formula ParseOr() {
    std::vector<Formula> ops{ParseAnd()};
    while (Accept("|")) ops.push_back(ParseAnd());
    return Formula::Or(std::move(ops));
  }

  Formula ParseAnd() {
    std::vector<Formula> ops{ParseUnary()};
    while (Accept("&")) ops.push_back(ParseUnary());
    return Formula::And(std::move(ops));
  }

  Formula ParseUnary() {
    if (Accept("~")) return Formula::Not(ParseUnary());
    if (Accept("(")) {
      Formula f = ParseIff();
      if (!Accept(")")) Fail("expected ')'");
      return f;
    }
    return ParseAtom();
  }

  Formula ParseAtom() {
    SkipSpace();
    const std::size_t start = pos_;
    auto ident = [&] {
      const std::size_t begin = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      return text_.substr(begin, pos_ - begin);
    };
    const std::string_view name = ident();
    if (name.empty()) {
      if (pos_ >= text_.size()) Fail("unexpected end of formula");
      Fail("expected an atom, found '" + std::string(1, Peek()) + "'");
    }
    if (!IsPlainAtomName(name)) {
      pos_ = start;
      Fail("invalid atom name '" + std::string(name) + "'");
    }
    std::vector<std::string> args;
    if (Peek() == '(') {
      ++pos_;
      while (true) {
        SkipSpace();
        const std::size_t arg_pos = pos_;
        const std::string_view arg = ident();
        if (!IsPlainAtomName(arg)) {
          pos_ = arg_pos;
          Fail("expected a constant");
        }
        SkipSpace();
        if (Peek() == '(') {
          Fail("function symbols are not supported; ground atoms take "
               "constants only");
        }
        args.emplace_back(arg);
        if (Accept(",")) continue;
        if (Accept(")")) break;
        Fail("expected ',' or ')'");
      }
    }
    if (args.empty() && name == "true") return Formula::True();
    if (args.empty() && name == "false") return Formula::False();
    if (name.starts_with(kAuxPrefix)) {
      pos_ = start;
      Fail("atom names starting with '" + std::string(kAuxPrefix) +
           "' are reserved");
    }
    return Formula::Var(FlattenGroundAtom(name, args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula ParseFormula(std::string_view text) {
  return FormulaParser(text).Parse();
}

Formula Negate(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return Formula::False();
    case Formula::Kind::kFalse:
      return Formula::True();
    default:
      return Formula::Not(f);
  }
}

Formula FactFormula(const AtomSet& true_atoms, const AtomSet& false_atoms) {
  if (!Disjoint(true_atoms, false_atoms)) {
    throw InputError("fact(F, G) needs disjoint sets; both contain " +
                     ToString(Intersection(true_atoms, false_atoms)));
  }
  std::vector<Formula> conjuncts;
  for (const Atom& a : true_atoms) conjuncts.push_back(Formula::Var(a));
  for (const Atom& a : false_atoms) {
    conjuncts.push_back(Formula::Not(Formula::Var(a)));
  }
  return Formula::And(std::move(conjuncts));
}

// ---------------------------------------------------------------------------
// Clausification.

namespace {

struct Literal {
  Atom atom;
  bool positive;
};

Literal Flip(Literal l) { return {std::move(l.atom), !l.positive}; }

class Clausifier {
 public:
  ClauseSet Run(const Formula& f) {
    AddConjunct(f);
    return std::move(out_);
  }

 private:
  void Emit(const std::vector<Literal>& lits) {
    Clause c;
    for (const Literal& l : lits) {
      (l.positive ? c.positives : c.negatives).insert(l.atom);
    }
    out_.clauses.push_back(std::move(c));
  }

  // Appends the literals of `f` when it is a disjunction of literals.
  static bool CollectLiterals(const Formula& f, std::vector<Literal>* lits) {
    switch (f.kind()) {
      case Formula::Kind::kFalse:
        return true;
      case Formula::Kind::kAtom:
        lits->push_back({f.atom(), true});
        return true;
      case Formula::Kind::kNot: {
        const Formula& g = f.operands()[0];
        if (g.kind() == Formula::Kind::kAtom) {
          lits->push_back({g.atom(), false});
          return true;
        }
        if (g.kind() == Formula::Kind::kNot) {
          return CollectLiterals(g.operands()[0], lits);
        }
        return false;
      }
      case Formula::Kind::kOr:
        for (const Formula& g : f.operands()) {
          if (!CollectLiterals(g, lits)) return false;
        }
        return true;
      default:
        return false;
    }
  }

  void AddConjunct(const Formula& f) {
    if (f.kind() == Formula::Kind::kTrue) return;
    if (f.kind() == Formula::Kind::kAnd) {
      for (const Formula& g : f.operands()) AddConjunct(g);
      return;
    }
    std::vector<Literal> lits;
    if (CollectLiterals(f, &lits)) {
      Emit(lits);
      return;
    }
    Emit({Encode(f)});
  }

  Atom Fresh() {
    Atom a = std::string(kAuxPrefix) + std::to_string(next_aux_++);
    out_.auxiliaries.insert(a);
    return a;
  }

  // Returns a literal equivalent to `f`, defining auxiliaries as needed.
  Literal Encode(const Formula& f) {
    const auto& ops = f.operands();
    switch (f.kind()) {
      case Formula::Kind::kAtom:
        return {f.atom(), true};
      case Formula::Kind::kNot:
        return Flip(Encode(ops[0]));
      case Formula::Kind::kTrue:
      case Formula::Kind::kFalse: {
        Literal x{Fresh(), true};
        Emit({f.kind() == Formula::Kind::kTrue ? x : Flip(x)});
        return x;
      }
      case Formula::Kind::kAnd:
      case Formula::Kind::kOr: {
        const bool is_and = f.kind() == Formula::Kind::kAnd;
        std::vector<Literal> subs;
        for (const Formula& g : ops) subs.push_back(Encode(g));
        Literal x{Fresh(), true};
        // and: x -> s_i for all i, (s_1 & ... & s_n) -> x.
        // or:  s_i -> x for all i, x -> (s_1 | ... | s_n).
        std::vector<Literal> big{is_and ? x : Flip(x)};
        for (const Literal& s : subs) {
          if (is_and) {
            Emit({Flip(x), s});
            big.push_back(Flip(s));
          } else {
            Emit({Flip(s), x});
            big.push_back(s);
          }
        }
        Emit(big);
        return x;
      }
      case Formula::Kind::kImplies: {
        Literal a = Encode(ops[0]);
        Literal b = Encode(ops[1]);
        Literal x{Fresh(), true};
        Emit({Flip(x), Flip(a), b});
        Emit({x, a});
        Emit({x, Flip(b)});
        return x;
      }
      case Formula::Kind::kIff: {
        Literal a = Encode(ops[0]);
        Literal b = Encode(ops[1]);
        Literal x{Fresh(), true};
        Emit({Flip(x), Flip(a), b});
        Emit({Flip(x), a, Flip(b)});
        Emit({x, a, b});
        Emit({x, Flip(a), Flip(b)});
        return x;
      }
    }
    return {Fresh(), true};
  }

  ClauseSet out_;
  int next_aux_ = 0;
};

}  // namespace

ClauseSet ToClauses(const Formula& f) { return Clausifier().Run(f); }

}  // namespace circ
