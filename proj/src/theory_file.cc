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

#include "circ/theory_file.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace circ {

namespace {

struct DirectiveItem {
  std::string predicate;
  std::vector<std::string> args;
  bool bare = true;  // no parenthesized argument list
  int column = 0;
};

// Cursor over one line; columns are 1-based.
class LineScanner {
 public:
  LineScanner(std::string_view line, int line_no, std::size_t offset = 0)
      : line_(line), line_no_(line_no), pos_(offset) {}

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line_no_, column());
  }

  int column() const { return static_cast<int>(pos_) + 1; }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= line_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }
  bool Accept(char c) {
    if (Peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string Ident(const char* what) {
    SkipSpace();
    const std::size_t begin = pos_;
    while (pos_ < line_.size() &&
           (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
            line_[pos_] == '_')) {
      ++pos_;
    }
    std::string token(line_.substr(begin, pos_ - begin));
    if (!IsPlainAtomName(token)) {
      pos_ = begin;
      Fail(std::string("expected ") + what);
    }
    return token;
  }

  int Number(const char* what) {
    SkipSpace();
    const std::size_t begin = pos_;
    while (pos_ < line_.size() &&
           std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
    if (begin == pos_ || pos_ - begin > 4) {
      pos_ = begin;
      Fail(std::string("expected ") + what);
    }
    return std::stoi(std::string(line_.substr(begin, pos_ - begin)));
  }

  // name or name(arg, ...).
  DirectiveItem Item() {
    DirectiveItem item;
    SkipSpace();
    item.column = column();
    item.predicate = Ident("a predicate or atom name");
    if (item.predicate.starts_with(kAuxPrefix)) {
      pos_ = item.column - 1;
      Fail("names starting with '" + std::string(kAuxPrefix) +
           "' are reserved");
    }
    if (pos_ < line_.size() && line_[pos_] == '(') {
      ++pos_;
      item.bare = false;
      while (true) {
        item.args.push_back(Ident("a constant or variable"));
        if (Peek() == '(') {
          Fail("function symbols are not supported; only function-free "
               "clauses can be grounded");
        }
        if (Accept(',')) continue;
        if (Accept(')')) break;
        Fail("expected ',' or ')'");
      }
    }
    return item;
  }

  std::string_view Rest() {
    SkipSpace();
    return line_.substr(pos_);
  }

 private:
  void SkipSpace() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view line_;
  int line_no_;
  std::size_t pos_;
};

struct RawDirective {
  std::vector<DirectiveItem> items;
  int line;
};

std::string_view StripLine(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.remove_suffix(1);
  }
  if (!line.empty() && line.back() == '.') line.remove_suffix(1);
  return line;
}

// Leading keyword followed by whitespace, or empty.
std::string_view Keyword(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
    ++i;
  }
  std::size_t j = i;
  while (j < line.size() && std::isalpha(static_cast<unsigned char>(line[j]))) {
    ++j;
  }
  if (j == line.size() || !std::isspace(static_cast<unsigned char>(line[j]))) {
    return {};
  }
  const std::string_view word = line.substr(i, j - i);
  for (std::string_view k : {"const", "pred", "minimize", "vary", "fix",
                             "query"}) {
    if (word == k) return word;
  }
  return {};
}

std::vector<DirectiveItem> ItemList(LineScanner& scan) {
  std::vector<DirectiveItem> items;
  while (!scan.AtEnd()) {
    items.push_back(scan.Item());
    scan.Accept(',');
  }
  return items;
}

AtomSet Expand(const std::vector<DirectiveItem>& items, int line,
               const std::map<std::string, int>& arities,
               const std::vector<std::string>& constants) {
  AtomSet out;
  for (const DirectiveItem& item : items) {
    auto it = arities.find(item.predicate);
    if (item.bare) {
      const int arity = it == arities.end() ? 0 : it->second;
      for (Atom& a : GroundAtoms(item.predicate, arity, constants)) {
        out.insert(std::move(a));
      }
      continue;
    }
    for (const std::string& arg : item.args) {
      if (IsVariable(arg)) {
        throw ParseError("directive atoms must be ground", line, item.column);
      }
      if (std::find(constants.begin(), constants.end(), arg) ==
          constants.end()) {
        throw ParseError("unknown constant '" + arg + "'", line, item.column);
      }
    }
    if (it == arities.end() ||
        it->second != static_cast<int>(item.args.size())) {
      throw ParseError("'" + item.predicate + "' used with arity " +
                           std::to_string(item.args.size()) +
                           " but declared otherwise",
                       line, item.column);
    }
    out.insert(FlattenGroundAtom(item.predicate, item.args));
  }
  return out;
}

// Builds the final policy; unmentioned atoms default to fixed.
void BuildPolicy(TheoryFile* file) {
  Policy policy;
  policy.tiers = file->declared_tiers;
  if (policy.tiers.empty()) {
    policy.tiers.emplace_back();
    file->warnings.push_back("no minimize directive; nothing is minimized");
  }
  policy.varied = file->declared_varied;
  policy.fixed = file->declared_fixed;
  AtomSet mentioned = Union(policy.Minimized(), Union(policy.varied, policy.fixed));
  const AtomSet rest = Difference(file->theory.vocabulary, mentioned);
  if (!rest.empty()) {
    file->warnings.push_back("atoms not named in any directive default to "
                             "fixed: " + ToString(rest));
    policy.fixed.insert(rest.begin(), rest.end());
  }
  file->theory.policy = std::move(policy);
  file->theory.Validate();
}

}  // namespace

TheoryFile ParseTheoryFile(std::string_view text) {
  TheoryFile file;
  std::vector<RawDirective> minimize;
  std::vector<RawDirective> vary;
  std::vector<RawDirective> fix;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = StripLine(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const std::string_view keyword = Keyword(line);
    const std::size_t after =
        keyword.empty() ? 0 : line.find(keyword) + keyword.size();
    LineScanner scan(line, line_no, after);

    if (keyword == "const") {
      while (!scan.AtEnd()) {
        const int col = scan.column();
        std::string c = scan.Ident("a constant");
        if (IsVariable(c)) {
          throw ParseError("constants must not start with an uppercase letter",
                           line_no, col);
        }
        file.spec.constants.push_back(std::move(c));
        scan.Accept(',');
      }
    } else if (keyword == "pred") {
      while (!scan.AtEnd()) {
        const std::string name = scan.Ident("a predicate name");
        if (!scan.Accept('/')) scan.Fail("expected '/arity'");
        const int col = scan.column();
        const int arity = scan.Number("an arity");
        auto [it, inserted] = file.spec.predicates.emplace(name, arity);
        if (!inserted && it->second != arity) {
          throw ParseError("predicate '" + name + "' redeclared with arity " +
                               std::to_string(arity),
                           line_no, col);
        }
        scan.Accept(',');
      }
    } else if (keyword == "minimize") {
      minimize.push_back({ItemList(scan), line_no});
      if (minimize.back().items.empty()) scan.Fail("empty minimize directive");
    } else if (keyword == "vary") {
      vary.push_back({ItemList(scan), line_no});
    } else if (keyword == "fix") {
      fix.push_back({ItemList(scan), line_no});
    } else if (keyword == "query") {
      const std::string name = scan.Ident("a query name");
      if (!scan.Accept(':')) scan.Fail("expected ':' after the query name");
      const std::string_view rest = scan.Rest();
      const int col = scan.column();
      try {
        file.queries.push_back({name, ParseFormula(rest), line_no});
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line_no, col - 1 + e.column());
      }
    } else {
      SchemaClause clause;
      clause.line = line_no;
      do {
        SchemaLiteral lit;
        lit.positive = !scan.Accept('~');
        DirectiveItem item = scan.Item();
        lit.predicate = std::move(item.predicate);
        lit.args = std::move(item.args);
        clause.literals.push_back(std::move(lit));
      } while (scan.Accept('|'));
      if (!scan.AtEnd()) {
        scan.Fail("unexpected '" + std::string(1, scan.Peek()) +
                  "' in clause; literals are joined by '|'");
      }
      file.spec.clauses.push_back(std::move(clause));
    }
  }

  // Bare 0-ary names in directives are propositions even if no clause uses
  // them.
  for (const auto* group : {&minimize, &vary, &fix}) {
    for (const RawDirective& d : *group) {
      for (const DirectiveItem& item : d.items) {
        if (item.bare && !file.spec.predicates.contains(item.predicate)) {
          bool used = false;
          for (const SchemaClause& c : file.spec.clauses) {
            for (const SchemaLiteral& l : c.literals) {
              used = used || l.predicate == item.predicate;
            }
          }
          if (!used) file.spec.predicates.emplace(item.predicate, 0);
        }
      }
    }
  }

  file.arities = ResolveArities(file.spec);
  const GroundResult ground = Ground(file.spec);
  file.theory.vocabulary = ground.vocabulary;
  for (const GroundClause& g : ground.clauses) {
    if (g.tautology) ++file.tautologies;
    file.theory.clauses.insert(g.clause);
  }

  for (const NamedQuery& q : file.queries) {
    for (const Atom& a : q.formula.Atoms()) {
      if (!file.theory.vocabulary.contains(a)) {
        throw ParseError("query '" + q.name + "' mentions unknown atom '" + a +
                             "'",
                         q.line, 1);
      }
    }
  }

  AtomSet seen;
  auto claim = [&](const AtomSet& atoms, int line) {
    for (const Atom& a : atoms) {
      if (!seen.insert(a).second) {
        throw ParseError("atom '" + a + "' is assigned to more than one "
                         "partition", line, 1);
      }
    }
  };
  for (const RawDirective& d : minimize) {
    AtomSet tier = Expand(d.items, d.line, file.arities, file.spec.constants);
    claim(tier, d.line);
    file.declared_tiers.push_back(std::move(tier));
  }
  for (const RawDirective& d : vary) {
    AtomSet atoms = Expand(d.items, d.line, file.arities, file.spec.constants);
    claim(atoms, d.line);
    file.declared_varied.insert(atoms.begin(), atoms.end());
  }
  for (const RawDirective& d : fix) {
    AtomSet atoms = Expand(d.items, d.line, file.arities, file.spec.constants);
    claim(atoms, d.line);
    file.declared_fixed.insert(atoms.begin(), atoms.end());
  }
  BuildPolicy(&file);
  return file;
}

TheoryFile LoadTheoryFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseTheoryFile(text.str());
}

void OverrideTiers(TheoryFile* file, std::string_view tiers) {
  std::vector<AtomSet> parsed;
  AtomSet all;
  std::size_t start = 0;
  while (start <= tiers.size()) {
    std::size_t end = tiers.find('>', start);
    if (end == std::string_view::npos) end = tiers.size();
    LineScanner scan(tiers.substr(0, end), 1, start);
    const std::vector<DirectiveItem> items = ItemList(scan);
    if (items.empty()) {
      throw ParseError("empty tier in --tiers", 1, static_cast<int>(start) + 1);
    }
    AtomSet tier = Expand(items, 1, file->arities, file->spec.constants);
    for (const Atom& a : tier) {
      if (!file->theory.vocabulary.contains(a)) {
        throw InputError("--tiers names unknown atom '" + a + "'");
      }
      if (!all.insert(a).second) {
        throw InputError("--tiers lists '" + a + "' twice");
      }
    }
    parsed.push_back(std::move(tier));
    start = end + 1;
  }
  file->declared_tiers = std::move(parsed);
  file->declared_varied = Difference(file->declared_varied, all);
  file->declared_fixed = Difference(file->declared_fixed, all);
  file->warnings.clear();
  BuildPolicy(file);
}

std::string WriteTheoryFile(const Theory& theory) {
  std::string out;
  auto list = [](const AtomSet& atoms) {
    std::string s;
    for (const Atom& a : atoms) {
      if (!s.empty()) s += ", ";
      s += a;
    }
    return s;
  };
  // Declaring every atom keeps atoms that occur in no clause.
  for (const Atom& a : theory.vocabulary) out += "pred " + a + "/0.\n";
  for (const AtomSet& tier : theory.policy.tiers) {
    if (!tier.empty()) out += "minimize " + list(tier) + ".\n";
  }
  if (!theory.policy.varied.empty()) {
    out += "vary " + list(theory.policy.varied) + ".\n";
  }
  if (!theory.policy.fixed.empty()) {
    out += "fix " + list(theory.policy.fixed) + ".\n";
  }
  for (const Clause& c : theory.clauses) {
    if (c.IsEmpty()) {
      throw InputError("the empty clause has no surface syntax");
    }
    out += ToString(c) + ".\n";
  }
  return out;
}

}  // namespace circ
