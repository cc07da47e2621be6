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

#include "circ/core.h"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>

namespace circ {

namespace {

std::string Located(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  std::ostringstream out;
  out << line << ":" << column << ": " << message;
  return out.str();
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(Located(message, line, column)),
      message_(message),
      line_(line),
      column_(column) {}

bool IsPlainAtomName(std::string_view name) {
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), IsIdentChar);
}

bool SplitGroundAtom(std::string_view name, std::string* predicate,
                     std::vector<std::string>* args) {
  args->clear();
  const auto open = name.find('(');
  if (open == std::string_view::npos) {
    if (!IsPlainAtomName(name)) return false;
    *predicate = std::string(name);
    return true;
  }
  if (name.back() != ')') return false;
  const std::string_view head = name.substr(0, open);
  if (!IsPlainAtomName(head)) return false;
  std::string_view rest = name.substr(open + 1, name.size() - open - 2);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view arg = rest.substr(0, comma);
    if (!IsPlainAtomName(arg)) return false;
    args->emplace_back(arg);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  *predicate = std::string(head);
  return true;
}

std::string FlattenGroundAtom(std::string_view predicate,
                              const std::vector<std::string>& args) {
  std::string out(predicate);
  if (args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ',';
    out += args[i];
  }
  out += ')';
  return out;
}

AtomSet Union(const AtomSet& a, const AtomSet& b) {
  AtomSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

AtomSet Intersection(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

AtomSet Difference(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool IsSubset(const AtomSet& sub, const AtomSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool Disjoint(const AtomSet& a, const AtomSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

std::string ToString(const AtomSet& atoms) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : atoms) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  return out + "}";
}

Clause Clause::Of(std::initializer_list<Atom> positives,
                  std::initializer_list<Atom> negatives) {
  return Clause{AtomSet(positives), AtomSet(negatives)};
}

bool Clause::SatisfiedBy(const AtomSet& true_atoms) const {
  for (const Atom& p : positives) {
    if (true_atoms.contains(p)) return true;
  }
  for (const Atom& q : negatives) {
    if (!true_atoms.contains(q)) return true;
  }
  return false;
}

std::string ToString(const Clause& clause) {
  if (clause.IsEmpty()) return "false";
  std::string out;
  for (const Atom& q : clause.negatives) {
    if (!out.empty()) out += " | ";
    out += "~" + q;
  }
  for (const Atom& p : clause.positives) {
    if (!out.empty()) out += " | ";
    out += p;
  }
  return out;
}

AtomSet Project(const Interpretation& interp, const AtomSet& phi) {
  return Intersection(interp.atoms(), phi);
}

AtomSet CoProject(const Interpretation& interp, const AtomSet& phi) {
  return Difference(phi, interp.atoms());
}

Policy Policy::Simple(AtomSet minimized, AtomSet varied, AtomSet fixed) {
  Policy p;
  p.tiers.push_back(std::move(minimized));
  p.varied = std::move(varied);
  p.fixed = std::move(fixed);
  return p;
}

AtomSet Policy::Minimized() const { return MinimizedPrefix(tiers.size()); }

AtomSet Policy::MinimizedPrefix(std::size_t k) const {
  AtomSet out;
  for (std::size_t i = 0; i < k && i < tiers.size(); ++i) {
    out.insert(tiers[i].begin(), tiers[i].end());
  }
  return out;
}

void Policy::Validate(const AtomSet& vocabulary) const {
  if (tiers.empty()) throw InputError("policy has no minimized tier");
  AtomSet seen;
  auto add_part = [&](const AtomSet& part, const char* what) {
    for (const Atom& a : part) {
      if (!vocabulary.contains(a)) {
        throw InputError(std::string(what) + " atom '" + a +
                         "' is not in the vocabulary");
      }
      if (!seen.insert(a).second) {
        throw InputError("atom '" + a + "' appears in more than one partition");
      }
    }
  };
  for (const AtomSet& tier : tiers) add_part(tier, "minimized");
  add_part(varied, "varied");
  add_part(fixed, "fixed");
  if (seen.size() != vocabulary.size()) {
    throw InputError("policy does not cover the vocabulary: " +
                     ToString(Difference(vocabulary, seen)) + " unassigned");
  }
}

void Theory::Validate() const {
  for (const Clause& c : clauses) {
    for (const Atom& a : c.Atoms()) {
      if (!vocabulary.contains(a)) {
        throw InputError("clause '" + ToString(c) + "' mentions atom '" + a +
                         "' outside the vocabulary");
      }
    }
  }
  policy.Validate(vocabulary);
}

bool Theory::IsModel(const Interpretation& interp) const {
  return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) {
    return c.SatisfiedBy(interp.atoms());
  });
}

bool LeqPZ(const Interpretation& i1, const Interpretation& i2,
           const Policy& policy) {
  if (policy.tiers.size() != 1) {
    throw InputError("<=^{P;Z} needs a single-tier policy; use PrecOrder");
  }
  return Project(i1, policy.fixed) == Project(i2, policy.fixed) &&
         IsSubset(Project(i1, policy.tiers[0]), Project(i2, policy.tiers[0]));
}

bool LtPZ(const Interpretation& i1, const Interpretation& i2,
          const Policy& policy) {
  return LeqPZ(i1, i2, policy) && !LeqPZ(i2, i1, policy);
}

bool PrecOrder(const Interpretation& i1, const Interpretation& i2,
               const Policy& policy) {
  if (Project(i1, policy.fixed) != Project(i2, policy.fixed)) return false;
  for (const AtomSet& tier : policy.tiers) {
    const AtomSet a = Project(i1, tier);
    const AtomSet b = Project(i2, tier);
    if (!IsSubset(a, b)) return false;
    // Later tiers only constrain pairs that agree on every earlier tier.
    if (a != b) return true;
  }
  return true;
}

bool PrecStrict(const Interpretation& i1, const Interpretation& i2,
                const Policy& policy) {
  return PrecOrder(i1, i2, policy) && !PrecOrder(i2, i1, policy);
}

void ModelSet::InsertAll(const ModelSet& other) {
  members_.insert(other.members_.begin(), other.members_.end());
}

ModelSet ModelSet::ProjectAll(const AtomSet& phi) const {
  ModelSet out;
  for (const AtomSet& m : members_) out.Insert(Intersection(m, phi));
  return out;
}

std::string ToString(const ModelSet& models) {
  std::string out = "{";
  bool first = true;
  for (const AtomSet& m : models) {
    if (!first) out += ", ";
    out += ToString(m);
    first = false;
  }
  return out + "}";
}

}  // namespace circ
