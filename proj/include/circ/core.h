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

// Vocabulary, clauses, circumscription policies and the preorders over
// interpretations that define which models are minimal.

#ifndef CIRC_CORE_H_
#define CIRC_CORE_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circ {

// A proposition is identified by its name. Ground first-order atoms use the
// flattened form "pred(c1,c2)".
using Atom = std::string;
using AtomSet = std::set<Atom>;

// Prefix reserved for clausification auxiliaries.
inline constexpr std::string_view kAuxPrefix = "__aux";

// ---------------------------------------------------------------------------
// Errors. The CLI maps each class onto an exit status.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }
  // The message without the location prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

// Inconsistent theory or policy (overlapping partitions, unknown atoms...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (oracle vocabulary size, iteration budget) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------

// True iff `name` is a plain proposition token: letters, digits and '_',
// not starting with a digit.
bool IsPlainAtomName(std::string_view name);

// Splits a flattened ground atom "p(a,b)" into predicate and constants. A
// plain token yields an empty argument list. Returns false on malformed input.
bool SplitGroundAtom(std::string_view name, std::string* predicate,
                     std::vector<std::string>* args);
std::string FlattenGroundAtom(std::string_view predicate,
                              const std::vector<std::string>& args);

AtomSet Union(const AtomSet& a, const AtomSet& b);
AtomSet Intersection(const AtomSet& a, const AtomSet& b);
AtomSet Difference(const AtomSet& a, const AtomSet& b);
bool IsSubset(const AtomSet& sub, const AtomSet& super);
bool Disjoint(const AtomSet& a, const AtomSet& b);

// Renders "{a, b}" with atoms in sorted order.
std::string ToString(const AtomSet& atoms);

struct Clause {
  AtomSet positives;
  AtomSet negatives;

  static Clause Of(std::initializer_list<Atom> positives,
                   std::initializer_list<Atom> negatives = {});

  bool IsEmpty() const { return positives.empty() && negatives.empty(); }
  // Some atom occurs with both signs.
  bool IsTautology() const { return !Disjoint(positives, negatives); }
  bool SatisfiedBy(const AtomSet& true_atoms) const;
  AtomSet Atoms() const { return Union(positives, negatives); }

  auto operator<=>(const Clause&) const = default;
  bool operator==(const Clause&) const = default;
};

// "~bird | ab | fly"; the empty clause renders as "false".
std::string ToString(const Clause& clause);

// A total truth assignment, stored as the set of true propositions.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(AtomSet true_atoms) : atoms_(std::move(true_atoms)) {}
  Interpretation(std::initializer_list<Atom> true_atoms) : atoms_(true_atoms) {}

  const AtomSet& atoms() const { return atoms_; }
  bool Holds(const Atom& atom) const { return atoms_.contains(atom); }

  auto operator<=>(const Interpretation&) const = default;
  bool operator==(const Interpretation&) const = default;

 private:
  AtomSet atoms_;
};

// I[phi]: the atoms of phi true in I.
AtomSet Project(const Interpretation& interp, const AtomSet& phi);
// The atoms of phi false in I.
AtomSet CoProject(const Interpretation& interp, const AtomSet& phi);

// Minimized tiers (tier 0 minimized first), varied set Z and fixed set Q.
struct Policy {
  std::vector<AtomSet> tiers;
  AtomSet varied;
  AtomSet fixed;

  // Single-tier policy minimizing `minimized`.
  static Policy Simple(AtomSet minimized, AtomSet varied, AtomSet fixed);

  // P1 u ... u Pn.
  AtomSet Minimized() const;
  // P1 u ... u Pk for the first k tiers.
  AtomSet MinimizedPrefix(std::size_t k) const;

  // Throws InputError unless the tiers, Z and Q are non-empty-tiered,
  // pairwise disjoint and exactly cover `vocabulary`.
  void Validate(const AtomSet& vocabulary) const;

  bool operator==(const Policy&) const = default;
};

struct Theory {
  AtomSet vocabulary;
  std::set<Clause> clauses;
  Policy policy;

  // Throws InputError when a clause mentions an atom outside the vocabulary
  // or the policy is not a partition of it.
  void Validate() const;
  bool IsModel(const Interpretation& interp) const;
};

// I1 <=^{P;Z} I2 for a single-tier policy: equal on Q, I1[P] subset of I2[P].
// Throws InputError for multi-tier policies.
bool LeqPZ(const Interpretation& i1, const Interpretation& i2,
           const Policy& policy);
bool LtPZ(const Interpretation& i1, const Interpretation& i2,
          const Policy& policy);

// The prioritized preorder: equal on Q and, for every tier i, if I1 and I2
// agree on all earlier tiers then I1[Pi] is a subset of I2[Pi].
bool PrecOrder(const Interpretation& i1, const Interpretation& i2,
               const Policy& policy);
bool PrecStrict(const Interpretation& i1, const Interpretation& i2,
                const Policy& policy);

// Duplicate-free collection of atom sets (interpretations or projections),
// ordered lexicographically by their sorted atom names.
class ModelSet {
 public:
  using Container = std::set<AtomSet>;
  using const_iterator = Container::const_iterator;

  ModelSet() = default;
  ModelSet(std::initializer_list<AtomSet> members) : members_(members) {}

  bool Insert(const AtomSet& member) { return members_.insert(member).second; }
  bool Insert(const Interpretation& m) { return Insert(m.atoms()); }
  void InsertAll(const ModelSet& other);
  bool Contains(const AtomSet& member) const {
    return members_.contains(member);
  }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  // Projection of every member onto `phi`.
  ModelSet ProjectAll(const AtomSet& phi) const;

  bool operator==(const ModelSet&) const = default;

 private:
  Container members_;
};

std::string ToString(const ModelSet& models);

}  // namespace circ

#endif  // CIRC_CORE_H_
