#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symlift/rational.hpp"

namespace symlift {

struct RelationSymbol {
  std::string name;
  int arity = 0;

  auto operator<=>(const RelationSymbol&) const = default;
};

using Vocabulary = std::vector<RelationSymbol>;

// One step of an auxiliary variable's path. `dom` holds indices in [n] that
// the symmetric group acts on; `par` holds fixed parameters.
struct Segment {
  std::string tag;
  std::vector<int> dom;
  std::vector<long long> par;

  auto operator<=>(const Segment&) const = default;
};

// Structured variable identifier. Inputs are x_{R(i_1..i_r)} over L(n);
// auxiliaries carry a nonempty path of segments.
struct VarId {
  enum class Kind { Input, Aux };

  Kind kind = Kind::Input;
  std::string rel;
  std::vector<int> tuple;
  std::vector<Segment> path;

  static VarId input(std::string rel, std::vector<int> tuple);
  static VarId aux(std::vector<Segment> path);
  static VarId aux(std::string tag, std::vector<int> dom = {},
                   std::vector<long long> par = {});

  bool is_input() const { return kind == Kind::Input; }
  bool is_aux() const { return kind == Kind::Aux; }

  // Compact human-readable form, e.g. "E(1,2)" or "g[1,2]/z{0,3}".
  std::string str() const;

  auto operator<=>(const VarId&) const = default;
};

// Extends a prefix path by one segment.
VarId child_var(const std::vector<Segment>& prefix, Segment last);

enum class Rel { Le, Eq };

struct LinearConstraint {
  std::map<VarId, Rational> coeffs;
  Rel rel = Rel::Le;
  Rational rhs;

  // Adds `c * v`, dropping the entry if it cancels to zero.
  LinearConstraint& add(const VarId& v, const Rational& c);

  std::string str() const;

  auto operator<=>(const LinearConstraint&) const = default;
};

// Convenience builders: sum(coeffs) <= rhs, sum(coeffs) = rhs, and
// lo <= v <= hi as two LE rows.
LinearConstraint le(std::map<VarId, Rational> coeffs, Rational rhs);
LinearConstraint eq(std::map<VarId, Rational> coeffs, Rational rhs);

struct LinearProgram {
  int n = 1;
  Vocabulary vocabulary;
  std::set<VarId> aux_vars;
  std::vector<LinearConstraint> constraints;

  // Throws InvalidArgument when a constraint mentions an input outside the
  // vocabulary or [n], or an auxiliary not listed in aux_vars.
  void validate() const;

  // Whether `v` is an input over the vocabulary and [n] or a listed aux.
  bool has_variable(const VarId& v) const;

  // Distinct variables occurring in some constraint, in VarId order.
  std::set<VarId> occurring_variables() const;

  // Every input VarId of L(n), in lexicographic order.
  std::vector<VarId> input_variables() const;

  // lo <= v <= hi appended as two LE rows.
  void add_box(const VarId& v, const Rational& lo, const Rational& hi);
  void add(LinearConstraint c) { constraints.push_back(std::move(c)); }

  // Adds every aux var and constraint of `other` (vocabularies must agree).
  void append(const LinearProgram& other);

  bool operator==(const LinearProgram&) const = default;
};

using Assignment = std::map<VarId, Rational>;

// A bijection on auxiliary variables.
using AuxMap = std::map<VarId, VarId>;

// (u+1) * v * b with u the occurring variables, v the LE rows after splitting
// equalities and b the maximum magnitude bit length of any entry.
std::size_t lp_size(const LinearProgram& lp);

// Folds assigned values into right-hand sides; assigned aux vars disappear
// from aux_vars. Constant-only rows are kept.
LinearProgram substitute(const LinearProgram& lp, const Assignment& a);

// Equalities split into two LE rows, zero terms dropped.
LinearProgram canonicalize(const LinearProgram& lp);

// Exact check that `point` (total on the occurring variables) satisfies c.
bool satisfies(const LinearConstraint& c, const Assignment& point);
bool satisfies(const LinearProgram& lp, const Assignment& point);

// All tuples of [n]^k in lexicographic order (1-based entries).
std::vector<std::vector<int>> all_tuples(int n, int k);

}  // namespace symlift
