#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "symlift/lp_model.hpp"
#include "symlift/permutation.hpp"

namespace symlift {

// Inputs mapped componentwise by pi, auxiliaries by sigma. Throws
// InvalidArgument unless sigma is a bijection on lp.aux_vars and pi acts on [lp.n].
LinearProgram apply(const LinearProgram& lp, const Permutation& pi, const AuxMap& sigma);

// Whether canonicalize(apply(lp, pi, sigma)) and canonicalize(lp) have equal
// constraint multisets.
bool is_invariant(const LinearProgram& lp, const Permutation& pi, const AuxMap& sigma);

AuxMap identity_map(const LinearProgram& lp);
// (a * b)(v) = a(b(v)).
AuxMap compose(const AuxMap& a, const AuxMap& b);

// Some sigma with is_invariant(lp, pi, sigma), found by partition refinement
// with individualization; nullopt when none exists. Guarded to 64 auxiliaries.
std::optional<AuxMap> find_extension(const LinearProgram& lp, const Permutation& pi);

// Every sigma extending the identity, identity first, then in increasing
// order. Throws GuardError beyond 40320 elements.
std::vector<AuxMap> ext_id(const LinearProgram& lp);

// Orbits of the auxiliaries under ext_id, each sorted, ordered by first member.
std::vector<std::vector<VarId>> ext_id_orbits(const LinearProgram& lp);

bool is_rigid(const LinearProgram& lp);

// Merges every ext_id orbit into its least member, summing coefficients of
// merged variables within a row, until the LP is rigid.
LinearProgram rigidify(const LinearProgram& lp);

// A constraint is identified with its set of LE rows after canonicalization.
using ConstraintKey = std::vector<LinearConstraint>;
ConstraintKey constraint_key(const LinearConstraint& c);

// sigma_pi for every pi in Sym_n (in all_permutations order) of a rigid
// Sym_n-symmetric LP. Throws InvalidArgument on a non-rigid or non-symmetric LP.
struct RigidAction {
  std::vector<Permutation> perms;
  std::vector<AuxMap> sigma;

  VarId act(std::size_t k, const VarId& v) const;
  LinearConstraint act(std::size_t k, const LinearConstraint& c) const;
};
RigidAction rigid_action(const LinearProgram& lp);

using SupportTarget = std::variant<VarId, std::size_t>;  // aux variable or constraint index

struct SupportReport {
  SupportTarget element;
  std::vector<int> support;
  std::size_t verified_against = 0;  // size of the pointwise stabilizer checked
};

// Least support by cardinality, then lexicographically. Needs n <= 6.
SupportReport min_support(const LinearProgram& lp_rigid, const SupportTarget& target);
SupportReport min_support(const LinearProgram& lp, const RigidAction& action, const SupportTarget& target);

// [n]^{(k)}: distinct k-tuples, and for k > n the tuples whose first n
// entries are distinct and whose remaining entries repeat the n-th.
std::vector<std::vector<int>> distinct_tuples(int n, int k);

struct ConstraintId {
  long long orbit = 0;
  std::vector<int> tuple;

  auto operator<=>(const ConstraintId&) const = default;
};

struct ManageableLift {
  LinearProgram lp;
  int k = 0;
  std::vector<ConstraintId> constraint_ids;  // parallel to lp.constraints
};

// The auxiliary y_(t, j) of a manageable lift.
VarId manageable_var(long long orbit, const std::vector<int>& tuple);

// Reindexes a rigid k-supported LP over identifiers (orbit, [n]^{(k)}).
// Exact duplicate rows are merged first. Needs n <= 4 and k <= 3.
ManageableLift make_manageable(const LinearProgram& lp_rigid, int k);

// The three coefficient-equality properties of manageable lifts, checked
// over all pairs. Throws InvalidArgument when the index shape is wrong.
bool check_manageable_properties(const ManageableLift& m, int k);

}  // namespace symlift
