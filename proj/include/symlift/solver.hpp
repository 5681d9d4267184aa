#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symlift/error.hpp"
#include "symlift/lp_model.hpp"

namespace symlift {

enum class Sense { Min, Max };

enum class SolveStatus { Infeasible, Unbounded, Optimal };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  // Optimal: objective value and a vertex (total on the LP's occurring
  // variables and the objective's variables).
  Rational value;
  Assignment point;
  // Unbounded: a feasible point and a direction along which the objective
  // improves without bound while staying feasible.
  Assignment ray;
};

using Objective = std::map<VarId, Rational>;

// Exact phase-1 simplex decision.
bool feasible(const LinearProgram& lp);

// Exact two-phase simplex with least-index pivoting. `objective` may mention
// variables that do not occur in any constraint; they are free.
SolveResult optimize(const LinearProgram& lp, const Objective& objective, Sense sense);

// nullopt means the side is unbounded.
struct VariableRange {
  std::optional<Rational> min;
  std::optional<Rational> max;

  bool degenerate() const { return min && max && *min == *max; }
};

// Throws InvalidArgument when lp is infeasible.
VariableRange variable_range(const LinearProgram& lp, const VarId& v);

// Brute-force basic-solution enumeration over active subsystems. Guarded to
// at most 8 variables and 40 constraints; throws UnboundedPolyhedron when the
// feasible region is nonempty but contains a ray or a line.
std::vector<Assignment> enumerate_vertices(const LinearProgram& lp);

class UnboundedPolyhedron : public Error {
 public:
  using Error::Error;
};

}  // namespace symlift
