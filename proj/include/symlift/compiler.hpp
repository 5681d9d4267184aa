#pragma once

#include <map>
#include <vector>

#include "symlift/circuit.hpp"
#include "symlift/gadgets.hpp"

namespace symlift {

struct GateRecipe {
  GateId gate;
  GateKind kind;
  Prefix prefix;  // gadget prefix; empty when the gate adds no auxiliaries
};

struct CompiledLift {
  LinearProgram lp;
  Circuit circuit;
  std::map<GateId, VarId> gate_var;
  std::vector<GateRecipe> witness_recipe;  // parallel to circuit.gates
};

// The variable y_(F,s) of a gate: tag F, dom s.
VarId gate_variable(const GateId& id);

// LP(C) for a threshold-free circuit: 0 <= y <= 1 per gate, the gate's
// defining rows, and y_out = 1. Throws InvalidArgument on Th gates.
CompiledLift compile(const Circuit& c);

// The extension of pi to the auxiliaries of LP(C): y_(F,s) goes to
// y_(F,pi.s) and each EX gadget is carried to its image gadget with its
// x-slots matched through the gate map.
AuxMap symmetry_witness(const CompiledLift& cl, const Permutation& pi);

// From p over inputs y_ij (one binary relation) builds Q over inputs E(i,j):
// y_ij and p's auxiliaries become auxiliaries and 0 <= y_ij <= x_ij is added.
LinearProgram subgraph_restriction_lift(const LinearProgram& p);

// The auxiliary standing for p's input y_ij inside subgraph_restriction_lift.
VarId restricted_var(int i, int j);

}  // namespace symlift
