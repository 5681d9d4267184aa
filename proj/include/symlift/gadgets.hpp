#pragma once

#include <optional>
#include <vector>

#include "symlift/lp_model.hpp"
#include "symlift/permutation.hpp"

namespace symlift {

using Prefix = std::vector<Segment>;

struct GadgetOutput {
  LinearProgram lp;
  std::vector<VarId> x;
  std::optional<VarId> y;
  std::vector<VarId> z;  // bit variables, least significant first
  Prefix prefix;
};

// Where the coordinate index i of z_{t,i} / z_{t,r,i} is stored: in `dom`
// when it names a caller index in [n], otherwise as the last `par` entry.
enum class SlotIndex { Domain, Param };

// |n|: the number of binary digits of n >= 1.
int bit_length(long long n);

// x_1..x_n as inputs X(1)..X(n) of a unary relation X.
std::vector<VarId> standard_inputs(int n);
// The output Y() of a nullary relation Y.
VarId standard_output();

// {sum x = t, 0 <= x_k <= 1}.
GadgetOutput ex_slice_lp(int n, long long t, const std::vector<VarId>& xs);

// Lift of the parity polytope with T = {0..floor(n/2)}.
GadgetOutput pp_lift(int n, const std::vector<VarId>& xs, const Prefix& prefix = {},
                     SlotIndex slots = SlotIndex::Domain);

// Lift of PP(n, q) with T = {0..floor(n/2^{q+1})} x {0..2^q - 1}.
GadgetOutput truncated_pp_lift(int n, int q, const std::vector<VarId>& xs,
                               const Prefix& prefix = {}, SlotIndex slots = SlotIndex::Domain);

// The cascade of truncated parity memberships producing bits b_1..b_{|n|},
// the flipped binary digits of sum x.
GadgetOutput bit_extraction_lp(int n, const std::vector<VarId>& xs, const Prefix& prefix = {});

// Bit extraction plus the comparison block with the |n|-bit representation of t.
GadgetOutput ex_gate_lp(int n, long long t, const std::vector<VarId>& xs, const VarId& y,
                        const Prefix& prefix = {});

enum class BoolGate { And, Or, Not };

GadgetOutput gate_lp(BoolGate kind, const std::vector<VarId>& xs, const VarId& y);

// Image of a gadget-internal variable: `from` is replaced by `to` and the
// coordinate index i of a z-variable becomes tau[i-1] when i <= tau.size().
// Variables outside `from` are returned unchanged.
VarId relabel_internal(const VarId& v, const Prefix& from, const Prefix& to,
                       const std::vector<int>& tau);

// The extension of an x-slot permutation to the gadget's auxiliaries: each
// z_{...,i} goes to z_{...,pi(i)}, everything else stays in place.
AuxMap slot_witness(const GadgetOutput& g, const Permutation& pi);

}  // namespace symlift
