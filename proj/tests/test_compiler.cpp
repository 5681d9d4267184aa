#include <doctest.h>

#include "corpus.hpp"
#include "symlift/compiler.hpp"
#include "symlift/error.hpp"
#include "symlift/solver.hpp"
#include "symlift/symmetry.hpp"

using namespace symlift;
using corpus::e;

namespace {

GateId gid(std::string f, std::vector<int> t = {}) { return {std::move(f), std::move(t)}; }

Assignment as_values(const InputBits& b) {
  Assignment a;
  for (const auto& [v, bit] : b) a.emplace(v, Rational(bit ? 1 : 0));
  return a;
}

// Exhaustive agreement of LP(C) with C on every 0/1 input; returns the
// number of accepted inputs.
int check_equivalent(const Circuit& c) {
  const CompiledLift cl = compile(c);
  const auto inputs = circuit_inputs(c);
  int accepted = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << inputs.size()); ++m) {
    const InputBits b = bits_from_mask(inputs, m);
    const bool v = evaluate(c, b);
    CHECK(feasible(substitute(cl.lp, as_values(b))) == v);
    accepted += v;
  }
  return accepted;
}

std::size_t ones(const InputBits& b) {
  std::size_t k = 0;
  for (const auto& [v, bit] : b) k += bit;
  return k;
}

}  // namespace

TEST_CASE("a single-input circuit accepts graphs with that edge") {
  const Circuit c = materialize(corpus::single_edge_input(1, 2), 2);
  const CompiledLift cl = compile(c);
  const auto inputs = circuit_inputs(c);
  for (std::uint64_t m = 0; m < 16; ++m) {
    const InputBits b = bits_from_mask(inputs, m);
    CHECK(feasible(substitute(cl.lp, as_values(b))) == b.at(e(1, 2)));
  }
}

TEST_CASE("any_edge at n = 2 accepts the 15 nonempty digraphs") {
  CHECK(check_equivalent(materialize(corpus::any_edge(), 2)) == 15);
}

TEST_CASE("a threshold circuit compiles after elimination") {
  const Circuit th = materialize(corpus::at_least_edges(2), 2);
  CHECK_THROWS_AS(compile(th), InvalidArgument);
  const Circuit c = eliminate_thresholds(th);
  const CompiledLift cl = compile(c);
  const auto inputs = circuit_inputs(c);
  for (std::uint64_t m = 0; m < 16; ++m) {
    const InputBits b = bits_from_mask(inputs, m);
    CHECK(feasible(substitute(cl.lp, as_values(b))) == (ones(b) >= 2));
  }
}

TEST_CASE("the corpus compiles to equivalent lifts") {
  for (int n = 1; n <= 2; ++n)
    for (const auto& nc : corpus::circuits(n)) {
      if (n < nc.min_n) continue;
      CAPTURE(nc.name);
      check_equivalent(eliminate_thresholds(materialize(nc.spec, n)));
    }
}

TEST_CASE("gate variables") {
  const Circuit c = materialize(corpus::any_edge(), 2);
  const CompiledLift cl = compile(c);
  CHECK(cl.gate_var.size() == c.gates.size());
  std::set<VarId> seen;
  for (const auto& [g, v] : cl.gate_var) {
    CHECK(v == gate_variable(g));
    CHECK(seen.insert(v).second);
  }
  const VarId out = cl.gate_var.at(c.output_gate().id);
  CHECK(out.str() == "any");
  bool pinned = false;
  for (const auto& row : cl.lp.constraints)
    if (row.rel == Rel::Eq && row.coeffs.size() == 1 && row.coeffs.count(out) && row.rhs == 1) pinned = true;
  CHECK(pinned);
  CHECK(gate_variable(gid("E", {2, 1})) == VarId::aux("E", {2, 1}, {}));
}

TEST_CASE("Boolean-only circuits add no gadget auxiliaries") {
  for (auto spec : {corpus::any_edge(), corpus::no_edge(), corpus::closed_walk3()}) {
    const Circuit c = materialize(spec, 3);
    const CompiledLift cl = compile(c);
    CHECK(cl.lp.aux_vars.size() == c.gates.size());
    std::size_t rows = 1;
    for (const auto& g : c.gates) rows += 2 + (g.kind.type == GateKind::Type::Input ? 1 : 3 * (g.children.size() + 1));
    CHECK(cl.lp.constraints.size() <= rows);
  }
}

TEST_CASE("compiled size stays within the per-gate bound") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& nc : corpus::circuits(n)) {
      if (n < nc.min_n) continue;
      CAPTURE(nc.name);
      const Circuit c = eliminate_thresholds(materialize(nc.spec, n));
      const LinearProgram lp = canonicalize(compile(c).lp);
      std::size_t vars = circuit_inputs(c).size();
      std::size_t rows = 1;
      for (const auto& g : c.gates) {
        const std::size_t m = g.children.size();
        vars += 1;
        rows += 3 * (m + 1) + 2;
        if (g.kind.type == GateKind::Type::Ex) {
          vars += 12 * (m + 1) * (m + 1);
          rows += 32 * (m + 1) * (m + 1);
        }
      }
      const std::size_t bits = static_cast<std::size_t>(bit_length(static_cast<long long>(c.max_fan_in())) + 2);
      CHECK(lp.occurring_variables().size() <= vars);
      CHECK(lp.constraints.size() <= 2 * rows);
      CHECK(lp_size(lp) <= (vars + 1) * 2 * rows * bits);
    }
}

TEST_CASE("symmetry witness examples") {
  const Circuit c = materialize(corpus::any_edge(), 2);
  const CompiledLift cl = compile(c);
  const AuxMap id = symmetry_witness(cl, Permutation::identity(2));
  for (const auto& [from, to] : id) CHECK(from == to);
  const auto swap = Permutation::transposition(2, 1, 2);
  const AuxMap s = symmetry_witness(cl, swap);
  CHECK(s.at(gate_variable(gid("E", {1, 2}))) == gate_variable(gid("E", {2, 1})));
  CHECK(s.at(gate_variable(gid("E", {1, 1}))) == gate_variable(gid("E", {2, 2})));
  CHECK(s.at(gate_variable(gid("any"))) == gate_variable(gid("any")));
  CHECK(is_invariant(cl.lp, swap, s));
  CHECK_FALSE(is_invariant(cl.lp, swap, identity_map(cl.lp)));
}

TEST_CASE("symmetry witnesses are extension automorphisms") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& nc : corpus::circuits(n)) {
      if (n < nc.min_n) continue;
      CAPTURE(nc.name);
      const CompiledLift cl = compile(eliminate_thresholds(materialize(nc.spec, n)));
      for (const auto& pi : all_permutations(n)) CHECK(is_invariant(cl.lp, pi, symmetry_witness(cl, pi)));
    }
  for (const auto& nc : corpus::circuits(4)) {
    CAPTURE(nc.name);
    const CompiledLift cl = compile(eliminate_thresholds(materialize(nc.spec, 4)));
    for (const auto& pi : sym_generators(4)) CHECK(is_invariant(cl.lp, pi, symmetry_witness(cl, pi)));
  }
}

TEST_CASE("an asymmetric circuit has no witness") {
  std::vector<RawGate> gates;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) gates.push_back({gid("E", {i, j}), GateKind::input("E"), {}});
  gates.push_back({gid("g"), GateKind::or_gate(), {gid("E", {1, 2})}});
  const CompiledLift cl = compile(make_circuit(2, corpus::binary_e(), gates, gid("g")));
  CHECK_THROWS_AS(symmetry_witness(cl, Permutation::transposition(2, 1, 2)), InvalidArgument);
  CHECK_NOTHROW(symmetry_witness(cl, Permutation::identity(2)));
}

TEST_CASE("subgraph restriction examples") {
  const auto ps = corpus::restriction_inputs();
  const auto by_name = [&](const std::string& name) {
    for (const auto& p : ps)
      if (p.name == name) return p.lp;
    FAIL("missing corpus entry " << name);
    return LinearProgram{};
  };
  const LinearProgram all = subgraph_restriction_lift(by_name("all ones"));
  const auto acc = corpus::recognized(all);
  for (std::size_t m = 0; m < acc.size(); ++m) CHECK(acc[m] == (m + 1 == acc.size()));
  const LinearProgram cube = subgraph_restriction_lift(by_name("cube"));
  for (bool v : corpus::recognized(cube)) CHECK(v);

  LinearProgram empty = by_name("cube");
  empty.constraints.push_back(le({}, -1));
  for (bool v : corpus::recognized(subgraph_restriction_lift(empty))) CHECK_FALSE(v);

  CHECK(all.aux_vars.count(restricted_var(1, 2)) == 1);
  for (const auto& v : all.input_variables()) CHECK(v.rel == "E");
}

TEST_CASE("subgraph restriction rejects other input shapes") {
  LinearProgram p;
  p.n = 2;
  p.vocabulary = corpus::unary_x();
  p.constraints.push_back(le({{corpus::x(1), 1}}, 1));
  CHECK_THROWS_AS(subgraph_restriction_lift(p), InvalidArgument);
}

TEST_CASE("subgraph restriction accepts the monotone closure of the shadow") {
  for (const auto& [name, p] : corpus::restriction_inputs()) {
    CAPTURE(name);
    const auto shadow = corpus::recognized(p);
    const auto got = corpus::recognized(subgraph_restriction_lift(p));
    REQUIRE(shadow.size() == got.size());
    for (std::size_t xm = 0; xm < got.size(); ++xm) {
      bool want = false;
      for (std::size_t ym = 0; ym < shadow.size(); ++ym)
        if (shadow[ym] && (ym & ~xm) == 0) want = true;
      CHECK(got[xm] == want);
    }
  }
}

TEST_CASE("restriction of a symmetric lift stays symmetric") {
  const auto ps = corpus::restriction_inputs();
  const LinearProgram q = subgraph_restriction_lift(ps[1].lp);
  for (const auto& pi : all_permutations(2)) {
    AuxMap sigma;
    for (const auto& v : q.aux_vars) sigma.emplace(v, restricted_var(pi(v.path[0].dom[0]), pi(v.path[0].dom[1])));
    CHECK(is_invariant(q, pi, sigma));
  }
}
