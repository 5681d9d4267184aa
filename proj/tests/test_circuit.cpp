#include <doctest.h>

#include "corpus.hpp"
#include "symlift/circuit_json.hpp"
#include "symlift/error.hpp"

using namespace symlift;
using corpus::e;

namespace {

GateId gid(std::string f, std::vector<int> t = {}) { return {std::move(f), std::move(t)}; }

// One gate of `kind` over the inputs X(1..bits.size()).
Circuit over_bits(const GateKind& kind, int n) {
  std::vector<RawGate> gates;
  std::vector<GateId> kids;
  for (int i = 1; i <= n; ++i) {
    gates.push_back({gid("X", {i}), GateKind::input("X"), {}});
    kids.push_back(gid("X", {i}));
  }
  gates.push_back({gid("g"), kind, kids});
  return make_circuit(n, corpus::unary_x(), gates, gid("g"));
}

InputBits bits_x(const std::vector<int>& v) {
  InputBits b;
  for (std::size_t i = 0; i < v.size(); ++i) b[corpus::x(static_cast<int>(i) + 1)] = v[i];
  return b;
}

InputBits no_edges(int n) {
  InputBits b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) b[e(i, j)] = false;
  return b;
}

}  // namespace

TEST_CASE("materialize any_edge at n = 2") {
  const Circuit c = materialize(corpus::any_edge(), 2);
  CHECK(c.gates.size() == 5);
  CHECK(c.count(GateKind::Type::Input) == 4);
  CHECK(c.output_gate().kind == GateKind::or_gate());
  CHECK(c.output_gate().children.size() == 4);
}

TEST_CASE("materialize an input-only spec") {
  CircuitSpec s = corpus::single_edge_input(1, 2);
  CHECK(materialize(s, 3).gates.size() == 9);
}

TEST_CASE("materialize rejects broken specs") {
  CircuitSpec s = corpus::any_edge();
  s.families[1].wiring[0].target = "missing";
  CHECK_THROWS_AS(materialize(s, 2), InvalidArgument);

  s = corpus::any_edge();
  s.families[1].wiring[0].pattern.pop_back();
  CHECK_THROWS_AS(materialize(s, 2), InvalidArgument);

  s = corpus::no_edge();
  s.families[1].wiring.push_back({"none", {}, true});
  CHECK_THROWS_AS(materialize(s, 2), InvalidArgument);

  s = corpus::any_edge();
  s.output_tuple = {1};
  CHECK_THROWS_AS(materialize(s, 2), InvalidArgument);

  s = corpus::any_edge();
  s.families[0].index_arity = 3;
  CHECK_THROWS_AS(materialize(s, 2), InvalidArgument);

  CHECK_THROWS_AS(materialize(corpus::any_edge(), 0), InvalidArgument);
}

TEST_CASE("distinct star labels skip repeated values") {
  const Circuit c = materialize(corpus::triangle(), 3);
  CHECK(c.output_gate().children.size() == 6);
  const Circuit w = materialize(corpus::closed_walk3(), 3);
  CHECK(w.output_gate().children.size() == 27);
}

TEST_CASE("evaluate follows gate semantics") {
  const Circuit any = materialize(corpus::any_edge(), 2);
  CHECK_FALSE(evaluate(any, no_edges(2)));
  InputBits one = no_edges(2);
  one[e(2, 1)] = true;
  CHECK(evaluate(any, one));

  CHECK(evaluate(over_bits(GateKind::th(2), 3), bits_x({1, 0, 1})));
  CHECK_FALSE(evaluate(over_bits(GateKind::th(3), 3), bits_x({1, 0, 1})));
  CHECK_FALSE(evaluate(over_bits(GateKind::ex(2), 3), bits_x({1, 1, 1})));
  CHECK(evaluate(over_bits(GateKind::ex(2), 3), bits_x({0, 1, 1})));
  CHECK(evaluate(over_bits(GateKind::and_gate(), 2), bits_x({1, 1})));
  CHECK_FALSE(evaluate(over_bits(GateKind::and_gate(), 2), bits_x({1, 0})));
  CHECK_FALSE(evaluate(over_bits(GateKind::or_gate(), 2), bits_x({0, 0})));
  CHECK_FALSE(evaluate(over_bits(GateKind::not_gate(), 1), bits_x({1})));
}

TEST_CASE("evaluate needs every input") {
  InputBits partial = no_edges(2);
  partial.erase(e(1, 1));
  CHECK_THROWS_AS(evaluate(materialize(corpus::any_edge(), 2), partial), InvalidArgument);
}

TEST_CASE("raw circuits are validated") {
  std::vector<RawGate> gates{{gid("X", {1}), GateKind::input("X"), {}}, {gid("g"), GateKind::th(2), {gid("X", {1})}}};
  CHECK_THROWS_AS(make_circuit(1, corpus::unary_x(), gates, gid("g")), InvalidArgument);
  gates[1] = {gid("g"), GateKind::or_gate(), {gid("h")}};
  CHECK_THROWS_AS(make_circuit(1, corpus::unary_x(), gates, gid("g")), InvalidArgument);
  gates[1] = {gid("g"), GateKind::or_gate(), {gid("g")}};
  CHECK_THROWS_AS(make_circuit(1, corpus::unary_x(), gates, gid("g")), InvalidArgument);
  gates[1] = {gid("g"), GateKind::or_gate(), {}};
  CHECK_THROWS_AS(make_circuit(1, corpus::unary_x(), gates, gid("g")), InvalidArgument);
}

TEST_CASE("threshold one of fan-in two becomes an Or of Ex1 and Ex2") {
  const Circuit c = eliminate_thresholds(over_bits(GateKind::th(1), 2));
  CHECK(c.count(GateKind::Type::Th) == 0);
  const Gate& out = c.output_gate();
  CHECK(out.kind == GateKind::or_gate());
  REQUIRE(out.children.size() == 2);
  CHECK(c.gates[out.children[0]].kind == GateKind::ex(1));
  CHECK(c.gates[out.children[1]].kind == GateKind::ex(2));
  for (std::size_t k : out.children) CHECK(c.gates[k].children.size() == 2);
}

TEST_CASE("threshold zero becomes a constant-true Or") {
  const Circuit th = over_bits(GateKind::th(0), 2);
  const Circuit c = eliminate_thresholds(th);
  CHECK(c.output_gate().children.size() == 3);
  for (int m = 0; m < 4; ++m) {
    const InputBits b = bits_x({m & 1, (m >> 1) & 1});
    CHECK(evaluate(c, b));
    CHECK(evaluate(th, b));
  }
}

TEST_CASE("threshold-free circuits are unchanged") {
  const Circuit c = materialize(corpus::closed_walk3(), 2);
  const Circuit d = eliminate_thresholds(c);
  CHECK(to_json(d).dump() == to_json(c).dump());
}

TEST_CASE("threshold elimination preserves the computed function") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& nc : corpus::circuits(n)) {
      if (n < nc.min_n) continue;
      const Circuit c = materialize(nc.spec, n);
      const Circuit d = eliminate_thresholds(c);
      CHECK(d.count(GateKind::Type::Th) == 0);
      const auto inputs = circuit_inputs(c);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << inputs.size()); ++m) {
        const InputBits b = bits_from_mask(inputs, m);
        const bool v = evaluate(c, b);
        CHECK(v == evaluate(d, b));
        CHECK(v == nc.accepts(n, b));
      }
    }
  }
}

TEST_CASE("materialized circuits are fixed by every permutation") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& nc : corpus::circuits(n)) {
      const Circuit c = materialize(nc.spec, n);
      for (const auto& pi : all_permutations(n)) {
        CHECK(is_fixed_by(c, pi));
        const auto map = gate_map(c, pi);
        for (std::size_t g = 0; g < c.gates.size(); ++g) {
          CHECK(c.gates[map[g]].id.tuple == pi.apply(c.gates[g].id.tuple));
        }
      }
    }
  }
}

TEST_CASE("evaluation is invariant under permuted inputs") {
  const int n = 3;
  for (const auto& nc : corpus::circuits(n)) {
    const Circuit c = materialize(nc.spec, n);
    const auto inputs = circuit_inputs(c);
    for (std::uint64_t m = 0; m < 512; m += 7) {
      const InputBits b = bits_from_mask(inputs, m);
      for (const auto& pi : sym_generators(n)) {
        InputBits moved;
        for (const auto& [v, bit] : b) moved[VarId::input(v.rel, pi.apply(v.tuple))] = bit;
        CHECK(evaluate(c, b) == evaluate(c, moved));
      }
    }
  }
}

TEST_CASE("an asymmetric raw circuit has no gate map under a breaking permutation") {
  std::vector<RawGate> gates;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) gates.push_back({gid("E", {i, j}), GateKind::input("E"), {}});
  gates.push_back({gid("g"), GateKind::or_gate(), {gid("E", {1, 2})}});
  const Circuit c = make_circuit(2, corpus::binary_e(), gates, gid("g"));
  CHECK_FALSE(is_fixed_by(c, Permutation::transposition(2, 1, 2)));
  CHECK_THROWS_AS(gate_map(c, Permutation::transposition(2, 1, 2)), InvalidArgument);
  CHECK(is_fixed_by(c, Permutation::identity(2)));
}

TEST_CASE("circuit JSON round-trips in both forms") {
  for (const auto& nc : corpus::circuits(3)) {
    const Json j = to_json(nc.spec);
    const CircuitSpec back = circuit_spec_from_json(Json::parse(j.dump()));
    CHECK(to_json(back).dump() == j.dump());
    CHECK_FALSE(is_raw_circuit_json(j));
    const Circuit c = materialize(nc.spec, 3);
    const Json raw = to_json(c);
    CHECK(is_raw_circuit_json(raw));
    CHECK(to_json(circuit_from_json(Json::parse(raw.dump()))).dump() == raw.dump());
  }
}

TEST_CASE("circuit JSON rejects unknown gate kinds") {
  Json j = to_json(corpus::any_edge());
  j["families"][1]["kind"] = {{"xor", Json::object()}};
  CHECK_THROWS_AS(circuit_spec_from_json(j), ParseError);
  j = to_json(corpus::any_edge());
  j["families"][1]["wiring"][0]["pattern"] = {"q0", "*1"};
  CHECK_THROWS_AS(circuit_spec_from_json(j), ParseError);
}
