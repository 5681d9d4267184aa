#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symlift/lp_model.hpp"
#include "symlift/permutation.hpp"

namespace symlift {

struct GateKind {
  enum class Type { Input, Not, And, Or, Th, Ex };

  Type type = Type::Or;
  std::string rel;        // Input only
  long long param = 0;    // Th: k, Ex: t

  static GateKind input(std::string rel) { return {Type::Input, std::move(rel), 0}; }
  static GateKind not_gate() { return {Type::Not, {}, 0}; }
  static GateKind and_gate() { return {Type::And, {}, 0}; }
  static GateKind or_gate() { return {Type::Or, {}, 0}; }
  static GateKind th(long long k) { return {Type::Th, {}, k}; }
  static GateKind ex(long long t) { return {Type::Ex, {}, t}; }

  std::string str() const;

  auto operator<=>(const GateKind&) const = default;
};

// Bound(i): the i-th index (0-based) of the source gate. Star(j): a fresh
// index ranging over [n].
struct PatternEntry {
  bool star = false;
  int index = 0;

  static PatternEntry bound(int i) { return {false, i}; }
  static PatternEntry fresh(int j) { return {true, j}; }

  auto operator<=>(const PatternEntry&) const = default;
};

struct WiringPattern {
  std::string target;
  std::vector<PatternEntry> pattern;
  // false: distinct star labels take distinct values.
  bool all_tuples = true;
};

struct GateFamily {
  std::string name;
  int index_arity = 0;
  GateKind kind;
  std::vector<WiringPattern> wiring;
};

struct CircuitSpec {
  Vocabulary vocabulary;
  std::vector<GateFamily> families;
  std::string output_family;
  std::vector<int> output_tuple;

  // Checks references, arities, Not wiring and acyclicity of the family graph.
  void validate() const;
};

struct GateId {
  std::string family;
  std::vector<int> tuple;

  std::string str() const;

  auto operator<=>(const GateId&) const = default;
};

struct Gate {
  GateId id;
  GateKind kind;
  std::vector<std::size_t> children;  // indices into Circuit::gates, with multiplicity
};

// A materialized circuit. Gates are stored children-first.
struct Circuit {
  int n = 1;
  Vocabulary vocabulary;
  std::vector<Gate> gates;
  std::map<GateId, std::size_t> index;
  std::size_t output = 0;

  const Gate& gate(const GateId& id) const;
  const Gate& output_gate() const { return gates[output]; }
  std::size_t max_fan_in() const;
  std::size_t count(GateKind::Type type) const;

  // DAG, fan-in >= 1 for non-inputs, Not fan-in 1, Th k <= fan-in, Ex t <= fan-in,
  // input gate tuples match their relation.
  void validate() const;
};

// The input variable x_{R(s)} read by an input gate (R, s).
VarId input_var(const Gate& g);

struct RawGate {
  GateId id;
  GateKind kind;
  std::vector<GateId> children;
};

// Builds a circuit from an explicit gate list (any order); throws on
// dangling references or cycles.
Circuit make_circuit(int n, Vocabulary vocabulary, const std::vector<RawGate>& gates,
                     const GateId& output);

Circuit materialize(const CircuitSpec& spec, int n);

using InputBits = std::map<VarId, bool>;

// Every input variable of L(n) for the circuit's vocabulary, sorted.
std::vector<VarId> circuit_inputs(const Circuit& c);

// Bit k of `mask` assigned to inputs[k].
InputBits bits_from_mask(const std::vector<VarId>& inputs, std::uint64_t mask);

// Throws InvalidArgument when an input gate's variable is unassigned.
bool evaluate(const Circuit& c, const InputBits& x);

// Replaces each Th_k gate of fan-in m by an Or over Ex_t gates, t = k..m,
// named "<family>#ex<t>" with the same tuple and children.
Circuit eliminate_thresholds(const Circuit& c);

// gate_map[g] = index of (F, pi.s) when pi fixes the circuit (kinds, child
// multisets and the output gate); throws InvalidArgument otherwise.
std::vector<std::size_t> gate_map(const Circuit& c, const Permutation& pi);
bool is_fixed_by(const Circuit& c, const Permutation& pi);

}  // namespace symlift
