#pragma once

#include "symlift/circuit.hpp"
#include "symlift/lp_json.hpp"

namespace symlift {

// Kind objects: {"or":{}}, {"th":{"k":2}}, {"input":{"rel":"E"}}, ...
Json to_json(const GateKind& k);
GateKind gate_kind_from_json(const Json& j);

// Family form: {"vocabulary", "families", "output":{"family","tuple"}}.
// Wiring patterns are strings "b<i>" (bound) and "*<j>" (star).
Json to_json(const CircuitSpec& spec);
CircuitSpec circuit_spec_from_json(const Json& j);

// Raw form: {"n", "vocabulary", "gates":[{"family","tuple","kind","children"}],
// "output":{"family","tuple"}}.
Json to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

// Whether `j` uses the raw gate-list form.
bool is_raw_circuit_json(const Json& j);

Vocabulary vocabulary_from_json(const Json& j);
Json to_json(const Vocabulary& v);

}  // namespace symlift
