#include "symlift/circuit_json.hpp"

#include <cctype>

#include "symlift/error.hpp"

namespace symlift {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer list");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("expected an integer list");
    out.push_back(e.get<int>());
  }
  return out;
}

std::string pattern_str(const PatternEntry& e) {
  return (e.star ? "*" : "b") + std::to_string(e.index);
}

PatternEntry pattern_from(const Json& j) {
  if (!j.is_string()) throw ParseError("pattern entries must be strings like \"b0\" or \"*1\"");
  const std::string s = j.get<std::string>();
  if (s.size() < 2 || (s[0] != 'b' && s[0] != '*')) throw ParseError("bad pattern entry '" + s + "'");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad pattern entry '" + s + "'");
  }
  const int index = std::stoi(s.substr(1));
  return s[0] == '*' ? PatternEntry::fresh(index) : PatternEntry::bound(index);
}

Json gate_ref(const GateId& id) { return {{"family", id.family}, {"tuple", id.tuple}}; }

GateId gate_ref_from(const Json& j) {
  return {field(j, "family").get<std::string>(), j.contains("tuple") ? int_list(j.at("tuple")) : std::vector<int>{}};
}

template <typename F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid ") + what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Vocabulary& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back({{"name", r.name}, {"arity", r.arity}});
  return out;
}

Vocabulary vocabulary_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vocabulary must be a list");
  Vocabulary v;
  for (const auto& r : j) v.push_back({field(r, "name").get<std::string>(), field(r, "arity").get<int>()});
  return v;
}

Json to_json(const GateKind& k) {
  switch (k.type) {
    case GateKind::Type::Input:
      return {{"input", {{"rel", k.rel}}}};
    case GateKind::Type::Not:
      return {{"not", Json::object()}};
    case GateKind::Type::And:
      return {{"and", Json::object()}};
    case GateKind::Type::Or:
      return {{"or", Json::object()}};
    case GateKind::Type::Th:
      return {{"th", {{"k", k.param}}}};
    case GateKind::Type::Ex:
      return {{"ex", {{"t", k.param}}}};
  }
  return nullptr;
}

GateKind gate_kind_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("gate kind must be a single-key object");
  const std::string tag = j.begin().key();
  const Json& body = j.begin().value();
  if (tag == "input") return GateKind::input(field(body, "rel").get<std::string>());
  if (tag == "not") return GateKind::not_gate();
  if (tag == "and") return GateKind::and_gate();
  if (tag == "or") return GateKind::or_gate();
  auto param = [&](const char* key) {
    const long long v = field(body, key).get<long long>();
    if (v < 0) throw ParseError(std::string("gate parameter '") + key + "' must be nonnegative");
    return v;
  };
  if (tag == "th") return GateKind::th(param("k"));
  if (tag == "ex") return GateKind::ex(param("t"));
  throw ParseError("unknown gate kind '" + tag + "'");
}

Json to_json(const CircuitSpec& spec) {
  Json families = Json::array();
  for (const auto& f : spec.families) {
    Json wiring = Json::array();
    for (const auto& w : f.wiring) {
      Json pattern = Json::array();
      for (const auto& e : w.pattern) pattern.push_back(pattern_str(e));
      wiring.push_back({{"target", w.target}, {"pattern", std::move(pattern)}, {"all_tuples", w.all_tuples}});
    }
    families.push_back({{"name", f.name},
                        {"arity", f.index_arity},
                        {"kind", to_json(f.kind)},
                        {"wiring", std::move(wiring)}});
  }
  return {{"vocabulary", to_json(spec.vocabulary)},
          {"families", std::move(families)},
          {"output", {{"family", spec.output_family}, {"tuple", spec.output_tuple}}}};
}

CircuitSpec circuit_spec_from_json(const Json& j) {
  return parsing("circuit", [&] {
    CircuitSpec spec;
    spec.vocabulary = vocabulary_from_json(field(j, "vocabulary"));
    for (const auto& fj : field(j, "families")) {
      GateFamily f;
      f.name = field(fj, "name").get<std::string>();
      f.index_arity = field(fj, "arity").get<int>();
      f.kind = gate_kind_from_json(field(fj, "kind"));
      if (fj.contains("wiring")) {
        for (const auto& wj : fj.at("wiring")) {
          WiringPattern w;
          w.target = field(wj, "target").get<std::string>();
          for (const auto& e : field(wj, "pattern")) w.pattern.push_back(pattern_from(e));
          if (wj.contains("all_tuples")) w.all_tuples = wj.at("all_tuples").get<bool>();
          f.wiring.push_back(std::move(w));
        }
      }
      spec.families.push_back(std::move(f));
    }
    const GateId out = gate_ref_from(field(j, "output"));
    spec.output_family = out.family;
    spec.output_tuple = out.tuple;
    spec.validate();
    return spec;
  });
}

Json to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates) {
    Json children = Json::array();
    for (std::size_t ch : g.children) children.push_back(gate_ref(c.gates[ch].id));
    gates.push_back({{"family", g.id.family},
                     {"tuple", g.id.tuple},
                     {"kind", to_json(g.kind)},
                     {"children", std::move(children)}});
  }
  return {{"n", c.n},
          {"vocabulary", to_json(c.vocabulary)},
          {"gates", std::move(gates)},
          {"output", gate_ref(c.output_gate().id)}};
}

Circuit circuit_from_json(const Json& j) {
  return parsing("circuit", [&] {
    std::vector<RawGate> raw;
    for (const auto& gj : field(j, "gates")) {
      RawGate g;
      g.id = gate_ref_from(gj);
      g.kind = gate_kind_from_json(field(gj, "kind"));
      if (gj.contains("children")) {
        for (const auto& ch : gj.at("children")) g.children.push_back(gate_ref_from(ch));
      }
      raw.push_back(std::move(g));
    }
    return make_circuit(field(j, "n").get<int>(), vocabulary_from_json(field(j, "vocabulary")), raw,
                        gate_ref_from(field(j, "output")));
  });
}

bool is_raw_circuit_json(const Json& j) { return j.is_object() && j.contains("gates"); }

}  // namespace symlift
