#include "symlift/circuit.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "symlift/error.hpp"

namespace symlift {

std::string GateKind::str() const {
  switch (type) {
    case Type::Input:
      return "input(" + rel + ")";
    case Type::Not:
      return "not";
    case Type::And:
      return "and";
    case Type::Or:
      return "or";
    case Type::Th:
      return "th" + std::to_string(param);
    case Type::Ex:
      return "ex" + std::to_string(param);
  }
  return "?";
}

std::string GateId::str() const {
  std::ostringstream os;
  os << family << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ',';
    os << tuple[i];
  }
  os << ')';
  return os.str();
}

const Gate& Circuit::gate(const GateId& id) const {
  auto it = index.find(id);
  if (it == index.end()) throw InvalidArgument("no gate " + id.str());
  return gates[it->second];
}

std::size_t Circuit::max_fan_in() const {
  std::size_t m = 0;
  for (const auto& g : gates) m = std::max(m, g.children.size());
  return m;
}

std::size_t Circuit::count(GateKind::Type type) const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [&](const Gate& g) { return g.kind.type == type; }));
}

namespace {

const RelationSymbol* find_relation(const Vocabulary& vocab, const std::string& name) {
  for (const auto& r : vocab) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

}  // namespace

void Circuit::validate() const {
  if (n < 1) throw InvalidArgument("circuit domain size must be positive");
  if (output >= gates.size()) throw InvalidArgument("circuit has no output gate");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    for (int v : g.id.tuple) {
      if (v < 1 || v > n) throw InvalidArgument("gate " + g.id.str() + " has index outside [n]");
    }
    for (std::size_t c : g.children) {
      if (c >= i) throw InvalidArgument("gate " + g.id.str() + " is not in children-first order");
    }
    const std::size_t fan_in = g.children.size();
    switch (g.kind.type) {
      case GateKind::Type::Input: {
        const RelationSymbol* r = find_relation(vocabulary, g.kind.rel);
        if (r == nullptr) throw InvalidArgument("input gate reads unknown relation " + g.kind.rel);
        if (static_cast<int>(g.id.tuple.size()) != r->arity) {
          throw InvalidArgument("input gate " + g.id.str() + " arity mismatch");
        }
        if (fan_in != 0) throw InvalidArgument("input gate " + g.id.str() + " has children");
        break;
      }
      case GateKind::Type::Not:
        if (fan_in != 1) throw InvalidArgument("not gate " + g.id.str() + " needs exactly one child");
        break;
      case GateKind::Type::Th:
      case GateKind::Type::Ex:
        if (g.kind.param < 0 || static_cast<std::size_t>(g.kind.param) > fan_in) {
          throw InvalidArgument("gate " + g.id.str() + " parameter exceeds its fan-in");
        }
        [[fallthrough]];
      default:
        if (fan_in == 0) throw InvalidArgument("gate " + g.id.str() + " has no children");
    }
  }
}

VarId input_var(const Gate& g) { return VarId::input(g.kind.rel, g.id.tuple); }

Circuit make_circuit(int n, Vocabulary vocabulary, const std::vector<RawGate>& raw,
                     const GateId& output) {
  std::map<GateId, std::size_t> pos;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!pos.emplace(raw[i].id, i).second) throw InvalidArgument("duplicate gate " + raw[i].id.str());
  }
  for (const auto& g : raw) {
    for (const auto& c : g.children) {
      if (!pos.count(c)) throw InvalidArgument("gate " + g.id.str() + " references missing " + c.str());
    }
  }
  if (!pos.count(output)) throw InvalidArgument("output gate " + output.str() + " does not exist");

  Circuit c;
  c.n = n;
  c.vocabulary = std::move(vocabulary);
  std::vector<int> state(raw.size(), 0);  // 0 new, 1 on stack, 2 done
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (state[i] == 2) return;
    if (state[i] == 1) throw InvalidArgument("circuit has a cycle through " + raw[i].id.str());
    state[i] = 1;
    for (const auto& ch : raw[i].children) visit(pos.at(ch));
    state[i] = 2;
    Gate g;
    g.id = raw[i].id;
    g.kind = raw[i].kind;
    for (const auto& ch : raw[i].children) g.children.push_back(c.index.at(ch));
    c.index.emplace(g.id, c.gates.size());
    c.gates.push_back(std::move(g));
  };
  for (std::size_t i = 0; i < raw.size(); ++i) visit(i);
  c.output = c.index.at(output);
  c.validate();
  return c;
}

void CircuitSpec::validate() const {
  std::map<std::string, const GateFamily*> by_name;
  for (const auto& f : families) {
    if (!by_name.emplace(f.name, &f).second) throw InvalidArgument("duplicate family " + f.name);
    if (f.index_arity < 0) throw InvalidArgument("family " + f.name + " has negative arity");
  }
  for (const auto& f : families) {
    if (f.kind.type == GateKind::Type::Input) {
      const RelationSymbol* r = find_relation(vocabulary, f.kind.rel);
      if (r == nullptr) throw InvalidArgument("family " + f.name + " reads unknown relation " + f.kind.rel);
      if (r->arity != f.index_arity) throw InvalidArgument("input family " + f.name + " arity mismatch");
      if (!f.wiring.empty()) throw InvalidArgument("input family " + f.name + " has wiring");
    }
    if ((f.kind.type == GateKind::Type::Th || f.kind.type == GateKind::Type::Ex) && f.kind.param < 0) {
      throw InvalidArgument("family " + f.name + " has a negative parameter");
    }
    if (f.kind.type == GateKind::Type::Not) {
      const bool single = f.wiring.size() == 1 &&
                          std::none_of(f.wiring[0].pattern.begin(), f.wiring[0].pattern.end(),
                                       [](const PatternEntry& e) { return e.star; });
      if (!single) throw InvalidArgument("not family " + f.name + " must have one star-free wiring");
    }
    for (const auto& w : f.wiring) {
      auto it = by_name.find(w.target);
      if (it == by_name.end()) throw InvalidArgument("family " + f.name + " wires to missing " + w.target);
      if (static_cast<int>(w.pattern.size()) != it->second->index_arity) {
        throw InvalidArgument("wiring " + f.name + " -> " + w.target + " has wrong pattern length");
      }
      for (const auto& e : w.pattern) {
        if (!e.star && (e.index < 0 || e.index >= f.index_arity)) {
          throw InvalidArgument("wiring " + f.name + " -> " + w.target + " binds a missing index");
        }
      }
    }
  }
  auto out = by_name.find(output_family);
  if (out == by_name.end()) throw InvalidArgument("output family " + output_family + " does not exist");
  if (static_cast<int>(output_tuple.size()) != out->second->index_arity) {
    throw InvalidArgument("output tuple length does not match family arity");
  }
  std::map<std::string, int> state;
  std::function<void(const GateFamily&)> visit = [&](const GateFamily& f) {
    int& s = state[f.name];
    if (s == 2) return;
    if (s == 1) throw InvalidArgument("family graph has a cycle through " + f.name);
    s = 1;
    for (const auto& w : f.wiring) visit(*by_name.at(w.target));
    state[f.name] = 2;
  };
  for (const auto& f : families) visit(f);
}

namespace {

// Star labels of `w` in ascending order.
std::vector<int> star_labels(const WiringPattern& w) {
  std::set<int> labels;
  for (const auto& e : w.pattern) {
    if (e.star) labels.insert(e.index);
  }
  return {labels.begin(), labels.end()};
}

}  // namespace

Circuit materialize(const CircuitSpec& spec, int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  spec.validate();
  for (int v : spec.output_tuple) {
    if (v < 1 || v > n) throw InvalidArgument("output tuple index outside [n]");
  }
  std::vector<RawGate> raw;
  for (const auto& f : spec.families) {
    for (const auto& s : all_tuples(n, f.index_arity)) {
      RawGate g;
      g.id = {f.name, s};
      g.kind = f.kind;
      for (const auto& w : f.wiring) {
        const std::vector<int> labels = star_labels(w);
        for (const auto& values : all_tuples(n, static_cast<int>(labels.size()))) {
          if (!w.all_tuples) {
            std::set<int> distinct(values.begin(), values.end());
            if (distinct.size() != values.size()) continue;
          }
          std::vector<int> child;
          for (const auto& e : w.pattern) {
            if (e.star) {
              const auto k = std::lower_bound(labels.begin(), labels.end(), e.index) - labels.begin();
              child.push_back(values[static_cast<std::size_t>(k)]);
            } else {
              child.push_back(s[static_cast<std::size_t>(e.index)]);
            }
          }
          g.children.push_back({w.target, std::move(child)});
        }
      }
      raw.push_back(std::move(g));
    }
  }
  return make_circuit(n, spec.vocabulary, raw, {spec.output_family, spec.output_tuple});
}

std::vector<VarId> circuit_inputs(const Circuit& c) {
  LinearProgram shape;
  shape.n = c.n;
  shape.vocabulary = c.vocabulary;
  return shape.input_variables();
}

InputBits bits_from_mask(const std::vector<VarId>& inputs, std::uint64_t mask) {
  InputBits x;
  for (std::size_t k = 0; k < inputs.size(); ++k) x.emplace(inputs[k], ((mask >> k) & 1U) != 0);
  return x;
}

bool evaluate(const Circuit& c, const InputBits& x) {
  std::vector<char> value(c.gates.size(), 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    std::size_t ones = 0;
    for (std::size_t ch : g.children) ones += value[ch] ? 1 : 0;
    const std::size_t m = g.children.size();
    bool out = false;
    switch (g.kind.type) {
      case GateKind::Type::Input: {
        auto it = x.find(input_var(g));
        if (it == x.end()) throw InvalidArgument("missing input value for " + input_var(g).str());
        out = it->second;
        break;
      }
      case GateKind::Type::Not:
        out = ones == 0;
        break;
      case GateKind::Type::And:
        out = ones == m;
        break;
      case GateKind::Type::Or:
        out = ones > 0;
        break;
      case GateKind::Type::Th:
        out = static_cast<long long>(ones) >= g.kind.param;
        break;
      case GateKind::Type::Ex:
        out = static_cast<long long>(ones) == g.kind.param;
        break;
    }
    value[i] = out ? 1 : 0;
  }
  return value[c.output] != 0;
}

Circuit eliminate_thresholds(const Circuit& c) {
  if (c.count(GateKind::Type::Th) == 0) return c;
  Circuit out;
  out.n = c.n;
  out.vocabulary = c.vocabulary;
  std::vector<std::size_t> remap(c.gates.size());
  auto push = [&](Gate g) {
    if (c.index.count(g.id) && c.gates[c.index.at(g.id)].kind.type != GateKind::Type::Th &&
        g.kind.type == GateKind::Type::Ex) {
      throw InvalidArgument("threshold rewrite collides with existing gate " + g.id.str());
    }
    if (!out.index.emplace(g.id, out.gates.size()).second) {
      throw InvalidArgument("threshold rewrite collides with existing gate " + g.id.str());
    }
    out.gates.push_back(std::move(g));
    return out.gates.size() - 1;
  };
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    std::vector<std::size_t> children;
    for (std::size_t ch : g.children) children.push_back(remap[ch]);
    if (g.kind.type != GateKind::Type::Th) {
      remap[i] = push({g.id, g.kind, std::move(children)});
      continue;
    }
    const auto m = static_cast<long long>(children.size());
    Gate disjunction{g.id, GateKind::or_gate(), {}};
    for (long long t = g.kind.param; t <= m; ++t) {
      Gate ex{{g.id.family + "#ex" + std::to_string(t), g.id.tuple}, GateKind::ex(t), children};
      disjunction.children.push_back(push(std::move(ex)));
    }
    remap[i] = push(std::move(disjunction));
  }
  out.output = remap[c.output];
  out.validate();
  return out;
}

std::vector<std::size_t> gate_map(const Circuit& c, const Permutation& pi) {
  if (pi.n() != c.n) throw InvalidArgument("permutation degree does not match circuit n");
  std::vector<std::size_t> map(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    auto it = c.index.find({g.id.family, pi.apply(g.id.tuple)});
    if (it == c.index.end()) throw InvalidArgument("circuit not symmetric: no image for " + g.id.str());
    map[i] = it->second;
  }
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const Gate& h = c.gates[map[i]];
    if (!(g.kind == h.kind)) throw InvalidArgument("circuit not symmetric: kind differs at " + g.id.str());
    std::vector<std::size_t> mapped;
    for (std::size_t ch : g.children) mapped.push_back(map[ch]);
    std::vector<std::size_t> target = h.children;
    std::sort(mapped.begin(), mapped.end());
    std::sort(target.begin(), target.end());
    if (mapped != target) throw InvalidArgument("circuit not symmetric: children differ at " + g.id.str());
  }
  if (map[c.output] != c.output) throw InvalidArgument("circuit not symmetric: output gate moves");
  return map;
}

bool is_fixed_by(const Circuit& c, const Permutation& pi) {
  try {
    gate_map(c, pi);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

}  // namespace symlift
