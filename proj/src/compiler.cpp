#include "symlift/compiler.hpp"

#include "symlift/error.hpp"

namespace symlift {

namespace {

void absorb(LinearProgram& into, const LinearProgram& part) {
  into.aux_vars.insert(part.aux_vars.begin(), part.aux_vars.end());
  into.constraints.insert(into.constraints.end(), part.constraints.begin(), part.constraints.end());
}

Prefix gate_prefix(const GateId& id) { return {Segment{id.family, id.tuple, {}}}; }

// tau[k] = 1-based slot of `to` holding the image of slot k+1 of `from`.
std::vector<int> match_slots(const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                             const std::vector<std::size_t>& gate_map) {
  std::vector<int> tau;
  std::vector<char> used(to.size(), 0);
  for (std::size_t child : from) {
    const std::size_t image = gate_map[child];
    std::size_t j = 0;
    while (j < to.size() && (used[j] || to[j] != image)) ++j;
    if (j == to.size()) throw InvalidArgument("circuit not symmetric: unmatched child slot");
    used[j] = 1;
    tau.push_back(static_cast<int>(j + 1));
  }
  return tau;
}

}  // namespace

VarId gate_variable(const GateId& id) { return VarId::aux(id.family, id.tuple); }

CompiledLift compile(const Circuit& c) {
  c.validate();
  if (c.count(GateKind::Type::Th) != 0) {
    throw InvalidArgument("compile needs a threshold-free circuit; run eliminate_thresholds first");
  }
  CompiledLift cl;
  cl.circuit = c;
  LinearProgram& lp = cl.lp;
  lp.n = c.n;
  lp.vocabulary = c.vocabulary;
  std::vector<VarId> ys;
  for (const auto& g : c.gates) {
    ys.push_back(gate_variable(g.id));
    if (!cl.gate_var.emplace(g.id, ys.back()).second) throw InvalidArgument("duplicate gate " + g.id.str());
    lp.aux_vars.insert(ys.back());
  }
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const VarId& y = ys[i];
    GateRecipe recipe{g.id, g.kind, {}};
    lp.add_box(y, Rational(0), Rational(1));
    std::vector<VarId> xs;
    for (std::size_t ch : g.children) xs.push_back(ys[ch]);
    switch (g.kind.type) {
      case GateKind::Type::Input:
        lp.add(eq({{y, Rational(1)}, {input_var(g), Rational(-1)}}, Rational(0)));
        break;
      case GateKind::Type::Not:
        absorb(lp, gate_lp(BoolGate::Not, xs, y).lp);
        break;
      case GateKind::Type::And:
        absorb(lp, gate_lp(BoolGate::And, xs, y).lp);
        break;
      case GateKind::Type::Or:
        absorb(lp, gate_lp(BoolGate::Or, xs, y).lp);
        break;
      case GateKind::Type::Ex:
        recipe.prefix = gate_prefix(g.id);
        absorb(lp, ex_gate_lp(static_cast<int>(xs.size()), g.kind.param, xs, y, recipe.prefix).lp);
        break;
      case GateKind::Type::Th:
        break;
    }
    cl.witness_recipe.push_back(std::move(recipe));
  }
  lp.add(eq({{ys[c.output], Rational(1)}}, Rational(1)));
  lp.validate();
  return cl;
}

AuxMap symmetry_witness(const CompiledLift& cl, const Permutation& pi) {
  const Circuit& c = cl.circuit;
  const std::vector<std::size_t> gm = gate_map(c, pi);
  std::vector<std::vector<int>> tau(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (!cl.witness_recipe[i].prefix.empty()) tau[i] = match_slots(c.gates[i].children, c.gates[gm[i]].children, gm);
  }
  AuxMap sigma;
  for (const auto& v : cl.lp.aux_vars) {
    const Segment& head = v.path.front();
    auto it = c.index.find({head.tag, head.dom});
    if (it == c.index.end() || !head.par.empty()) throw InvalidArgument("auxiliary outside any gate: " + v.str());
    const std::size_t i = it->second;
    if (v.path.size() == 1) {
      sigma.emplace(v, cl.gate_var.at(c.gates[gm[i]].id));
    } else {
      sigma.emplace(v, relabel_internal(v, cl.witness_recipe[i].prefix, cl.witness_recipe[gm[i]].prefix, tau[i]));
    }
  }
  return sigma;
}

VarId restricted_var(int i, int j) { return VarId::aux("y", {i, j}); }

LinearProgram subgraph_restriction_lift(const LinearProgram& p) {
  p.validate();
  if (p.vocabulary.size() != 1 || p.vocabulary[0].arity != 2) {
    throw InvalidArgument("restriction needs p over exactly one binary relation y_ij");
  }
  const std::string rel = p.vocabulary[0].name;
  auto rename = [](const VarId& v) {
    if (v.is_input()) return restricted_var(v.tuple[0], v.tuple[1]);
    std::vector<Segment> path{Segment{"p", {}, {}}};
    path.insert(path.end(), v.path.begin(), v.path.end());
    return VarId::aux(std::move(path));
  };
  LinearProgram q;
  q.n = p.n;
  q.vocabulary = {{"E", 2}};
  for (const auto& v : p.aux_vars) q.aux_vars.insert(rename(v));
  for (const auto& c : p.constraints) {
    LinearConstraint r;
    r.rel = c.rel;
    r.rhs = c.rhs;
    for (const auto& [v, coef] : c.coeffs) r.add(rename(v), coef);
    q.add(std::move(r));
  }
  for (int i = 1; i <= p.n; ++i) {
    for (int j = 1; j <= p.n; ++j) {
      const VarId y = restricted_var(i, j);
      q.aux_vars.insert(y);
      q.add(le({{y, Rational(-1)}}, Rational(0)));
      q.add(le({{y, Rational(1)}, {VarId::input("E", {i, j}), Rational(-1)}}, Rational(0)));
    }
  }
  return q;
}

}  // namespace symlift
