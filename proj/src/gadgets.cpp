#include "symlift/gadgets.hpp"

#include <algorithm>

#include "symlift/error.hpp"

namespace symlift {

namespace {

// A coordinate c + a*v of a membership row; v is absent for constants.
struct Slot {
  Rational c;
  Rational a;
  std::optional<VarId> v;

  static Slot var(const VarId& v) { return {Rational(0), Rational(1), v}; }
  static Slot flip(const VarId& v) { return {Rational(1), Rational(-1), v}; }
  static Slot one() { return {Rational(1), Rational(0), std::nullopt}; }
};

void register_var(LinearProgram& lp, const VarId& v) {
  if (v.is_aux()) {
    lp.aux_vars.insert(v);
    return;
  }
  const auto known = std::find_if(lp.vocabulary.begin(), lp.vocabulary.end(),
                                  [&](const RelationSymbol& r) { return r.name == v.rel; });
  const int arity = static_cast<int>(v.tuple.size());
  if (known == lp.vocabulary.end()) {
    lp.vocabulary.push_back({v.rel, arity});
  } else if (known->arity != arity) {
    throw InvalidArgument("relation " + v.rel + " used with two arities");
  }
  for (int i : v.tuple) lp.n = std::max(lp.n, i);
}

GadgetOutput start(int n, const std::vector<VarId>& xs, const Prefix& prefix) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (static_cast<int>(xs.size()) != n) throw InvalidArgument("expected exactly n input variables");
  GadgetOutput g;
  g.lp.n = 1;
  g.x = xs;
  g.prefix = prefix;
  for (const auto& v : xs) register_var(g.lp, v);
  return g;
}

Segment z_segment(std::vector<long long> par, int slot, SlotIndex mode) {
  if (mode == SlotIndex::Domain) return {"z", {slot}, std::move(par)};
  par.push_back(slot);
  return {"z", {}, std::move(par)};
}

// Adds the lift of conv{x in {0,1}^N : sum x in values} with one (w, z)
// family per key: sum w = 1, 0 <= w <= 1, sum_key z_{key,i} = slot_i,
// sum_i z_{key,i} = value*w, 0 <= z <= w.
void add_slice_mixture(LinearProgram& lp, const Prefix& prefix, const std::vector<Slot>& slots,
                       const std::vector<std::pair<std::vector<long long>, long long>>& keyed_values,
                       SlotIndex mode) {
  const int width = static_cast<int>(slots.size());
  std::vector<VarId> ws;
  std::vector<std::vector<VarId>> zs;
  for (const auto& [key, value] : keyed_values) {
    ws.push_back(child_var(prefix, {"w", {}, key}));
    std::vector<VarId> row;
    for (int i = 1; i <= width; ++i) row.push_back(child_var(prefix, z_segment(key, i, mode)));
    zs.push_back(std::move(row));
  }
  for (const auto& w : ws) lp.aux_vars.insert(w);
  for (const auto& row : zs) lp.aux_vars.insert(row.begin(), row.end());

  LinearConstraint total;
  total.rel = Rel::Eq;
  total.rhs = Rational(1);
  for (const auto& w : ws) total.add(w, Rational(1));
  lp.add(std::move(total));
  for (const auto& w : ws) lp.add_box(w, Rational(0), Rational(1));
  for (int i = 0; i < width; ++i) {
    LinearConstraint c;
    c.rel = Rel::Eq;
    for (const auto& row : zs) c.add(row[static_cast<std::size_t>(i)], Rational(1));
    const Slot& s = slots[static_cast<std::size_t>(i)];
    if (s.v && !s.a.is_zero()) c.add(*s.v, -s.a);
    c.rhs = s.c;
    lp.add(std::move(c));
  }
  for (std::size_t k = 0; k < ws.size(); ++k) {
    LinearConstraint c;
    c.rel = Rel::Eq;
    for (const auto& z : zs[k]) c.add(z, Rational(1));
    c.add(ws[k], -Rational(keyed_values[k].second));
    lp.add(std::move(c));
  }
  for (std::size_t k = 0; k < ws.size(); ++k) {
    for (const auto& z : zs[k]) {
      lp.add(le({{z, Rational(-1)}}, Rational(0)));
      lp.add(le({{z, Rational(1)}, {ws[k], Rational(-1)}}, Rational(0)));
    }
  }
}

std::vector<std::pair<std::vector<long long>, long long>> truncated_keys(long long width, int q) {
  std::vector<std::pair<std::vector<long long>, long long>> keys;
  const long long block = 1LL << q;
  for (long long t = 0; t <= width / (2 * block); ++t) {
    for (long long r = 0; r < block; ++r) keys.push_back({{t, r}, block * (2 * t + 1) + r});
  }
  return keys;
}

void check_q(int width, int q) {
  if (q < 0 || q > bit_length(width) - 1) {
    throw InvalidArgument("q must lie in 0..|n|-1 (got q = " + std::to_string(q) + ")");
  }
}

std::vector<VarId> bit_vars(int n, const Prefix& prefix) {
  std::vector<VarId> z;
  for (int k = 1; k <= bit_length(n); ++k) z.push_back(child_var(prefix, {"b", {}, {k}}));
  return z;
}

void add_bit_rows(LinearProgram& lp, const std::vector<VarId>& xs, const std::vector<VarId>& z,
                  const Prefix& prefix) {
  const int bits = static_cast<int>(z.size());
  lp.aux_vars.insert(z.begin(), z.end());
  for (int q = 0; q < bits; ++q) {
    std::vector<Slot> slots;
    for (const auto& x : xs) slots.push_back(Slot::var(x));
    for (long long k = 0; k < (1LL << q); ++k) slots.push_back(Slot::one());
    for (int j = 1; j <= q; ++j) {
      for (long long k = 0; k < (1LL << (j - 1)); ++k) slots.push_back(Slot::var(z[static_cast<std::size_t>(j - 1)]));
    }
    slots.push_back(Slot::flip(z[static_cast<std::size_t>(q)]));
    Prefix row = prefix;
    row.push_back({"row", {}, {q}});
    add_slice_mixture(lp, row, slots, truncated_keys(static_cast<long long>(slots.size()), q),
                      SlotIndex::Param);
  }
}

}  // namespace

int bit_length(long long n) {
  if (n < 1) throw InvalidArgument("bit length needs n >= 1");
  int b = 0;
  while (n > 0) {
    ++b;
    n >>= 1;
  }
  return b;
}

std::vector<VarId> standard_inputs(int n) {
  std::vector<VarId> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(VarId::input("X", {i}));
  return xs;
}

VarId standard_output() { return VarId::input("Y", {}); }

GadgetOutput ex_slice_lp(int n, long long t, const std::vector<VarId>& xs) {
  if (t < 0 || t > n) throw InvalidArgument("ex-slice needs 0 <= t <= n");
  GadgetOutput g = start(n, xs, {});
  LinearConstraint sum;
  sum.rel = Rel::Eq;
  sum.rhs = Rational(t);
  for (const auto& x : xs) sum.add(x, Rational(1));
  g.lp.add(std::move(sum));
  for (const auto& x : xs) g.lp.add_box(x, Rational(0), Rational(1));
  return g;
}

GadgetOutput pp_lift(int n, const std::vector<VarId>& xs, const Prefix& prefix, SlotIndex slots) {
  GadgetOutput g = start(n, xs, prefix);
  std::vector<Slot> coords;
  for (const auto& x : xs) coords.push_back(Slot::var(x));
  std::vector<std::pair<std::vector<long long>, long long>> keys;
  for (long long t = 0; t <= n / 2; ++t) keys.push_back({{t}, 2 * t + 1});
  add_slice_mixture(g.lp, prefix, coords, keys, slots);
  return g;
}

GadgetOutput truncated_pp_lift(int n, int q, const std::vector<VarId>& xs, const Prefix& prefix,
                               SlotIndex slots) {
  if (n >= 1) check_q(n, q);
  GadgetOutput g = start(n, xs, prefix);
  std::vector<Slot> coords;
  for (const auto& x : xs) coords.push_back(Slot::var(x));
  add_slice_mixture(g.lp, prefix, coords, truncated_keys(n, q), slots);
  return g;
}

GadgetOutput bit_extraction_lp(int n, const std::vector<VarId>& xs, const Prefix& prefix) {
  GadgetOutput g = start(n, xs, prefix);
  g.z = bit_vars(n, prefix);
  add_bit_rows(g.lp, xs, g.z, prefix);
  return g;
}

GadgetOutput ex_gate_lp(int n, long long t, const std::vector<VarId>& xs, const VarId& y,
                        const Prefix& prefix) {
  if (n >= 1 && (t < 0 || t > n)) throw InvalidArgument("ex-gate needs 0 <= t <= n");
  GadgetOutput g = bit_extraction_lp(n, xs, prefix);
  g.y = y;
  register_var(g.lp, y);
  const int bits = static_cast<int>(g.z.size());
  LinearConstraint lower;  // sum_{K0} z - sum_{K1} z - y <= |n| - 1 - |K1|
  long long k1 = 0;
  for (int k = 0; k < bits; ++k) {
    const bool one = ((t >> k) & 1) != 0;
    lower.add(g.z[static_cast<std::size_t>(k)], Rational(one ? -1 : 1));
    if (one) ++k1;
  }
  lower.add(y, Rational(-1));
  lower.rhs = Rational(bits - 1 - k1);
  g.lp.add(std::move(lower));
  for (int k = 0; k < bits; ++k) {
    const VarId& zk = g.z[static_cast<std::size_t>(k)];
    if (((t >> k) & 1) != 0) {
      g.lp.add(le({{y, Rational(1)}, {zk, Rational(1)}}, Rational(1)));
    } else {
      g.lp.add(le({{y, Rational(1)}, {zk, Rational(-1)}}, Rational(0)));
    }
  }
  g.lp.add_box(y, Rational(0), Rational(1));
  return g;
}

GadgetOutput gate_lp(BoolGate kind, const std::vector<VarId>& xs, const VarId& y) {
  if (kind == BoolGate::Not && xs.size() != 1) throw InvalidArgument("NOT takes exactly one input");
  if (xs.empty()) throw InvalidArgument("gate needs at least one input");
  const long long n = static_cast<long long>(xs.size());
  GadgetOutput g = start(static_cast<int>(n), xs, {});
  g.y = y;
  register_var(g.lp, y);
  LinearProgram& lp = g.lp;
  switch (kind) {
    case BoolGate::And: {
      LinearConstraint c;  // y >= sum x - n + 1
      for (const auto& x : xs) c.add(x, Rational(1));
      c.add(y, Rational(-1));
      c.rhs = Rational(n - 1);
      lp.add(std::move(c));
      for (const auto& x : xs) lp.add(le({{y, Rational(1)}, {x, Rational(-1)}}, Rational(0)));
      break;
    }
    case BoolGate::Or: {
      LinearConstraint c;  // 1 - y >= sum (1 - x) - n + 1
      for (const auto& x : xs) c.add(x, Rational(-1));
      c.add(y, Rational(1));
      c.rhs = Rational(0);
      lp.add(std::move(c));
      for (const auto& x : xs) lp.add(le({{x, Rational(1)}, {y, Rational(-1)}}, Rational(0)));
      break;
    }
    case BoolGate::Not: {
      LinearConstraint c;  // y = 1 - x
      c.rel = Rel::Eq;
      c.add(xs[0], Rational(1));
      c.add(y, Rational(1));
      c.rhs = Rational(1);
      lp.add(std::move(c));
      break;
    }
  }
  for (const auto& x : xs) lp.add_box(x, Rational(0), Rational(1));
  lp.add_box(y, Rational(0), Rational(1));
  return g;
}

VarId relabel_internal(const VarId& v, const Prefix& from, const Prefix& to,
                       const std::vector<int>& tau) {
  if (!v.is_aux() || v.path.size() <= from.size() ||
      !std::equal(from.begin(), from.end(), v.path.begin())) {
    return v;
  }
  VarId out = v;
  out.path.erase(out.path.begin(), out.path.begin() + static_cast<std::ptrdiff_t>(from.size()));
  out.path.insert(out.path.begin(), to.begin(), to.end());
  Segment& last = out.path.back();
  if (last.tag != "z") return out;
  auto move = [&](auto& slot) {
    if (slot >= 1 && static_cast<std::size_t>(slot) <= tau.size()) {
      slot = tau[static_cast<std::size_t>(slot - 1)];
    }
  };
  if (!last.dom.empty()) {
    move(last.dom.back());
  } else if (!last.par.empty()) {
    move(last.par.back());
  }
  return out;
}

AuxMap slot_witness(const GadgetOutput& g, const Permutation& pi) {
  if (pi.n() != static_cast<int>(g.x.size())) throw InvalidArgument("permutation must act on the x-slots");
  AuxMap sigma;
  for (const auto& v : g.lp.aux_vars) sigma.emplace(v, relabel_internal(v, g.prefix, g.prefix, pi.image()));
  return sigma;
}

}  // namespace symlift
