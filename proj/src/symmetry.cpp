#include "symlift/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "symlift/error.hpp"
#include "symlift/guards.hpp"

namespace symlift {

namespace {

constexpr std::size_t kExtIdLimit = 40320;

VarId map_input(const VarId& v, const Permutation& pi) { return VarId::input(v.rel, pi.apply(v.tuple)); }

// Partition refinement over the disjoint union of the pi-image of the LP
// (auxiliaries untouched) and the LP itself. Inputs are matched by name,
// auxiliaries by colour.
class ExtensionSearch {
 public:
  using Leaf = std::function<bool(const AuxMap&)>;

  ExtensionSearch(const LinearProgram& lp, const Permutation& pi) : lp_(lp), pi_(pi) {
    require_guard(lp.aux_vars.size() <= Guards::kExtensionAux, "extension search auxiliary count");
    aux_.assign(lp.aux_vars.begin(), lp.aux_vars.end());
    for (std::size_t i = 0; i < aux_.size(); ++i) aux_index_.emplace(aux_[i], static_cast<int>(i));
    load(canonicalize(apply(lp, pi, identity_map(lp))), a_);
    load(canonicalize(lp), b_);
  }

  // Visits invariant extensions, optionally restricted to those sending
  // aux_[forced.first] to aux_[forced.second], until `leaf` returns true.
  bool run(std::optional<std::pair<int, int>> forced, const Leaf& leaf) {
    std::vector<int> ca(aux_.size(), 0);
    std::vector<int> cb(aux_.size(), 0);
    if (forced) {
      ca[static_cast<std::size_t>(forced->first)] = 1;
      cb[static_cast<std::size_t>(forced->second)] = 1;
    }
    return search(std::move(ca), std::move(cb), leaf);
  }

  const std::vector<VarId>& aux() const { return aux_; }
  int index(const VarId& v) const { return aux_index_.at(v); }

  // Stable colours of the identity problem, used to prune orbit candidates.
  std::optional<std::vector<int>> stable_colours() {
    std::vector<int> ca(aux_.size(), 0);
    std::vector<int> cb(aux_.size(), 0);
    if (!refine(ca, cb)) return std::nullopt;
    return ca;
  }

 private:
  struct Term {
    Rational coef;
    int kind;  // 0 input, 1 aux
    int id;
  };
  struct Row {
    Rational rhs;
    std::vector<Term> terms;
  };
  struct Side {
    std::vector<Row> rows;
    std::vector<std::vector<std::pair<Rational, int>>> incidence;
  };

  using RowSig = std::pair<Rational, std::vector<std::tuple<Rational, int, int>>>;
  using AuxSig = std::pair<int, std::vector<std::pair<Rational, int>>>;

  void load(const LinearProgram& lp, Side& side) {
    side.incidence.assign(aux_.size(), {});
    for (const auto& c : lp.constraints) {
      Row row{c.rhs, {}};
      const int r = static_cast<int>(side.rows.size());
      for (const auto& [v, coef] : c.coeffs) {
        if (v.is_input()) {
          auto it = input_index_.try_emplace(v, static_cast<int>(input_index_.size())).first;
          row.terms.push_back({coef, 0, it->second});
        } else {
          const int id = aux_index_.at(v);
          row.terms.push_back({coef, 1, id});
          side.incidence[static_cast<std::size_t>(id)].emplace_back(coef, r);
        }
      }
      side.rows.push_back(std::move(row));
    }
  }

  static RowSig row_sig(const Row& row, const std::vector<int>& colour) {
    RowSig sig{row.rhs, {}};
    sig.second.reserve(row.terms.size());
    for (const auto& t : row.terms) {
      sig.second.emplace_back(t.coef, t.kind, t.kind == 0 ? t.id : colour[static_cast<std::size_t>(t.id)]);
    }
    std::sort(sig.second.begin(), sig.second.end());
    return sig;
  }

  static bool balanced(const std::vector<int>& x, const std::vector<int>& y, std::size_t classes) {
    std::vector<int> cx(classes, 0);
    std::vector<int> cy(classes, 0);
    for (int c : x) ++cx[static_cast<std::size_t>(c)];
    for (int c : y) ++cy[static_cast<std::size_t>(c)];
    return cx == cy;
  }

  static std::size_t count_classes(const std::vector<int>& ca, const std::vector<int>& cb) {
    std::set<int> s(ca.begin(), ca.end());
    s.insert(cb.begin(), cb.end());
    return s.size();
  }

  // Refines to the coarsest equitable partition; false when the two sides
  // cannot be matched.
  bool refine(std::vector<int>& ca, std::vector<int>& cb) const {
    std::size_t classes = count_classes(ca, cb);
    while (true) {
      std::map<RowSig, int> row_ids;
      auto colour_rows = [&](const Side& side, const std::vector<int>& col) {
        std::vector<int> out;
        out.reserve(side.rows.size());
        for (const auto& row : side.rows) {
          out.push_back(row_ids.try_emplace(row_sig(row, col), static_cast<int>(row_ids.size())).first->second);
        }
        return out;
      };
      const std::vector<int> ra = colour_rows(a_, ca);
      const std::vector<int> rb = colour_rows(b_, cb);
      if (!balanced(ra, rb, row_ids.size())) return false;

      std::map<AuxSig, int> aux_ids;
      auto colour_aux = [&](const Side& side, const std::vector<int>& col, const std::vector<int>& rc) {
        std::vector<int> out;
        out.reserve(col.size());
        for (std::size_t i = 0; i < col.size(); ++i) {
          AuxSig sig{col[i], {}};
          for (const auto& [coef, r] : side.incidence[i]) sig.second.emplace_back(coef, rc[static_cast<std::size_t>(r)]);
          std::sort(sig.second.begin(), sig.second.end());
          out.push_back(aux_ids.try_emplace(std::move(sig), static_cast<int>(aux_ids.size())).first->second);
        }
        return out;
      };
      std::vector<int> na = colour_aux(a_, ca, ra);
      std::vector<int> nb = colour_aux(b_, cb, rb);
      if (!balanced(na, nb, aux_ids.size())) return false;
      ca = std::move(na);
      cb = std::move(nb);
      if (aux_ids.size() == classes) return true;
      classes = aux_ids.size();
    }
  }

  bool search(std::vector<int> ca, std::vector<int> cb, const Leaf& leaf) {
    if (!refine(ca, cb)) return false;
    std::map<int, std::vector<int>> class_a;
    std::map<int, std::vector<int>> class_b;
    for (std::size_t i = 0; i < ca.size(); ++i) {
      class_a[ca[i]].push_back(static_cast<int>(i));
      class_b[cb[i]].push_back(static_cast<int>(i));
    }
    int pick = -1;
    std::size_t best = 0;
    for (const auto& [c, members] : class_a) {
      if (members.size() > 1 && (pick < 0 || members.size() < best)) {
        pick = c;
        best = members.size();
      }
    }
    if (pick < 0) {
      AuxMap sigma;
      for (const auto& [c, members] : class_a) {
        sigma.emplace(aux_[static_cast<std::size_t>(members[0])], aux_[static_cast<std::size_t>(class_b[c][0])]);
      }
      if (!is_invariant(lp_, pi_, sigma)) return false;
      return leaf(sigma);
    }
    const int fresh = static_cast<int>(class_a.size());
    const int a = class_a[pick][0];
    for (int b : class_b[pick]) {
      std::vector<int> na = ca;
      std::vector<int> nb = cb;
      na[static_cast<std::size_t>(a)] = fresh;
      nb[static_cast<std::size_t>(b)] = fresh;
      if (search(std::move(na), std::move(nb), leaf)) return true;
    }
    return false;
  }

  const LinearProgram& lp_;
  Permutation pi_;
  std::vector<VarId> aux_;
  std::map<VarId, int> aux_index_;
  std::map<VarId, int> input_index_;
  Side a_;
  Side b_;
};

std::vector<LinearConstraint> sorted_rows(const LinearProgram& lp) {
  std::vector<LinearConstraint> rows = canonicalize(lp).constraints;
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Least subset S of [n] (by size, then lexicographically) such that no
// permutation fixing S pointwise moves the element.
std::vector<int> least_support(const std::vector<Permutation>& perms, const std::vector<char>& moved, int n,
                               std::size_t& checked) {
  for (int size = 0; size <= n; ++size) {
    std::vector<int> s(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) s[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      bool ok = true;
      std::size_t count = 0;
      for (std::size_t k = 0; k < perms.size() && ok; ++k) {
        if (!perms[k].fixes_pointwise(s)) continue;
        ++count;
        if (moved[k]) ok = false;
      }
      if (ok) {
        checked = count;
        return s;
      }
      int pos = size - 1;
      while (pos >= 0 && s[static_cast<std::size_t>(pos)] == n - size + pos + 1) --pos;
      if (pos < 0) break;
      ++s[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < size; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw std::logic_error("no support found");
}

std::vector<int> equality_type(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::map<int, int> label;
  for (const auto* part : {&a, &b}) {
    for (int x : *part) out.push_back(label.try_emplace(x, static_cast<int>(label.size())).first->second);
  }
  return out;
}

}  // namespace

LinearProgram apply(const LinearProgram& lp, const Permutation& pi, const AuxMap& sigma) {
  if (pi.n() != lp.n) throw InvalidArgument("permutation degree does not match LP domain size");
  if (sigma.size() != lp.aux_vars.size()) throw InvalidArgument("aux map is not total on the auxiliaries");
  std::set<VarId> image;
  for (const auto& [from, to] : sigma) {
    if (!lp.aux_vars.count(from)) throw InvalidArgument("aux map is not total on the auxiliaries");
    if (!lp.aux_vars.count(to)) throw InvalidArgument("aux map leaves the auxiliaries: " + to.str());
    if (!image.insert(to).second) throw InvalidArgument("aux map is not injective");
  }
  LinearProgram out;
  out.n = lp.n;
  out.vocabulary = lp.vocabulary;
  out.aux_vars = lp.aux_vars;
  out.constraints.reserve(lp.constraints.size());
  for (const auto& c : lp.constraints) {
    LinearConstraint r;
    r.rel = c.rel;
    r.rhs = c.rhs;
    for (const auto& [v, coef] : c.coeffs) r.coeffs.emplace(v.is_input() ? map_input(v, pi) : sigma.at(v), coef);
    out.constraints.push_back(std::move(r));
  }
  return out;
}

bool is_invariant(const LinearProgram& lp, const Permutation& pi, const AuxMap& sigma) {
  return sorted_rows(apply(lp, pi, sigma)) == sorted_rows(lp);
}

AuxMap identity_map(const LinearProgram& lp) {
  AuxMap id;
  for (const auto& v : lp.aux_vars) id.emplace(v, v);
  return id;
}

AuxMap compose(const AuxMap& a, const AuxMap& b) {
  AuxMap out;
  for (const auto& [v, w] : b) {
    auto it = a.find(w);
    if (it == a.end()) throw InvalidArgument("cannot compose aux maps with different domains");
    out.emplace(v, it->second);
  }
  return out;
}

std::optional<AuxMap> find_extension(const LinearProgram& lp, const Permutation& pi) {
  if (pi.n() != lp.n) throw InvalidArgument("permutation degree does not match LP domain size");
  ExtensionSearch search(lp, pi);
  if (pi.is_identity()) return identity_map(lp);
  std::optional<AuxMap> found;
  search.run(std::nullopt, [&](const AuxMap& sigma) {
    found = sigma;
    return true;
  });
  return found;
}

std::vector<AuxMap> ext_id(const LinearProgram& lp) {
  ExtensionSearch search(lp, Permutation::identity(lp.n));
  std::vector<AuxMap> out;
  search.run(std::nullopt, [&](const AuxMap& sigma) {
    out.push_back(sigma);
    require_guard(out.size() <= kExtIdLimit, "ext_id group size");
    return false;
  });
  std::sort(out.begin(), out.end());
  const AuxMap id = identity_map(lp);
  auto it = std::find(out.begin(), out.end(), id);
  if (it == out.end()) throw std::logic_error("identity missing from ext_id");
  std::rotate(out.begin(), it, it + 1);
  return out;
}

std::vector<std::vector<VarId>> ext_id_orbits(const LinearProgram& lp) {
  ExtensionSearch search(lp, Permutation::identity(lp.n));
  const auto& aux = search.aux();
  const auto colours = search.stable_colours();
  if (!colours) throw std::logic_error("identity problem failed to refine");
  std::vector<char> assigned(aux.size(), 0);
  std::vector<std::vector<VarId>> orbits;
  for (std::size_t a = 0; a < aux.size(); ++a) {
    if (assigned[a]) continue;
    assigned[a] = 1;
    std::vector<VarId> orbit{aux[a]};
    for (std::size_t b = a + 1; b < aux.size(); ++b) {
      if (assigned[b] || (*colours)[b] != (*colours)[a]) continue;
      const bool hit = search.run(std::make_pair(static_cast<int>(a), static_cast<int>(b)),
                                  [](const AuxMap&) { return true; });
      if (hit) {
        assigned[b] = 1;
        orbit.push_back(aux[b]);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_rigid(const LinearProgram& lp) {
  const auto orbits = ext_id_orbits(lp);
  return std::all_of(orbits.begin(), orbits.end(), [](const auto& o) { return o.size() == 1; });
}

LinearProgram rigidify(const LinearProgram& lp) {
  LinearProgram cur = lp;
  while (true) {
    const auto orbits = ext_id_orbits(cur);
    if (std::all_of(orbits.begin(), orbits.end(), [](const auto& o) { return o.size() == 1; })) return cur;
    std::map<VarId, VarId> rep;
    for (const auto& orbit : orbits) {
      for (const auto& v : orbit) rep.emplace(v, orbit.front());
    }
    LinearProgram next;
    next.n = cur.n;
    next.vocabulary = cur.vocabulary;
    for (const auto& orbit : orbits) next.aux_vars.insert(orbit.front());
    for (const auto& c : cur.constraints) {
      LinearConstraint r;
      r.rel = c.rel;
      r.rhs = c.rhs;
      for (const auto& [v, coef] : c.coeffs) r.add(v.is_input() ? v : rep.at(v), coef);
      next.constraints.push_back(std::move(r));
    }
    cur = std::move(next);
  }
}

ConstraintKey constraint_key(const LinearConstraint& c) {
  LinearProgram one;
  one.constraints.push_back(c);
  return sorted_rows(one);
}

VarId RigidAction::act(std::size_t k, const VarId& v) const {
  return v.is_input() ? map_input(v, perms[k]) : sigma[k].at(v);
}

LinearConstraint RigidAction::act(std::size_t k, const LinearConstraint& c) const {
  LinearConstraint r;
  r.rel = c.rel;
  r.rhs = c.rhs;
  for (const auto& [v, coef] : c.coeffs) r.coeffs.emplace(act(k, v), coef);
  return r;
}

RigidAction rigid_action(const LinearProgram& lp) {
  require_guard(lp.n <= Guards::kSupportN, "support computation domain size");
  if (!is_rigid(lp)) throw InvalidArgument("LP is not rigid");
  std::map<Permutation, AuxMap> found;
  found.emplace(Permutation::identity(lp.n), identity_map(lp));
  std::vector<std::pair<Permutation, AuxMap>> gens;
  for (const auto& g : sym_generators(lp.n)) {
    auto sigma = find_extension(lp, g);
    if (!sigma) throw InvalidArgument("LP is not Sym_n-symmetric under " + g.str());
    gens.emplace_back(g, std::move(*sigma));
  }
  std::vector<Permutation> frontier{Permutation::identity(lp.n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& [g, sg] : gens) {
        Permutation q = g * p;
        if (found.count(q)) continue;
        found.emplace(q, compose(sg, found.at(p)));
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  RigidAction action;
  for (const auto& p : all_permutations(lp.n)) {
    action.sigma.push_back(found.at(p));
    action.perms.push_back(p);
  }
  return action;
}

SupportReport min_support(const LinearProgram& lp, const RigidAction& action, const SupportTarget& target) {
  std::vector<char> moved(action.perms.size(), 0);
  if (const auto* v = std::get_if<VarId>(&target)) {
    if (!lp.aux_vars.count(*v)) throw InvalidArgument("support target is not an auxiliary: " + v->str());
    for (std::size_t k = 0; k < moved.size(); ++k) moved[k] = action.act(k, *v) != *v;
  } else {
    const std::size_t i = std::get<std::size_t>(target);
    if (i >= lp.constraints.size()) throw InvalidArgument("support target constraint index out of range");
    const ConstraintKey key = constraint_key(lp.constraints[i]);
    for (std::size_t k = 0; k < moved.size(); ++k) {
      moved[k] = constraint_key(action.act(k, lp.constraints[i])) != key;
    }
  }
  SupportReport report;
  report.element = target;
  report.support = least_support(action.perms, moved, lp.n, report.verified_against);
  return report;
}

SupportReport min_support(const LinearProgram& lp_rigid, const SupportTarget& target) {
  return min_support(lp_rigid, rigid_action(lp_rigid), target);
}

std::vector<std::vector<int>> distinct_tuples(int n, int k) {
  if (k < 0) throw InvalidArgument("identifier length must be non-negative");
  const int head = std::min(n, k);
  std::vector<std::vector<int>> out;
  for (auto& t : all_tuples(n, head)) {
    std::set<int> seen(t.begin(), t.end());
    if (static_cast<int>(seen.size()) != head) continue;
    if (k > n) t.resize(static_cast<std::size_t>(k), t.back());
    out.push_back(std::move(t));
  }
  return out;
}

VarId manageable_var(long long orbit, const std::vector<int>& tuple) { return VarId::aux("y", tuple, {orbit}); }

namespace {

// The sorted support padded to an identifier.
std::vector<int> identifier_for(std::vector<int> support, int n, int k) {
  const int head = std::min(n, k);
  for (int x = 1; static_cast<int>(support.size()) < head; ++x) {
    if (std::find(support.begin(), support.end(), x) == support.end()) support.push_back(x);
  }
  std::sort(support.begin(), support.end());
  if (k > n) support.resize(static_cast<std::size_t>(k), support.back());
  return support;
}

// Some permutation sending the distinct head of s onto that of i, completed
// increasingly on the remaining points.
Permutation sending(const std::vector<int>& s, const std::vector<int>& i, int n, int k) {
  const std::size_t head = static_cast<std::size_t>(std::min(n, k));
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t m = 0; m < head; ++m) {
    image[static_cast<std::size_t>(s[m] - 1)] = i[m];
    used[static_cast<std::size_t>(i[m])] = 1;
  }
  int next = 1;
  for (auto& x : image) {
    if (x) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    x = next;
    used[static_cast<std::size_t>(next)] = 1;
  }
  return Permutation(std::move(image));
}

}  // namespace

ManageableLift make_manageable(const LinearProgram& lp_rigid, int k) {
  require_guard(lp_rigid.n <= Guards::kManageableN, "manageable lift domain size");
  require_guard(k <= Guards::kManageableK, "manageable lift identifier length");
  if (k < 0) throw InvalidArgument("k must be non-negative");
  const int n = lp_rigid.n;
  const RigidAction action = rigid_action(lp_rigid);
  std::map<Permutation, std::size_t> perm_index;
  for (std::size_t p = 0; p < action.perms.size(); ++p) perm_index.emplace(action.perms[p], p);
  const auto ids = distinct_tuples(n, k);

  auto check_support = [&](const SupportReport& r, const std::string& what) {
    if (static_cast<int>(r.support.size()) > k) {
      throw InvalidArgument(what + " has support of size " + std::to_string(r.support.size()) + " > k");
    }
  };

  ManageableLift out;
  out.k = k;
  out.lp.n = n;
  out.lp.vocabulary = lp_rigid.vocabulary;

  std::map<VarId, std::vector<VarId>> replace;
  long long t = 0;
  for (const auto& v : lp_rigid.aux_vars) {
    if (replace.count(v)) continue;
    const SupportReport r = min_support(lp_rigid, action, v);
    check_support(r, v.str());
    const auto s = identifier_for(r.support, n, k);
    for (const auto& i : ids) {
      const VarId y = manageable_var(t, i);
      replace[action.act(perm_index.at(sending(s, i, n, k)), v)].push_back(y);
      out.lp.aux_vars.insert(y);
    }
    ++t;
  }

  const std::vector<LinearConstraint> rows = sorted_rows(lp_rigid);
  const std::set<LinearConstraint> unique(rows.begin(), rows.end());
  std::set<LinearConstraint> done;
  long long q = 0;
  for (const auto& row : unique) {
    if (done.count(row)) continue;
    std::vector<char> moved(action.perms.size(), 0);
    for (std::size_t p = 0; p < moved.size(); ++p) {
      const LinearConstraint img = action.act(p, row);
      moved[p] = img != row;
      done.insert(img);
    }
    SupportReport r;
    r.support = least_support(action.perms, moved, n, r.verified_against);
    check_support(r, "constraint " + row.str());
    const auto s = identifier_for(r.support, n, k);
    for (const auto& i : ids) {
      const LinearConstraint img = action.act(perm_index.at(sending(s, i, n, k)), row);
      LinearConstraint c;
      c.rel = Rel::Le;
      c.rhs = img.rhs;
      for (const auto& [v, coef] : img.coeffs) {
        if (v.is_input()) {
          c.add(v, coef);
        } else {
          for (const auto& y : replace.at(v)) c.add(y, coef);
        }
      }
      out.lp.constraints.push_back(std::move(c));
      out.constraint_ids.push_back({q, i});
    }
    ++q;
  }
  return out;
}

bool check_manageable_properties(const ManageableLift& m, int k) {
  const LinearProgram& lp = m.lp;
  if (m.constraint_ids.size() != lp.constraints.size()) {
    throw InvalidArgument("constraint identifiers do not match the constraints");
  }
  const auto ids = distinct_tuples(lp.n, k);
  const std::set<std::vector<int>> id_set(ids.begin(), ids.end());
  std::vector<std::pair<long long, std::vector<int>>> aux;
  for (const auto& v : lp.aux_vars) {
    const bool shaped = v.path.size() == 1 && v.path[0].tag == "y" && v.path[0].par.size() == 1 &&
                        id_set.count(v.path[0].dom);
    if (!shaped) throw InvalidArgument("auxiliary " + v.str() + " is not indexed by (orbit, identifier)");
    aux.emplace_back(v.path[0].par[0], v.path[0].dom);
  }
  for (std::size_t c = 0; c < lp.constraints.size(); ++c) {
    if (lp.constraints[c].rel != Rel::Le) throw InvalidArgument("manageable constraints must be inequalities");
    if (!id_set.count(m.constraint_ids[c].tuple)) {
      throw InvalidArgument("constraint identifier is not in [n]^(k)");
    }
  }
  const auto inputs = lp.input_variables();

  std::map<long long, Rational> rhs;
  std::map<std::tuple<long long, long long, std::vector<int>>, Rational> aux_coef;
  std::map<std::tuple<long long, std::string, std::vector<int>>, Rational> input_coef;
  for (std::size_t c = 0; c < lp.constraints.size(); ++c) {
    const auto& row = lp.constraints[c];
    const auto& [q, i] = m.constraint_ids[c];
    if (rhs.try_emplace(q, row.rhs).first->second != row.rhs) return false;
    for (std::size_t a = 0; a < aux.size(); ++a) {
      const VarId y = manageable_var(aux[a].first, aux[a].second);
      auto it = row.coeffs.find(y);
      const Rational coef = it == row.coeffs.end() ? Rational() : it->second;
      auto key = std::make_tuple(q, aux[a].first, equality_type(aux[a].second, i));
      if (aux_coef.try_emplace(std::move(key), coef).first->second != coef) return false;
    }
    for (const auto& x : inputs) {
      auto it = row.coeffs.find(x);
      const Rational coef = it == row.coeffs.end() ? Rational() : it->second;
      auto key = std::make_tuple(q, x.rel, equality_type(x.tuple, i));
      if (input_coef.try_emplace(std::move(key), coef).first->second != coef) return false;
    }
  }
  return true;
}

}  // namespace symlift
