// Brute-force vertex enumeration. Deliberately shares nothing with the
// simplex code: it is the oracle the solver is checked against.

#include <algorithm>
#include <functional>
#include <set>

#include "symlift/guards.hpp"
#include "symlift/solver.hpp"

namespace symlift {

namespace {

using Vec = std::vector<Rational>;

struct HalfSpace {
  Vec a;
  Rational b;
};

// Incremental row echelon form used to test linear independence.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  // Adds `v` if it is independent of the stored rows.
  bool add(const Vec& v) {
    Vec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (r[p].is_zero()) continue;
      const Rational f = r[p];
      for (std::size_t j = 0; j < dim_; ++j) r[j] -= f * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    const Rational inv = Rational(1) / r[p];
    for (auto& e : r) e *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Basis of {d : row . d = 0 for every stored row}.
  std::vector<Vec> null_space() const {
    std::vector<Vec> red = rows_;
    for (std::size_t k = 0; k < red.size(); ++k) {
      for (std::size_t l = 0; l < red.size(); ++l) {
        if (l == k || red[l][pivots_[k]].is_zero()) continue;
        const Rational f = red[l][pivots_[k]];
        for (std::size_t j = 0; j < dim_; ++j) red[l][j] -= f * red[k][j];
      }
    }
    std::vector<char> is_pivot(dim_, 0);
    for (std::size_t p : pivots_) is_pivot[p] = 1;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < dim_; ++f) {
      if (is_pivot[f]) continue;
      Vec d(dim_);
      d[f] = Rational(1);
      for (std::size_t k = 0; k < red.size(); ++k) d[pivots_[k]] = -red[k][f];
      basis.push_back(std::move(d));
    }
    return basis;
  }

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Solves the square nonsingular system M x = rhs by Gauss-Jordan.
Vec solve_square(std::vector<Vec> m, Vec rhs) {
  const std::size_t d = rhs.size();
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (m[p][c].is_zero()) ++p;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    const Rational inv = Rational(1) / m[c][c];
    for (auto& e : m[c]) e *= inv;
    rhs[c] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < d; ++j) m[r][j] -= f * m[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  return rhs;
}

Rational dot(const Vec& a, const Vec& x) {
  Rational s;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!a[j].is_zero()) s += a[j] * x[j];
  }
  return s;
}

// Enumerates every choice of `need` rows from `pool` that keeps `base`
// independent, calling `leaf` with the selected rows appended to `fixed`.
void choose_independent(const std::vector<HalfSpace>& pool, std::size_t start, std::size_t need,
                        const Echelon& base, std::vector<std::size_t>& chosen,
                        const std::function<void(const std::vector<std::size_t>&)>& leaf) {
  if (need == 0) {
    leaf(chosen);
    return;
  }
  for (std::size_t i = start; i + need <= pool.size(); ++i) {
    Echelon next = base;
    if (!next.add(pool[i].a)) continue;
    chosen.push_back(i);
    choose_independent(pool, i + 1, need - 1, next, chosen, leaf);
    chosen.pop_back();
  }
}

struct Geometry {
  std::vector<VarId> vars;
  std::vector<HalfSpace> equalities;
  std::vector<HalfSpace> inequalities;
  bool trivially_empty = false;
};

Geometry build(const LinearProgram& lp) {
  Geometry g;
  const auto occurring = lp.occurring_variables();
  g.vars.assign(occurring.begin(), occurring.end());
  const std::size_t d = g.vars.size();
  for (const auto& c : lp.constraints) {
    HalfSpace h{Vec(d), c.rhs};
    bool any = false;
    for (std::size_t j = 0; j < d; ++j) {
      auto it = c.coeffs.find(g.vars[j]);
      if (it != c.coeffs.end() && !it->second.is_zero()) {
        h.a[j] = it->second;
        any = true;
      }
    }
    if (!any) {
      const int s = c.rhs.sign();
      if (c.rel == Rel::Le ? s < 0 : s != 0) g.trivially_empty = true;
      continue;
    }
    (c.rel == Rel::Eq ? g.equalities : g.inequalities).push_back(std::move(h));
  }
  return g;
}

bool inside(const Geometry& g, const Vec& x) {
  for (const auto& h : g.equalities) {
    if (dot(h.a, x) != h.b) return false;
  }
  for (const auto& h : g.inequalities) {
    if (dot(h.a, x) > h.b) return false;
  }
  return true;
}

std::set<Vec> basic_solutions(const Geometry& g) {
  const std::size_t d = g.vars.size();
  std::set<Vec> points;
  Echelon base(d);
  std::vector<HalfSpace> eq_basis;
  for (const auto& h : g.equalities) {
    if (base.add(h.a)) eq_basis.push_back(h);
  }
  if (base.rank() + g.inequalities.size() < d) return points;
  std::vector<std::size_t> chosen;
  choose_independent(g.inequalities, 0, d - base.rank(), base, chosen,
                     [&](const std::vector<std::size_t>& picks) {
                       std::vector<Vec> m;
                       Vec rhs;
                       for (const auto& h : eq_basis) {
                         m.push_back(h.a);
                         rhs.push_back(h.b);
                       }
                       for (std::size_t i : picks) {
                         m.push_back(g.inequalities[i].a);
                         rhs.push_back(g.inequalities[i].b);
                       }
                       Vec x = d == 0 ? Vec{} : solve_square(std::move(m), std::move(rhs));
                       if (inside(g, x)) points.insert(std::move(x));
                     });
  return points;
}

// The recession cone is pointed here; it is nonzero iff some extreme ray
// exists, and every extreme ray is cut out by d-1 independent active rows.
bool has_ray(const Geometry& g) {
  const std::size_t d = g.vars.size();
  Echelon base(d);
  for (const auto& h : g.equalities) base.add(h.a);
  if (base.rank() >= d) return false;
  bool found = false;
  std::vector<std::size_t> chosen;
  choose_independent(g.inequalities, 0, d - 1 - base.rank(), base, chosen,
                     [&](const std::vector<std::size_t>& picks) {
                       if (found) return;
                       Echelon sub = base;
                       for (std::size_t i : picks) sub.add(g.inequalities[i].a);
                       const Vec r = sub.null_space().front();
                       for (int s : {1, -1}) {
                         Vec dir = r;
                         if (s < 0) {
                           for (auto& e : dir) e = -e;
                         }
                         bool ok = true;
                         for (const auto& h : g.inequalities) {
                           if (dot(h.a, dir).sign() > 0) {
                             ok = false;
                             break;
                           }
                         }
                         if (ok) found = true;
                       }
                     });
  return found;
}

}  // namespace

std::vector<Assignment> enumerate_vertices(const LinearProgram& lp) {
  require_guard(lp.occurring_variables().size() <= Guards::kVertexVars,
                "vertex enumeration variable count");
  require_guard(lp.constraints.size() <= Guards::kVertexConstraints,
                "vertex enumeration constraint count");
  Geometry g = build(lp);
  if (g.trivially_empty) return {};
  const std::size_t d = g.vars.size();

  Echelon all(d);
  for (const auto& h : g.equalities) all.add(h.a);
  for (const auto& h : g.inequalities) all.add(h.a);
  if (all.rank() < d) {
    // A line lies in the region if it is nonempty; intersect with the
    // orthogonal complement of the lineality space to decide emptiness.
    Geometry pointed = g;
    for (auto& dir : all.null_space()) pointed.equalities.push_back({std::move(dir), Rational()});
    if (!basic_solutions(pointed).empty()) {
      throw UnboundedPolyhedron("feasible region contains a line");
    }
    return {};
  }

  const std::set<Vec> points = basic_solutions(g);
  if (!points.empty() && has_ray(g)) throw UnboundedPolyhedron("feasible region contains a ray");
  std::vector<Assignment> out;
  for (const auto& x : points) {
    Assignment a;
    for (std::size_t j = 0; j < d; ++j) a.emplace(g.vars[j], x[j]);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace symlift
