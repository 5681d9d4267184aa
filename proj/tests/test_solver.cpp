#include <doctest.h>

#include <bit>
#include <random>
#include <thread>

#include "corpus.hpp"
#include "symlift/error.hpp"
#include "symlift/gadgets.hpp"
#include "symlift/solver.hpp"

using namespace symlift;
using corpus::x;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

LinearProgram over_x(int n) {
  LinearProgram lp;
  lp.n = n;
  lp.vocabulary = corpus::unary_x();
  return lp;
}

Rational dot(const Objective& c, const Assignment& p) {
  Rational s;
  for (const auto& [v, a] : c) {
    const auto it = p.find(v);
    if (it != p.end()) s += a * it->second;
  }
  return s;
}

// Random boxed LP over X(1..n) with mixed EQ/LE rows.
LinearProgram random_boxed(std::mt19937& rng, int n) {
  LinearProgram lp = over_x(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> rows(1, 5);
  const int m = rows(rng);
  for (int r = 0; r < m; ++r) {
    LinearConstraint c;
    for (int i = 1; i <= n; ++i) c.add(x(i), coef(rng));
    c.rel = coef(rng) == 3 ? Rel::Eq : Rel::Le;
    c.rhs = Rational(coef(rng) + 1, 2);
    lp.constraints.push_back(c);
  }
  for (int i = 1; i <= n; ++i) lp.add_box(x(i), -1, 2);
  return lp;
}

}  // namespace

TEST_CASE("feasibility examples") {
  LinearProgram a = over_x(1);
  a.constraints = {le({{x(1), 1}}, 1), le({{x(1), -1}}, 0)};
  CHECK(feasible(a));
  LinearProgram b = over_x(1);
  b.constraints = {le({{x(1), 1}}, 0), le({{x(1), -1}}, -1)};
  CHECK_FALSE(feasible(b));
  const auto g = pp_lift(3, standard_inputs(3));
  CHECK_FALSE(feasible(substitute(g.lp, {{x(1), 1}, {x(2), 1}, {x(3), 0}})));
  CHECK(feasible(over_x(1)));
}

TEST_CASE("constant rows decide feasibility") {
  LinearProgram lp = over_x(1);
  lp.constraints = {le({}, -1)};
  CHECK_FALSE(feasible(lp));
  lp.constraints = {eq({}, 0), le({}, 0)};
  CHECK(feasible(lp));
  lp.constraints = {eq({}, 1)};
  CHECK_FALSE(feasible(lp));
}

TEST_CASE("optimize examples") {
  LinearProgram lp = over_x(1);
  lp.constraints = {le({{x(1), 1}}, 1), le({{x(1), -1}}, 0)};
  const SolveResult r = optimize(lp, {{x(1), 1}}, Sense::Max);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.value == 1);
  CHECK(r.point.at(x(1)) == 1);

  LinearProgram open = over_x(1);
  open.constraints = {le({{x(1), -1}}, 0)};
  const SolveResult u = optimize(open, {{x(1), 1}}, Sense::Max);
  REQUIRE(u.status == SolveStatus::Unbounded);
  CHECK(u.ray.at(x(1)) > 0);
  CHECK(satisfies(open, u.point));

  const auto g = pp_lift(3, standard_inputs(3));
  const LinearProgram s = substitute(g.lp, {{x(1), 1}, {x(2), 0}});
  const SolveResult lo = optimize(s, {{x(3), 1}}, Sense::Min);
  const SolveResult hi = optimize(s, {{x(3), 1}}, Sense::Max);
  REQUIRE(lo.status == SolveStatus::Optimal);
  REQUIRE(hi.status == SolveStatus::Optimal);
  CHECK(lo.value == 0);
  CHECK(hi.value == 0);
  CHECK(satisfies(s, lo.point));
}

TEST_CASE("optimize on an infeasible LP") {
  LinearProgram lp = over_x(1);
  lp.constraints = {le({{x(1), 1}}, 0), le({{x(1), -1}}, -1)};
  CHECK(optimize(lp, {{x(1), 1}}, Sense::Max).status == SolveStatus::Infeasible);
}

TEST_CASE("objective variables outside the constraints are free") {
  LinearProgram lp = over_x(2);
  lp.constraints = {le({{x(1), 1}}, 1)};
  CHECK(optimize(lp, {{x(2), 1}}, Sense::Min).status == SolveStatus::Unbounded);
  const SolveResult r = optimize(lp, {{x(1), 1}, {x(2), 0}}, Sense::Max);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.point.count(x(2)) == 1);
}

TEST_CASE("unbounded rays keep the point feasible") {
  LinearProgram lp = over_x(2);
  lp.constraints = {le({{x(1), 1}, {x(2), -1}}, 1), le({{x(1), -1}}, 0), le({{x(2), -1}}, 0)};
  const Objective c{{x(1), 1}, {x(2), 1}};
  const SolveResult r = optimize(lp, c, Sense::Max);
  REQUIRE(r.status == SolveStatus::Unbounded);
  CHECK(dot(c, r.ray) > 0);
  for (int t : {1, 10, 1000}) {
    Assignment moved = r.point;
    for (const auto& [v, d] : r.ray) moved[v] += Rational(t) * d;
    CHECK(satisfies(lp, moved));
  }
}

TEST_CASE("variable ranges") {
  LinearProgram lp = over_x(1);
  lp.add_box(x(1), 0, 1);
  const VariableRange r = variable_range(lp, x(1));
  CHECK(*r.min == 0);
  CHECK(*r.max == 1);
  CHECK_FALSE(r.degenerate());

  LinearProgram half = over_x(1);
  half.constraints = {le({{x(1), -1}}, q("-1/3"))};
  const VariableRange h = variable_range(half, x(1));
  CHECK(*h.min == q("1/3"));
  CHECK_FALSE(h.max.has_value());

  const auto b = bit_extraction_lp(3, standard_inputs(3));
  const VariableRange z = variable_range(substitute(b.lp, {{x(1), 1}, {x(2), 1}, {x(3), 0}}), b.z[1]);
  CHECK(z.degenerate());
  CHECK(*z.min == 0);

  LinearProgram bad = over_x(1);
  bad.constraints = {le({}, -1), le({{x(1), 1}}, 0)};
  CHECK_THROWS_AS(variable_range(bad, x(1)), InvalidArgument);
}

TEST_CASE("vertex enumeration examples") {
  LinearProgram cube = over_x(2);
  cube.add_box(x(1), 0, 1);
  cube.add_box(x(2), 0, 1);
  CHECK(enumerate_vertices(cube).size() == 4);

  const auto seg = ex_slice_lp(2, 1, standard_inputs(2));
  const auto vs = enumerate_vertices(seg.lp);
  REQUIRE(vs.size() == 2);
  std::set<std::pair<Rational, Rational>> pts;
  for (const auto& v : vs) pts.emplace(v.at(x(1)), v.at(x(2)));
  CHECK(pts == std::set<std::pair<Rational, Rational>>{{0, 1}, {1, 0}});

  LinearProgram empty = over_x(1);
  empty.constraints = {le({{x(1), 1}}, 0), le({{x(1), -1}}, -1)};
  CHECK(enumerate_vertices(empty).empty());
}

TEST_CASE("vertex enumeration reports unbounded regions and guards") {
  LinearProgram ray = over_x(1);
  ray.constraints = {le({{x(1), -1}}, 0)};
  CHECK_THROWS_AS(enumerate_vertices(ray), UnboundedPolyhedron);
  LinearProgram line = over_x(2);
  line.constraints = {le({{x(1), 1}, {x(2), -1}}, 0), le({{x(1), -1}, {x(2), 1}}, 0)};
  CHECK_THROWS_AS(enumerate_vertices(line), UnboundedPolyhedron);
  LinearProgram wide = over_x(9);
  for (int i = 1; i <= 9; ++i) wide.add_box(x(i), 0, 1);
  CHECK_THROWS_AS(enumerate_vertices(wide), GuardError);
}

TEST_CASE("optimum matches the best vertex on random boxed LPs") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int it = 0; it < 150; ++it) {
    const int n = 2 + it % 3;
    const LinearProgram lp = random_boxed(rng, n);
    const auto vs = enumerate_vertices(lp);
    CHECK(feasible(lp) == !vs.empty());
    Objective c;
    for (int i = 1; i <= n; ++i) c[x(i)] = coef(rng);
    for (Sense sense : {Sense::Max, Sense::Min}) {
      const SolveResult r = optimize(lp, c, sense);
      if (vs.empty()) {
        CHECK(r.status == SolveStatus::Infeasible);
        continue;
      }
      REQUIRE(r.status == SolveStatus::Optimal);
      CHECK(satisfies(lp, r.point));
      CHECK(dot(c, r.point) == r.value);
      Rational best = dot(c, vs[0]);
      for (const auto& v : vs) {
        const Rational val = dot(c, v);
        if (sense == Sense::Max ? val > best : val < best) best = val;
      }
      CHECK(r.value == best);
    }
  }
}

TEST_CASE("oracle agreement on the corpus") {
  for (const auto& [name, lp] : corpus::oracle_lps()) {
    CAPTURE(name);
    CHECK(feasible(lp) == !enumerate_vertices(lp).empty());
  }
}

TEST_CASE("strong duality on the fixed pairs") {
  for (const auto& d : corpus::dual_pairs()) {
    CAPTURE(d.name);
    Objective c;
    for (std::size_t j = 0; j < d.c.size(); ++j) c[x(static_cast<int>(j) + 1)] = d.c[j];
    Objective b;
    for (std::size_t r = 0; r < d.b.size(); ++r) b[x(static_cast<int>(r) + 1)] = d.b[r];
    const SolveResult p = optimize(corpus::dual_primal(d), c, Sense::Max);
    const SolveResult du = optimize(corpus::dual_dual(d), b, Sense::Min);
    REQUIRE(p.status == SolveStatus::Optimal);
    REQUIRE(du.status == SolveStatus::Optimal);
    CHECK(p.value == d.optimum);
    CHECK(du.value == d.optimum);
  }
}

TEST_CASE("degenerate instances terminate at the known optimum") {
  for (const auto& d : corpus::degenerate()) {
    CAPTURE(d.name);
    const SolveResult r = optimize(d.lp, d.objective, d.maximize ? Sense::Max : Sense::Min);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.value == d.optimum);
    CHECK(satisfies(d.lp, r.point));
  }
}

TEST_CASE("concurrent solves on one LP agree") {
  const auto g = pp_lift(4, standard_inputs(4));
  std::vector<int> got(16, -1);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (unsigned m = static_cast<unsigned>(t); m < 16; m += 4) {
        Assignment a;
        for (int i = 0; i < 4; ++i) a[x(i + 1)] = Rational((m >> i) & 1);
        got[m] = feasible(substitute(g.lp, a)) ? 1 : 0;
      }
    });
  for (auto& th : pool) th.join();
  for (unsigned m = 0; m < 16; ++m) CHECK(got[m] == std::popcount(m) % 2);
}
