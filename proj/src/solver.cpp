#include "symlift/solver.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace symlift {

namespace {


using Terms = std::vector<std::pair<int, Rational>>;

struct IndexedRow {
  Terms terms;
  Rel rel = Rel::Le;
  Rational rhs;
};

struct IndexedLp {
  std::vector<VarId> vars;
  std::vector<IndexedRow> rows;
  std::vector<std::pair<int, Rational>> objective;
};

IndexedLp index_lp(const LinearProgram& lp, const Objective& objective) {
  IndexedLp out;
  std::set<VarId> vars = lp.occurring_variables();
  for (const auto& [v, c] : objective) vars.insert(v);
  out.vars.assign(vars.begin(), vars.end());
  std::map<VarId, int> index;
  for (std::size_t i = 0; i < out.vars.size(); ++i) index.emplace(out.vars[i], static_cast<int>(i));
  out.rows.reserve(lp.constraints.size());
  for (const auto& c : lp.constraints) {
    IndexedRow r;
    r.rel = c.rel;
    r.rhs = c.rhs;
    for (const auto& [v, a] : c.coeffs) {
      if (!a.is_zero()) r.terms.emplace_back(index.at(v), a);
    }
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.rows.push_back(std::move(r));
  }
  for (const auto& [v, c] : objective) {
    if (!c.is_zero()) out.objective.emplace_back(index.at(v), c);
  }
  return out;
}

// Exact bound propagation. Every derived bound is implied by the rows, so the
// feasible set never changes; rows become inactive once they are either
// absorbed into a variable bound or implied by the bounds.
class Presolve {
 public:
  explicit Presolve(const IndexedLp& lp)
      : lp_(lp),
        lo_(lp.vars.size()),
        hi_(lp.vars.size()),
        tightenings_(lp.vars.size(), 0),
        active_(lp.rows.size(), true),
        var_rows_(lp.vars.size()) {
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
      for (const auto& [j, a] : lp.rows[r].terms) var_rows_[j].push_back(static_cast<int>(r));
    }
  }

  // Returns false when infeasibility was proven.
  bool run() {
    std::deque<int> queue;
    std::vector<char> queued(lp_.rows.size(), 1);
    for (std::size_t r = 0; r < lp_.rows.size(); ++r) queue.push_back(static_cast<int>(r));
    while (!queue.empty()) {
      const int r = queue.front();
      queue.pop_front();
      queued[r] = 0;
      if (!active_[r]) continue;
      changed_.clear();
      if (!process(r)) return false;
      for (int j : changed_) {
        for (int rr : var_rows_[j]) {
          if (active_[rr] && !queued[rr]) {
            queued[rr] = 1;
            queue.push_back(rr);
          }
        }
      }
    }
    return true;
  }

  bool is_fixed(int j) const { return lo_[j] && hi_[j] && *lo_[j] == *hi_[j]; }
  const std::optional<Rational>& lo(int j) const { return lo_[j]; }
  const std::optional<Rational>& hi(int j) const { return hi_[j]; }
  bool active(int r) const { return active_[r]; }

  // Row with fixed variables folded into the right-hand side.
  IndexedRow reduced(int r) const {
    const auto& row = lp_.rows[r];
    IndexedRow out;
    out.rel = row.rel;
    out.rhs = row.rhs;
    for (const auto& [j, a] : row.terms) {
      if (is_fixed(j)) {
        out.rhs -= a * *lo_[j];
      } else {
        out.terms.emplace_back(j, a);
      }
    }
    return out;
  }

 private:
  static constexpr int kMaxTightenings = 8;

  bool set_lo(int j, const Rational& v) {
    if (lo_[j] && *lo_[j] >= v) return true;
    const bool fixes = hi_[j] && *hi_[j] <= v;
    if (!fixes && tightenings_[j] >= kMaxTightenings && lo_[j]) return true;
    ++tightenings_[j];
    lo_[j] = v;
    changed_.push_back(j);
    return !(hi_[j] && *hi_[j] < v);
  }

  bool set_hi(int j, const Rational& v) {
    if (hi_[j] && *hi_[j] <= v) return true;
    const bool fixes = lo_[j] && *lo_[j] >= v;
    if (!fixes && tightenings_[j] >= kMaxTightenings && hi_[j]) return true;
    ++tightenings_[j];
    hi_[j] = v;
    changed_.push_back(j);
    return !(lo_[j] && *lo_[j] > v);
  }

  // a x <= b (direction +1) or -a x <= -b (direction -1) on the reduced row.
  // Sets `redundant` when the bounds already imply the inequality.
  bool propagate_le(const IndexedRow& row, int direction, bool& redundant) {
    redundant = false;
    Rational min_finite;
    Rational max_finite;
    int min_inf = 0;
    int max_inf = 0;
    int min_inf_idx = -1;
    std::vector<std::optional<Rational>> min_contrib(row.terms.size());
    for (std::size_t k = 0; k < row.terms.size(); ++k) {
      const int j = row.terms[k].first;
      const Rational a = direction > 0 ? row.terms[k].second : -row.terms[k].second;
      const auto& low_side = a.sign() > 0 ? lo_[j] : hi_[j];
      const auto& high_side = a.sign() > 0 ? hi_[j] : lo_[j];
      if (low_side) {
        min_contrib[k] = a * *low_side;
        min_finite += *min_contrib[k];
      } else {
        ++min_inf;
        min_inf_idx = static_cast<int>(k);
      }
      if (high_side) {
        max_finite += a * *high_side;
      } else {
        ++max_inf;
      }
    }
    const Rational b = direction > 0 ? row.rhs : -row.rhs;
    if (min_inf == 0 && min_finite > b) return false;
    if (max_inf == 0 && max_finite <= b) {
      redundant = true;
      return true;
    }
    if (min_inf > 1) return true;
    for (std::size_t k = 0; k < row.terms.size(); ++k) {
      if (min_inf == 1 && static_cast<int>(k) != min_inf_idx) continue;
      const int j = row.terms[k].first;
      const Rational a = direction > 0 ? row.terms[k].second : -row.terms[k].second;
      Rational slack = b - min_finite;
      if (min_inf == 0) slack += *min_contrib[k];
      const Rational bound = slack / a;
      if (a.sign() > 0) {
        if (!set_hi(j, bound)) return false;
      } else {
        if (!set_lo(j, bound)) return false;
      }
    }
    return true;
  }

  bool process(int r) {
    const IndexedRow row = reduced(r);
    if (row.terms.empty()) {
      active_[r] = false;
      const int s = row.rhs.sign();
      return row.rel == Rel::Le ? s >= 0 : s == 0;
    }
    if (row.terms.size() == 1) {
      const auto& [j, a] = row.terms.front();
      const Rational v = row.rhs / a;
      active_[r] = false;
      if (row.rel == Rel::Eq) return set_lo(j, v) && set_hi(j, v);
      return a.sign() > 0 ? set_hi(j, v) : set_lo(j, v);
    }
    bool red_up = false;
    if (!propagate_le(row, +1, red_up)) return false;
    if (row.rel == Rel::Le) {
      if (red_up) active_[r] = false;
      return true;
    }
    bool red_down = false;
    if (!propagate_le(row, -1, red_down)) return false;
    if (red_up && red_down) active_[r] = false;
    return true;
  }

  const IndexedLp& lp_;
  std::vector<std::optional<Rational>> lo_;
  std::vector<std::optional<Rational>> hi_;
  std::vector<int> tightenings_;
  std::vector<char> active_;
  std::vector<std::vector<int>> var_rows_;
  std::vector<int> changed_;
};

// Bounded-variable simplex over 0 <= y_j <= u_j (u_j possibly infinite) with
// rows sum_j a_ij y_j = b_i. Each row has one basic column with coefficient 1
// and the basic values are kept explicitly. Rows are sparse; per-column row
// lists are kept lazily (entries may be stale and are re-checked on use).
class Tableau {
 public:
  Tableau(int num_cols, std::vector<Terms> rows, std::vector<Rational> rhs, std::vector<int> basis,
          std::vector<std::optional<Rational>> upper, int first_artificial)
      : num_cols_(num_cols),
        rows_(std::move(rows)),
        beta_(std::move(rhs)),
        basis_(std::move(basis)),
        upper_(std::move(upper)),
        first_artificial_(first_artificial),
        col_rows_(static_cast<std::size_t>(num_cols)),
        dead_row_(rows_.size(), 0),
        banned_(static_cast<std::size_t>(num_cols), 0),
        at_upper_(static_cast<std::size_t>(num_cols), 0),
        basic_row_(static_cast<std::size_t>(num_cols), -1),
        seen_(rows_.size(), 0) {
    upper_.resize(static_cast<std::size_t>(num_cols));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (const auto& [c, a] : rows_[i]) col_rows_[c].push_back(static_cast<int>(i));
      basic_row_[basis_[i]] = static_cast<int>(i);
    }
  }

  // Minimizes the sum of artificial columns. Returns false when the optimum
  // is positive (infeasible).
  bool phase_one() {
    cost_.assign(static_cast<std::size_t>(num_cols_), Rational());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (const auto& [c, a] : rows_[i]) cost_[c] -= a;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (is_artificial(basis_[i])) cost_[basis_[i]] = Rational();
    }
    const bool bounded = iterate(nullptr);
    assert(bounded);
    (void)bounded;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (is_artificial(basis_[i]) && beta_[i].sign() > 0) return false;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (dead_row_[i] || !is_artificial(basis_[i])) continue;
      int enter = -1;
      for (const auto& [c, a] : rows_[i]) {
        if (!is_artificial(c)) {
          enter = c;
          break;
        }
      }
      if (enter < 0) {
        dead_row_[i] = 1;
      } else {
        // The artificial sits at zero, so no value moves.
        pivot(static_cast<int>(i), enter);
        beta_[i] = at_upper_[enter] ? *upper_[enter] : Rational();
        at_upper_[enter] = 0;
      }
    }
    for (int c = first_artificial_; c < num_cols_; ++c) banned_[c] = 1;
    return true;
  }

  // Minimizes costs . y from the current feasible basis. Returns false when
  // unbounded; the ray is then available from last_ray().
  bool phase_two(const std::vector<Rational>& costs) {
    cost_ = costs;
    cost_.resize(static_cast<std::size_t>(num_cols_));
    bland_ = false;
    degenerate_run_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (dead_row_[i]) continue;
      const Rational cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      for (const auto& [c, a] : rows_[i]) cost_[c] -= cb * a;
    }
    return iterate(&ray_col_);
  }

  std::vector<Rational> values() const {
    std::vector<Rational> y(static_cast<std::size_t>(num_cols_));
    for (int c = 0; c < num_cols_; ++c) {
      if (basic_row_[c] < 0 && at_upper_[c]) y[c] = *upper_[c];
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!dead_row_[i]) y[basis_[i]] = beta_[i];
    }
    return y;
  }

  // Direction of the ray found by the last unbounded phase_two.
  std::vector<Rational> last_ray() const {
    const int col = ray_col_;
    const int dir = at_upper_[col] ? -1 : 1;
    std::vector<Rational> d(static_cast<std::size_t>(num_cols_));
    d[col] = Rational(dir);
    for (int i : col_rows_[col]) {
      if (dead_row_[i]) continue;
      if (const Rational* a = entry(i, col)) d[basis_[i]] = dir > 0 ? -*a : *a;
    }
    return d;
  }

 private:
  bool is_artificial(int c) const { return c >= first_artificial_; }

  const Rational* entry(int i, int col) const {
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
  }

  // A nonbasic column improves the objective when it can move against the
  // sign of its reduced cost.
  bool eligible(int c) const {
    if (banned_[c] || basic_row_[c] >= 0) return false;
    const int s = cost_[c].sign();
    return at_upper_[c] ? s > 0 : s < 0;
  }

  // Dantzig pricing until a long run of degenerate steps, then least-index
  // entering and leaving choices (Bland) for the rest of the phase. Before
  // that, ratio ties go to the sparsest row.
  bool iterate(int* unbounded_col) {
    while (true) {

      int enter = -1;
      for (int c = 0; c < num_cols_; ++c) {
        if (!eligible(c)) continue;
        if (bland_) {
          enter = c;
          break;
        }
        if (enter < 0 || abs(cost_[c]) > abs(cost_[enter])) enter = c;
      }
      if (enter < 0) return true;
      const int dir = at_upper_[enter] ? -1 : 1;

      // Ratio test: the step is limited by the entering column's own range
      // and by every basic column reaching 0 or its upper bound.
      int leave = -1;
      bool leave_to_upper = false;
      std::optional<Rational> best = upper_[enter];
      auto& candidates = col_rows_[enter];
      std::size_t keep = 0;
      ++stamp_;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        const int i = candidates[k];
        if (seen_[i] == stamp_) continue;
        seen_[i] = stamp_;
        const Rational* a = entry(i, enter);
        if (a == nullptr) continue;
        candidates[keep++] = i;
        if (dead_row_[i]) continue;
        const int s = a->sign() * dir;
        Rational ratio;
        bool to_upper = false;
        if (s > 0) {
          ratio = beta_[i] / abs(*a);
        } else {
          const auto& u = upper_[basis_[i]];
          if (!u) continue;
          ratio = (*u - beta_[i]) / abs(*a);
          to_upper = true;
        }
        bool take = !best || ratio < *best;
        if (!take && ratio == *best && leave >= 0) {
          const std::size_t len = rows_[i].size();
          const std::size_t cur = rows_[leave].size();
          take = bland_ ? basis_[i] < basis_[leave] : len < cur || (len == cur && basis_[i] < basis_[leave]);
        }
        if (!take && ratio == *best && leave < 0) take = bland_ ? basis_[i] < enter : false;
        if (take) {
          leave = i;
          leave_to_upper = to_upper;
          best = std::move(ratio);
        }
      }
      candidates.resize(keep);
      if (!best) {
        if (unbounded_col) *unbounded_col = enter;
        return false;
      }
      if (best->is_zero()) {
        if (++degenerate_run_ > kDegenerateLimit) bland_ = true;
      } else {
        degenerate_run_ = 0;
      }
      const Rational step = dir > 0 ? *best : -*best;
      for (int i : col_rows_[enter]) {
        if (dead_row_[i] || step.is_zero()) continue;
        if (const Rational* a = entry(i, enter)) beta_[i] -= step * *a;
      }
      if (leave < 0) {
        at_upper_[enter] = dir > 0 ? 1 : 0;  // bound flip
        continue;
      }
      const int old = basis_[leave];
      const Rational entering_value = (at_upper_[enter] ? *upper_[enter] : Rational()) + step;
      pivot(leave, enter);
      beta_[leave] = entering_value;
      at_upper_[enter] = 0;
      at_upper_[old] = leave_to_upper ? 1 : 0;
    }
  }

  // Makes `c` basic in row r. Basic values are maintained by the caller.
  void pivot(int r, int c) {
    Terms& prow = rows_[r];
    const Rational piv = *entry(r, c);
    if (piv != Rational(1)) {
      for (auto& [col, a] : prow) a /= piv;
    }
    std::vector<int> targets;
    ++stamp_;
    for (int i : col_rows_[c]) {
      if (seen_[i] == stamp_) continue;
      seen_[i] = stamp_;
      targets.push_back(i);
    }
    for (int i : targets) {
      if (i == r || dead_row_[i]) continue;
      const Rational* fp = entry(i, c);
      if (fp == nullptr) continue;
      const Rational f = *fp;
      eliminate(i, r, f);
    }
    if (!cost_.empty() && !cost_[c].is_zero()) {
      const Rational f = cost_[c];
      for (const auto& [col, a] : prow) cost_[col] -= f * a;
      cost_[c] = Rational();
    }
    const int old = basis_[r];
    if (is_artificial(old)) banned_[old] = 1;
    basic_row_[old] = -1;
    basic_row_[c] = r;
    basis_[r] = c;
    col_rows_[c] = {r};
    for (int i : targets) {
      if (i != r && entry(i, c)) col_rows_[c].push_back(i);
    }
  }

  // row_i -= f * row_r
  void eliminate(int i, int r, const Rational& f) {
    const Terms& prow = rows_[r];
    Terms& row = rows_[i];
    Terms& merged = merge_buf_;
    merged.clear();
    merged.reserve(row.size() + prow.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < row.size() || b < prow.size()) {
      if (b == prow.size() || (a < row.size() && row[a].first < prow[b].first)) {
        merged.push_back(std::move(row[a++]));
      } else if (a == row.size() || prow[b].first < row[a].first) {
        Rational v = f;
        v *= prow[b].second;
        v.negate();
        merged.emplace_back(prow[b].first, std::move(v));
        col_rows_[prow[b].first].push_back(i);
        ++b;
      } else {
        Rational v = f;
        v *= prow[b].second;
        row[a].second -= v;
        if (!row[a].second.is_zero()) merged.push_back(std::move(row[a]));
        ++a;
        ++b;
      }
    }
    row.swap(merged);
  }

  static constexpr int kDegenerateLimit = 1000;

  int num_cols_;
  std::vector<Terms> rows_;
  std::vector<Rational> beta_;
  std::vector<int> basis_;
  std::vector<std::optional<Rational>> upper_;
  int first_artificial_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<char> dead_row_;
  std::vector<char> banned_;
  std::vector<char> at_upper_;
  std::vector<int> basic_row_;
  std::vector<Rational> cost_;
  bool bland_ = false;
  int degenerate_run_ = 0;
  int ray_col_ = -1;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  Terms merge_buf_;
};

enum class ColumnMap { Shift, Flip, Free };

struct VarColumns {
  ColumnMap map = ColumnMap::Shift;
  int col = -1;
  int neg_col = -1;
  Rational offset;
};

struct Outcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<Rational> x;
  std::vector<Rational> dx;
};

// Solves phase one once and then each objective in turn from the previous
// optimal basis. An empty objective list only decides feasibility.
std::vector<Outcome> solve_indexed(const IndexedLp& lp,
                                   const std::vector<std::vector<std::pair<int, Rational>>>& objectives) {
  const std::size_t runs = std::max<std::size_t>(objectives.size(), 1);
  std::vector<Outcome> infeasible(runs);
  Presolve pre(lp);
  if (!pre.run()) return infeasible;

  const int nv = static_cast<int>(lp.vars.size());
  std::vector<IndexedRow> rows;
  std::vector<char> in_simplex(static_cast<std::size_t>(nv), 0);
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    if (!pre.active(static_cast<int>(r))) continue;
    rows.push_back(pre.reduced(static_cast<int>(r)));
    for (const auto& [j, a] : rows.back().terms) in_simplex[j] = 1;
  }
  for (const auto& obj : objectives) {
    for (const auto& [j, c] : obj) {
      if (!pre.is_fixed(j)) in_simplex[j] = 1;
    }
  }

  std::vector<VarColumns> cols(static_cast<std::size_t>(nv));
  std::vector<std::optional<Rational>> upper;
  int num_struct = 0;
  for (int j = 0; j < nv; ++j) {
    if (!in_simplex[j]) continue;
    auto& vc = cols[j];
    if (pre.lo(j)) {
      vc.map = ColumnMap::Shift;
      vc.offset = *pre.lo(j);
      vc.col = num_struct++;
      upper.push_back(pre.hi(j) ? std::optional<Rational>(*pre.hi(j) - *pre.lo(j)) : std::nullopt);
    } else if (pre.hi(j)) {
      vc.map = ColumnMap::Flip;
      vc.offset = *pre.hi(j);
      vc.col = num_struct++;
      upper.emplace_back();
    } else {
      vc.map = ColumnMap::Free;
      vc.col = num_struct++;
      vc.neg_col = num_struct++;
      upper.emplace_back();
      upper.emplace_back();
    }
  }

  // Slack columns follow the structural ones; artificials come last.
  int num_cols = num_struct;
  std::vector<int> slack(rows.size(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rel == Rel::Le) slack[i] = num_cols++;
  }
  const int first_artificial = num_cols;
  std::vector<Terms> trows(rows.size());
  std::vector<Rational> rhs(rows.size());
  std::vector<int> basis(rows.size(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Terms t;
    Rational b = rows[i].rhs;
    for (const auto& [j, a] : rows[i].terms) {
      const auto& vc = cols[j];
      switch (vc.map) {
        case ColumnMap::Shift:
          b -= a * vc.offset;
          t.emplace_back(vc.col, a);
          break;
        case ColumnMap::Flip:
          b -= a * vc.offset;
          t.emplace_back(vc.col, -a);
          break;
        case ColumnMap::Free:
          t.emplace_back(vc.col, a);
          t.emplace_back(vc.neg_col, -a);
          break;
      }
    }
    if (slack[i] >= 0) t.emplace_back(slack[i], Rational(1));
    const bool negated = b.sign() < 0;
    if (negated) {
      for (auto& [c, a] : t) a = -a;
      b = -b;
    }
    if (slack[i] >= 0 && !negated) basis[i] = slack[i];
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (basis[i] < 0) {
      basis[i] = num_cols++;
      t.emplace_back(basis[i], Rational(1));
    }
    trows[i] = std::move(t);
    rhs[i] = std::move(b);
  }

  Tableau tab(num_cols, std::move(trows), std::move(rhs), std::move(basis), std::move(upper),
              first_artificial);
  if (!tab.phase_one()) return infeasible;

  auto to_original = [&](const std::vector<Rational>& y, bool direction) {
    std::vector<Rational> x(static_cast<std::size_t>(nv));
    for (int j = 0; j < nv; ++j) {
      if (!in_simplex[j]) {
        if (!direction) {
          x[j] = pre.lo(j) ? *pre.lo(j) : (pre.hi(j) ? *pre.hi(j) : Rational());
        }
        continue;
      }
      const auto& vc = cols[j];
      const Rational base = direction ? Rational() : vc.offset;
      switch (vc.map) {
        case ColumnMap::Shift:
          x[j] = base + y[vc.col];
          break;
        case ColumnMap::Flip:
          x[j] = base - y[vc.col];
          break;
        case ColumnMap::Free:
          x[j] = y[vc.col] - y[vc.neg_col];
          break;
      }
    }
    return x;
  };

  std::vector<Outcome> out(runs);
  if (objectives.empty()) {
    out[0].status = SolveStatus::Optimal;
    out[0].x = to_original(tab.values(), false);
    return out;
  }
  for (std::size_t k = 0; k < objectives.size(); ++k) {
    std::vector<Rational> costs(static_cast<std::size_t>(num_cols));
    for (const auto& [j, c] : objectives[k]) {
      if (pre.is_fixed(j)) continue;
      const auto& vc = cols[j];
      switch (vc.map) {
        case ColumnMap::Shift:
          costs[vc.col] += c;
          break;
        case ColumnMap::Flip:
          costs[vc.col] -= c;
          break;
        case ColumnMap::Free:
          costs[vc.col] += c;
          costs[vc.neg_col] -= c;
          break;
      }
    }
    const bool bounded = tab.phase_two(costs);
    out[k].x = to_original(tab.values(), false);
    if (bounded) {
      out[k].status = SolveStatus::Optimal;
    } else {
      out[k].status = SolveStatus::Unbounded;
      out[k].dx = to_original(tab.last_ray(), true);
    }
    // An unbounded run leaves the basis feasible, so later runs may continue.
  }
  return out;
}

Assignment to_assignment(const IndexedLp& lp, const std::vector<Rational>& values) {
  Assignment a;
  for (std::size_t j = 0; j < lp.vars.size(); ++j) a.emplace(lp.vars[j], values[j]);
  return a;
}

void check_point(const LinearProgram& lp, const Assignment& point) {
  if (!satisfies(lp, point)) throw std::logic_error("simplex returned a point violating the LP");
}

std::vector<SolveResult> optimize_all(const LinearProgram& lp, const std::vector<Objective>& objectives,
                                      Sense sense) {
  Objective all;
  for (const auto& obj : objectives) {
    for (const auto& [v, c] : obj) all[v] += Rational(0);
  }
  const IndexedLp ilp = index_lp(lp, all);
  std::map<VarId, int> index;
  for (std::size_t j = 0; j < ilp.vars.size(); ++j) index.emplace(ilp.vars[j], static_cast<int>(j));
  std::vector<std::vector<std::pair<int, Rational>>> indexed;
  for (const auto& obj : objectives) {
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& [v, c] : obj) {
      if (!c.is_zero()) terms.emplace_back(index.at(v), sense == Sense::Min ? c : -c);
    }
    indexed.push_back(std::move(terms));
  }
  const std::vector<Outcome> outcomes = solve_indexed(ilp, indexed);
  std::vector<SolveResult> results;
  for (std::size_t k = 0; k < objectives.size(); ++k) {
    const Outcome& o = outcomes[k];
    SolveResult res;
    res.status = o.status;
    if (o.status != SolveStatus::Infeasible) {
      res.point = to_assignment(ilp, o.x);
      check_point(lp, res.point);
      if (o.status == SolveStatus::Unbounded) {
        res.ray = to_assignment(ilp, o.dx);
      } else {
        for (const auto& [v, c] : objectives[k]) res.value += c * res.point.at(v);
      }
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace

bool feasible(const LinearProgram& lp) {
  const IndexedLp ilp = index_lp(lp, {});
  const Outcome o = solve_indexed(ilp, {}).front();
  if (o.status == SolveStatus::Infeasible) return false;
  check_point(lp, to_assignment(ilp, o.x));
  return true;
}

SolveResult optimize(const LinearProgram& lp, const Objective& objective, Sense sense) {
  return optimize_all(lp, {objective}, sense).front();
}

VariableRange variable_range(const LinearProgram& lp, const VarId& v) {
  if (!lp.has_variable(v)) throw InvalidArgument("variable " + v.str() + " not in LP");
  const auto results = optimize_all(lp, {{{v, Rational(1)}}, {{v, Rational(-1)}}}, Sense::Min);
  if (results[0].status == SolveStatus::Infeasible) {
    throw InvalidArgument("variable_range on infeasible LP");
  }
  VariableRange range;
  if (results[0].status == SolveStatus::Optimal) range.min = results[0].value;
  if (results[1].status == SolveStatus::Optimal) range.max = -results[1].value;
  return range;
}

}  // namespace symlift
