#include "symlift/lp_model.hpp"

#include <algorithm>
#include <sstream>

#include "symlift/error.hpp"

namespace symlift {

namespace {

template <typename T>
void join(std::ostringstream& os, const std::vector<T>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
}

}  // namespace

VarId VarId::input(std::string rel, std::vector<int> tuple) {
  VarId v;
  v.kind = Kind::Input;
  v.rel = std::move(rel);
  v.tuple = std::move(tuple);
  return v;
}

VarId VarId::aux(std::vector<Segment> path) {
  if (path.empty()) throw InvalidArgument("auxiliary variable with empty path");
  for (const auto& s : path) {
    if (s.tag.empty()) throw InvalidArgument("auxiliary path segment with empty tag");
  }
  VarId v;
  v.kind = Kind::Aux;
  v.path = std::move(path);
  return v;
}

VarId VarId::aux(std::string tag, std::vector<int> dom, std::vector<long long> par) {
  return aux({Segment{std::move(tag), std::move(dom), std::move(par)}});
}

std::string VarId::str() const {
  std::ostringstream os;
  if (is_input()) {
    os << rel << '(';
    join(os, tuple);
    os << ')';
    return os.str();
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) os << '/';
    os << path[i].tag;
    if (!path[i].dom.empty()) {
      os << '[';
      join(os, path[i].dom);
      os << ']';
    }
    if (!path[i].par.empty()) {
      os << '{';
      join(os, path[i].par);
      os << '}';
    }
  }
  return os.str();
}

VarId child_var(const std::vector<Segment>& prefix, Segment last) {
  std::vector<Segment> path = prefix;
  path.push_back(std::move(last));
  return VarId::aux(std::move(path));
}

LinearConstraint& LinearConstraint::add(const VarId& v, const Rational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = coeffs.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
  return *this;
}

std::string LinearConstraint::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    os << c << '*' << v.str();
  }
  if (first) os << '0';
  os << (rel == Rel::Le ? " <= " : " = ") << rhs;
  return os.str();
}

LinearConstraint le(std::map<VarId, Rational> coeffs, Rational rhs) {
  LinearConstraint c;
  for (auto& [v, a] : coeffs) c.add(v, a);
  c.rel = Rel::Le;
  c.rhs = std::move(rhs);
  return c;
}

LinearConstraint eq(std::map<VarId, Rational> coeffs, Rational rhs) {
  LinearConstraint c = le(std::move(coeffs), std::move(rhs));
  c.rel = Rel::Eq;
  return c;
}

bool LinearProgram::has_variable(const VarId& v) const {
  if (v.is_aux()) return aux_vars.count(v) > 0;
  for (const auto& r : vocabulary) {
    if (r.name != v.rel) continue;
    if (static_cast<int>(v.tuple.size()) != r.arity) return false;
    return std::all_of(v.tuple.begin(), v.tuple.end(),
                       [&](int i) { return i >= 1 && i <= n; });
  }
  return false;
}

void LinearProgram::validate() const {
  if (n < 1) throw InvalidArgument("LP domain size n must be positive");
  for (const auto& a : aux_vars) {
    if (!a.is_aux()) throw InvalidArgument("aux_vars contains input " + a.str());
    for (const auto& s : a.path) {
      for (int i : s.dom) {
        if (i < 1 || i > n) {
          throw InvalidArgument("aux variable " + a.str() + " has domain index outside [n]");
        }
      }
    }
  }
  for (const auto& c : constraints) {
    for (const auto& [v, coef] : c.coeffs) {
      if (coef.is_zero()) throw InvalidArgument("zero coefficient stored for " + v.str());
      if (!has_variable(v)) throw InvalidArgument("constraint mentions unknown variable " + v.str());
    }
  }
}

std::set<VarId> LinearProgram::occurring_variables() const {
  std::set<VarId> out;
  for (const auto& c : constraints) {
    for (const auto& [v, coef] : c.coeffs) out.insert(v);
  }
  return out;
}

std::vector<std::vector<int>> all_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(k), 1);
  if (k == 0) return {{}};
  if (n < 1) return {};
  while (true) {
    out.push_back(t);
    int pos = k - 1;
    while (pos >= 0 && t[pos] == n) t[pos--] = 1;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

std::vector<VarId> LinearProgram::input_variables() const {
  std::vector<VarId> out;
  for (const auto& r : vocabulary) {
    for (auto& t : all_tuples(n, r.arity)) out.push_back(VarId::input(r.name, std::move(t)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void LinearProgram::add_box(const VarId& v, const Rational& lo, const Rational& hi) {
  constraints.push_back(le({{v, Rational(-1)}}, -lo));
  constraints.push_back(le({{v, Rational(1)}}, hi));
}

void LinearProgram::append(const LinearProgram& other) {
  if (other.vocabulary != vocabulary || other.n != n) {
    throw InvalidArgument("cannot append LPs over different vocabularies");
  }
  aux_vars.insert(other.aux_vars.begin(), other.aux_vars.end());
  constraints.insert(constraints.end(), other.constraints.begin(), other.constraints.end());
}

std::size_t lp_size(const LinearProgram& lp) {
  const std::size_t u = lp.occurring_variables().size();
  std::size_t v = 0;
  std::size_t b = 0;
  for (const auto& c : lp.constraints) {
    v += c.rel == Rel::Eq ? 2 : 1;
    b = std::max(b, c.rhs.bit_length());
    for (const auto& [var, coef] : c.coeffs) b = std::max(b, coef.bit_length());
  }
  if (v == 0) return 0;
  return (u + 1) * v * b;
}

LinearProgram substitute(const LinearProgram& lp, const Assignment& a) {
  for (const auto& [v, value] : a) {
    if (!lp.has_variable(v)) throw InvalidArgument("assignment to unknown variable " + v.str());
  }
  LinearProgram out;
  out.n = lp.n;
  out.vocabulary = lp.vocabulary;
  for (const auto& v : lp.aux_vars) {
    if (!a.count(v)) out.aux_vars.insert(v);
  }
  out.constraints.reserve(lp.constraints.size());
  for (const auto& c : lp.constraints) {
    LinearConstraint r;
    r.rel = c.rel;
    r.rhs = c.rhs;
    for (const auto& [v, coef] : c.coeffs) {
      auto it = a.find(v);
      if (it == a.end()) {
        r.coeffs.emplace(v, coef);
      } else {
        r.rhs -= coef * it->second;
      }
    }
    out.constraints.push_back(std::move(r));
  }
  return out;
}

LinearProgram canonicalize(const LinearProgram& lp) {
  LinearProgram out;
  out.n = lp.n;
  out.vocabulary = lp.vocabulary;
  out.aux_vars = lp.aux_vars;
  out.constraints.reserve(lp.constraints.size());
  for (const auto& c : lp.constraints) {
    LinearConstraint pos;
    pos.rel = Rel::Le;
    pos.rhs = c.rhs;
    for (const auto& [v, coef] : c.coeffs) {
      if (!coef.is_zero()) pos.coeffs.emplace(v, coef);
    }
    if (c.rel == Rel::Eq) {
      LinearConstraint neg;
      neg.rel = Rel::Le;
      neg.rhs = -c.rhs;
      for (const auto& [v, coef] : pos.coeffs) neg.coeffs.emplace(v, -coef);
      out.constraints.push_back(std::move(pos));
      out.constraints.push_back(std::move(neg));
    } else {
      out.constraints.push_back(std::move(pos));
    }
  }
  return out;
}

bool satisfies(const LinearConstraint& c, const Assignment& point) {
  Rational lhs;
  for (const auto& [v, coef] : c.coeffs) {
    auto it = point.find(v);
    if (it == point.end()) throw InvalidArgument("point does not assign " + v.str());
    lhs += coef * it->second;
  }
  return c.rel == Rel::Le ? lhs <= c.rhs : lhs == c.rhs;
}

bool satisfies(const LinearProgram& lp, const Assignment& point) {
  return std::all_of(lp.constraints.begin(), lp.constraints.end(),
                     [&](const LinearConstraint& c) { return satisfies(c, point); });
}

}  // namespace symlift
