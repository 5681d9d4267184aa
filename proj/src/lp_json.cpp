#include "symlift/lp_json.hpp"

#include <fstream>
#include <sstream>

#include "symlift/error.hpp"

namespace symlift {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
std::vector<T> int_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer list");
  std::vector<T> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("expected an integer list");
    out.push_back(e.get<T>());
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string or an integer");
}

Json to_json(const VarId& v) {
  Json j;
  if (v.is_input()) {
    j["kind"] = "input";
    j["rel"] = v.rel;
    j["tuple"] = v.tuple;
    return j;
  }
  j["kind"] = "aux";
  Json path = Json::array();
  for (const auto& s : v.path) {
    path.push_back({{"tag", s.tag}, {"dom", s.dom}, {"par", s.par}});
  }
  j["path"] = std::move(path);
  return j;
}

VarId var_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "input") {
    return VarId::input(field(j, "rel").get<std::string>(), int_list<int>(field(j, "tuple")));
  }
  if (kind == "aux") {
    std::vector<Segment> path;
    for (const auto& s : field(j, "path")) {
      Segment seg;
      seg.tag = field(s, "tag").get<std::string>();
      if (s.contains("dom")) seg.dom = int_list<int>(s.at("dom"));
      if (s.contains("par")) seg.par = int_list<long long>(s.at("par"));
      path.push_back(std::move(seg));
    }
    try {
      return VarId::aux(std::move(path));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown variable kind '" + kind + "'");
}

Json to_json(const LinearConstraint& c) {
  Json lhs = Json::array();
  for (const auto& [v, coef] : c.coeffs) lhs.push_back({{"var", to_json(v)}, {"coef", to_json(coef)}});
  return {{"lhs", std::move(lhs)}, {"rel", c.rel == Rel::Le ? "<=" : "="}, {"rhs", to_json(c.rhs)}};
}

LinearConstraint constraint_from_json(const Json& j) {
  LinearConstraint c;
  for (const auto& term : field(j, "lhs")) {
    c.add(var_from_json(field(term, "var")), rational_from_json(field(term, "coef")));
  }
  const std::string rel = field(j, "rel").get<std::string>();
  if (rel == "<=") {
    c.rel = Rel::Le;
  } else if (rel == "=") {
    c.rel = Rel::Eq;
  } else {
    throw ParseError("unknown relation '" + rel + "'");
  }
  c.rhs = rational_from_json(field(j, "rhs"));
  return c;
}

Json to_json(const LinearProgram& lp) {
  Json vocab = Json::array();
  for (const auto& r : lp.vocabulary) vocab.push_back({{"name", r.name}, {"arity", r.arity}});
  Json aux = Json::array();
  for (const auto& v : lp.aux_vars) aux.push_back(to_json(v));
  Json rows = Json::array();
  for (const auto& c : lp.constraints) rows.push_back(to_json(c));
  return {{"n", lp.n}, {"vocabulary", std::move(vocab)}, {"aux_vars", std::move(aux)},
          {"constraints", std::move(rows)}};
}

LinearProgram lp_from_json(const Json& j) {
  LinearProgram lp;
  try {
    lp.n = field(j, "n").get<int>();
    for (const auto& r : field(j, "vocabulary")) {
      lp.vocabulary.push_back({field(r, "name").get<std::string>(), field(r, "arity").get<int>()});
    }
    if (j.contains("aux_vars")) {
      for (const auto& v : j.at("aux_vars")) lp.aux_vars.insert(var_from_json(v));
    }
    for (const auto& c : field(j, "constraints")) lp.constraints.push_back(constraint_from_json(c));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed LP JSON: ") + e.what());
  }
  try {
    lp.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid LP: ") + e.what());
  }
  return lp;
}

Json to_json(const Assignment& a) {
  Json out = Json::array();
  for (const auto& [v, value] : a) out.push_back({{"var", to_json(v)}, {"value", to_json(value)}});
  return out;
}

Assignment assignment_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("assignment must be a list of {var, value}");
  Assignment a;
  for (const auto& e : j) a[var_from_json(field(e, "var"))] = rational_from_json(field(e, "value"));
  return a;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace symlift
