#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "symlift/circuit_json.hpp"
#include "symlift/compiler.hpp"
#include "symlift/error.hpp"
#include "symlift/gadgets.hpp"
#include "symlift/guards.hpp"
#include "symlift/lp_json.hpp"
#include "symlift/solver.hpp"
#include "symlift/symmetry.hpp"

namespace symlift::cli {

namespace {

constexpr std::size_t kMaxInputBits = 24;

struct Options {
  std::string kind;
  int n = 0;
  bool n_given = false;
  long long t = 0;
  int q = 0;
  int k = 0;
  std::string prefix;
  std::string circuit;
  std::string lp;
  std::string fix;
  std::string objective;
  std::string sense = "min";
  std::string out;
  std::vector<std::string> targets;
  bool exhaustive = false;
  bool check = false;
  bool generators_only = false;
  std::size_t samples = 64;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << j.dump(2) << '\n';
}

unsigned worker_count(unsigned jobs) {
  if (jobs) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  const unsigned threads = std::min<std::size_t>(worker_count(jobs), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Circuit load_circuit(const Options& o) {
  const Json j = read_json_file(o.circuit);
  if (is_raw_circuit_json(j)) {
    Circuit c = circuit_from_json(j);
    if (o.n_given && o.n != c.n) throw InvalidArgument("--n disagrees with the raw circuit's n");
    return c;
  }
  if (!o.n_given) throw InvalidArgument("--n is required for a family circuit");
  if (o.n < 1) throw InvalidArgument("n must be at least 1");
  return materialize(circuit_spec_from_json(j), o.n);
}

LinearProgram load_lp(const Options& o) {
  if (o.lp.empty()) throw InvalidArgument("--lp is required");
  return lp_from_json(read_json_file(o.lp));
}

Assignment to_assignment(const InputBits& bits) {
  Assignment a;
  for (const auto& [v, b] : bits) a.emplace(v, Rational(b ? 1 : 0));
  return a;
}

Json element_json(const SupportTarget& t) {
  if (const auto* v = std::get_if<VarId>(&t)) return {{"aux", to_json(*v)}};
  return {{"constraint", std::get<std::size_t>(t)}};
}

int cmd_gadget(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.n_given) throw InvalidArgument("--n is required");
  if (o.n < 1) throw InvalidArgument("n must be at least 1");
  const auto xs = standard_inputs(o.n);
  Prefix prefix;
  if (!o.prefix.empty()) prefix.push_back(Segment{o.prefix, {}, {}});
  GadgetOutput g;
  if (o.kind == "ex-slice") {
    g = ex_slice_lp(o.n, o.t, xs);
  } else if (o.kind == "pp") {
    g = pp_lift(o.n, xs, prefix);
  } else if (o.kind == "tpp") {
    g = truncated_pp_lift(o.n, o.q, xs, prefix);
  } else if (o.kind == "bits") {
    g = bit_extraction_lp(o.n, xs, prefix);
  } else if (o.kind == "ex-gate") {
    g = ex_gate_lp(o.n, o.t, xs, standard_output(), prefix);
  } else if (o.kind == "and") {
    g = gate_lp(BoolGate::And, xs, standard_output());
  } else if (o.kind == "or") {
    g = gate_lp(BoolGate::Or, xs, standard_output());
  } else if (o.kind == "not") {
    g = gate_lp(BoolGate::Not, xs, standard_output());
  } else {
    throw InvalidArgument("unknown gadget kind '" + o.kind + "'");
  }
  emit(out, to_json(g.lp));
  err << o.kind << ": " << g.lp.constraints.size() << " constraints, " << g.lp.aux_vars.size()
      << " auxiliaries, size " << lp_size(g.lp) << '\n';
  return 0;
}

int cmd_compile(const Options& o, std::ostream& out, std::ostream& err) {
  const Circuit c = load_circuit(o);
  const Circuit flat = eliminate_thresholds(c);
  const CompiledLift cl = compile(flat);
  Json report = {{"gates", flat.gates.size()},
                 {"ex_gates", flat.count(GateKind::Type::Ex)},
                 {"aux_vars", cl.lp.aux_vars.size()},
                 {"constraints", cl.lp.constraints.size()},
                 {"lp_size", lp_size(cl.lp)}};
  if (o.out.empty()) {
    emit(out, to_json(cl.lp));
  } else {
    write_file(o.out, to_json(cl.lp));
    emit(out, report);
  }
  err << "compiled " << flat.gates.size() << " gates into " << cl.lp.constraints.size() << " constraints\n";
  return 0;
}

Objective objective_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("objective must be a list of {var, coef}");
  Objective obj;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("var")) throw ParseError("objective term needs 'var'");
    const Json& c = e.contains("coef") ? e.at("coef") : e.contains("value") ? e.at("value") : Json();
    if (c.is_null()) throw ParseError("objective term needs 'coef'");
    obj[var_from_json(e.at("var"))] += rational_from_json(c);
  }
  return obj;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  LinearProgram lp = load_lp(o);
  if (!o.fix.empty()) lp = substitute(lp, assignment_from_json(read_json_file(o.fix)));
  Json report;
  if (o.objective.empty()) {
    const SolveResult r = optimize(lp, {}, Sense::Min);
    if (r.status == SolveStatus::Infeasible) {
      report = {{"status", "infeasible"}};
    } else {
      report = {{"status", "feasible"}, {"point", to_json(r.point)}};
    }
  } else {
    if (o.sense != "min" && o.sense != "max") throw InvalidArgument("--sense must be min or max");
    const Objective obj = objective_from_json(read_json_file(o.objective));
    const SolveResult r = optimize(lp, obj, o.sense == "min" ? Sense::Min : Sense::Max);
    switch (r.status) {
      case SolveStatus::Infeasible:
        report = {{"status", "infeasible"}};
        break;
      case SolveStatus::Unbounded:
        report = {{"status", "unbounded"}, {"point", to_json(r.point)}, {"ray", to_json(r.ray)}};
        break;
      case SolveStatus::Optimal:
        report = {{"status", "optimal"}, {"value", to_json(r.value)}, {"point", to_json(r.point)}};
        break;
    }
  }
  emit(out, report);
  err << "status: " << report["status"].get<std::string>() << '\n';
  return 0;
}

int cmd_vertices(const Options& o, std::ostream& out, std::ostream& err) {
  const LinearProgram lp = load_lp(o);
  const auto vs = enumerate_vertices(lp);
  Json list = Json::array();
  for (const auto& v : vs) list.push_back(to_json(v));
  emit(out, {{"count", vs.size()}, {"vertices", std::move(list)}});
  err << vs.size() << " vertices\n";
  return 0;
}

int cmd_verify_equivalence(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Circuit c = load_circuit(o);
  const CompiledLift cl = compile(eliminate_thresholds(c));
  const auto inputs = circuit_inputs(c);
  require_guard(inputs.size() <= kMaxInputBits, "equivalence check input count");
  const std::uint64_t total = std::uint64_t{1} << inputs.size();

  std::vector<std::uint64_t> masks;
  if (o.exhaustive || o.samples >= total) {
    masks.resize(total);
    for (std::uint64_t m = 0; m < total; ++m) masks[m] = m;
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < o.samples) chosen.insert(pick(rng));
    masks.assign(chosen.begin(), chosen.end());
  }

  std::atomic<std::size_t> first_bad{std::numeric_limits<std::size_t>::max()};
  std::vector<char> lp_says(masks.size(), 0);
  std::vector<char> circuit_says(masks.size(), 0);
  parallel_for(masks.size(), o.jobs, [&](std::size_t i) {
    if (i > first_bad.load()) return;
    const InputBits bits = bits_from_mask(inputs, masks[i]);
    circuit_says[i] = evaluate(c, bits);
    lp_says[i] = feasible(substitute(cl.lp, to_assignment(bits)));
    if (circuit_says[i] != lp_says[i]) {
      std::size_t cur = first_bad.load();
      while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
      }
    }
  });

  const std::size_t bad = first_bad.load();
  const bool ok = bad == std::numeric_limits<std::size_t>::max();
  std::size_t accepted = 0;
  const std::size_t checked = ok ? masks.size() : bad + 1;
  for (std::size_t i = 0; i < checked; ++i) accepted += circuit_says[i];
  Json report = {{"command", "verify-equivalence"},
                 {"n", c.n},
                 {"mode", o.exhaustive ? "exhaustive" : "sampled"},
                 {"inputs_checked", checked},
                 {"accepted", accepted},
                 {"mismatches", ok ? 0 : 1}};
  if (!ok) {
    report["counterexample"] = {{"mask", masks[bad]},
                                {"input", to_json(to_assignment(bits_from_mask(inputs, masks[bad])))},
                                {"circuit", static_cast<bool>(circuit_says[bad])},
                                {"lp_feasible", static_cast<bool>(lp_says[bad])}};
  }
  emit(out, report);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "checked " << checked << " inputs in " << secs << " s, " << (ok ? "no mismatch" : "MISMATCH") << '\n';
  return ok ? 0 : 1;
}

int cmd_verify_symmetry(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<CompiledLift> cl;
  std::optional<Circuit> circuit;
  LinearProgram lp;
  if (!o.circuit.empty()) {
    circuit = load_circuit(o);
    cl = compile(eliminate_thresholds(*circuit));
    lp = cl->lp;
  } else {
    lp = load_lp(o);
  }
  require_guard(lp.n <= Guards::kSupportN, "symmetry check domain size");
  const std::vector<Permutation> perms = o.generators_only ? sym_generators(lp.n) : all_permutations(lp.n);
  std::vector<char> good(perms.size(), 0);
  parallel_for(perms.size(), o.jobs, [&](std::size_t i) {
    if (cl) {
      if (!is_fixed_by(cl->circuit, perms[i])) return;
      good[i] = is_invariant(lp, perms[i], symmetry_witness(*cl, perms[i]));
    } else {
      good[i] = find_extension(lp, perms[i]).has_value();
    }
  });
  Json failures = Json::array();
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (!good[i]) failures.push_back(perms[i].str());
  }
  const std::size_t bad = failures.size();
  emit(out, {{"command", "verify-symmetry"},
             {"source", cl ? "circuit" : "lp"},
             {"n", lp.n},
             {"permutations_checked", perms.size()},
             {"mismatches", bad},
             {"failures", std::move(failures)}});
  err << "checked " << perms.size() << " permutations, " << bad << " failures\n";
  return bad == 0 ? 0 : 1;
}

int cmd_rigidify(const Options& o, std::ostream& out, std::ostream& err) {
  const LinearProgram lp = load_lp(o);
  const LinearProgram r = rigidify(lp);
  Json report = {{"aux_before", lp.aux_vars.size()},
                 {"aux_after", r.aux_vars.size()},
                 {"size_before", lp_size(lp)},
                 {"size_after", lp_size(r)}};
  if (o.out.empty()) {
    report["lp"] = to_json(r);
  } else {
    write_file(o.out, to_json(r));
  }
  emit(out, report);
  err << "merged " << lp.aux_vars.size() << " auxiliaries into " << r.aux_vars.size() << '\n';
  return 0;
}

SupportTarget parse_target(const LinearProgram& lp, const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    return static_cast<std::size_t>(std::stoull(s));
  }
  for (const auto& v : lp.aux_vars) {
    if (v.str() == s) return v;
  }
  throw InvalidArgument("no auxiliary named '" + s + "'");
}

int cmd_supports(const Options& o, std::ostream& out, std::ostream& err) {
  const LinearProgram lp = load_lp(o);
  const RigidAction action = rigid_action(lp);
  std::vector<SupportTarget> targets;
  if (o.targets.empty()) {
    for (const auto& v : lp.aux_vars) targets.emplace_back(v);
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) targets.emplace_back(i);
  } else {
    for (const auto& s : o.targets) targets.push_back(parse_target(lp, s));
  }
  Json reports = Json::array();
  std::size_t widest = 0;
  for (const auto& t : targets) {
    const SupportReport r = min_support(lp, action, t);
    widest = std::max(widest, r.support.size());
    reports.push_back(
        {{"element", element_json(r.element)}, {"support", r.support}, {"verified_against", r.verified_against}});
  }
  emit(out, {{"n", lp.n}, {"max_support", widest}, {"reports", std::move(reports)}});
  err << targets.size() << " supports, largest of size " << widest << '\n';
  return 0;
}

int cmd_manageable(const Options& o, std::ostream& out, std::ostream& err) {
  const LinearProgram lp = load_lp(o);
  const ManageableLift m = make_manageable(lp, o.k);
  std::set<long long> orbits;
  Json ids = Json::array();
  for (const auto& id : m.constraint_ids) {
    orbits.insert(id.orbit);
    ids.push_back({{"orbit", id.orbit}, {"tuple", id.tuple}});
  }
  Json report = {{"k", o.k},
                 {"aux_vars", m.lp.aux_vars.size()},
                 {"constraints", m.lp.constraints.size()},
                 {"constraint_orbits", orbits.size()},
                 {"constraint_ids", std::move(ids)}};
  bool ok = true;
  if (o.check) {
    ok = check_manageable_properties(m, o.k);
    report["properties_hold"] = ok;
  }
  if (o.out.empty()) {
    report["lp"] = to_json(m.lp);
  } else {
    write_file(o.out, to_json(m.lp));
  }
  emit(out, report);
  err << "manageable lift with " << m.lp.constraints.size() << " constraints"
      << (o.check ? (ok ? ", properties hold" : ", PROPERTIES FAIL") : "") << '\n';
  return ok ? 0 : 1;
}

const char* error_type(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const GuardError*>(&e)) return "guard";
  if (dynamic_cast<const UnboundedPolyhedron*>(&e)) return "unbounded";
  return "invalid_argument";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric LP lifts of threshold circuits", "symlift"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "domain size")->each([&](const std::string&) { o.n_given = true; });
  };
  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", o.jobs, "worker threads (0 = all cores)"); };

  auto* gadget = app.add_subcommand("gadget", "emit a gadget LP");
  gadget->add_option("--kind", o.kind, "ex-slice|pp|tpp|bits|ex-gate|and|or|not")->required();
  add_n(gadget);
  gadget->add_option("--t", o.t, "slice or count value");
  gadget->add_option("--q", o.q, "truncation level");
  gadget->add_option("--prefix", o.prefix, "tag of the auxiliary path prefix");

  auto* comp = app.add_subcommand("compile", "lower a circuit to its LP lift");
  comp->add_option("--circuit", o.circuit)->required();
  add_n(comp);
  comp->add_option("--out", o.out);

  auto* solve = app.add_subcommand("solve", "decide or optimize an LP");
  solve->add_option("--lp", o.lp)->required();
  solve->add_option("--fix", o.fix, "assignment JSON substituted first");
  solve->add_option("--objective", o.objective, "objective JSON [{var, coef}]");
  solve->add_option("--sense", o.sense, "min|max");

  auto* verts = app.add_subcommand("vertices", "enumerate the vertices of a tiny LP");
  verts->add_option("--lp", o.lp)->required();

  auto* veq = app.add_subcommand("verify-equivalence", "compare circuit acceptance with LP feasibility");
  veq->add_option("--circuit", o.circuit)->required();
  add_n(veq);
  veq->add_flag("--exhaustive", o.exhaustive, "check every 0/1 input");
  veq->add_option("--samples", o.samples, "sampled inputs when not exhaustive");
  veq->add_option("--seed", o.seed, "sampling seed");
  add_jobs(veq);

  auto* vsym = app.add_subcommand("verify-symmetry", "check Sym_n invariance of a compiled lift or an LP");
  vsym->add_option("--circuit", o.circuit);
  vsym->add_option("--lp", o.lp);
  add_n(vsym);
  vsym->add_flag("--generators", o.generators_only, "check only a generating set");
  add_jobs(vsym);

  auto* rig = app.add_subcommand("rigidify", "merge automorphism orbits of auxiliaries");
  rig->add_option("--lp", o.lp)->required();
  rig->add_option("--out", o.out);

  auto* sup = app.add_subcommand("supports", "minimal supports of auxiliaries and constraints");
  sup->add_option("--lp", o.lp)->required();
  sup->add_option("--target", o.targets, "aux name as printed, or a constraint index");

  auto* man = app.add_subcommand("manageable", "reindex a rigid LP over identifiers");
  man->add_option("--lp", o.lp)->required();
  man->add_option("--k", o.k)->required();
  man->add_option("--out", o.out);
  man->add_flag("--check", o.check, "check the coefficient-equality properties");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (gadget->parsed()) return cmd_gadget(o, out, err);
    if (comp->parsed()) return cmd_compile(o, out, err);
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (verts->parsed()) return cmd_vertices(o, out, err);
    if (veq->parsed()) return cmd_verify_equivalence(o, out, err);
    if (vsym->parsed()) {
      if (o.circuit.empty() == o.lp.empty()) throw InvalidArgument("give exactly one of --circuit and --lp");
      return cmd_verify_symmetry(o, out, err);
    }
    if (rig->parsed()) return cmd_rigidify(o, out, err);
    if (sup->parsed()) return cmd_supports(o, out, err);
    if (man->parsed()) return cmd_manageable(o, out, err);
  } catch (const Error& e) {
    emit(out, {{"error", {{"type", error_type(e)}, {"message", e.what()}}}});
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace symlift::cli
