#include "entcert/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "entcert/error.hpp"
#include "entcert/feature.hpp"

namespace entcert {

namespace {

using GR = GaussianRational;
using Point = std::vector<ComplexFloat>;

Json complex_json(ComplexFloat z) { return Json::array({z.real(), z.imag()}); }

Json point_json(const Point& x) {
  Json j = Json::array();
  for (auto z : x) j.push_back(complex_json(z));
  return j;
}

std::string var_name(std::size_t k) { return "x" + std::to_string(k); }

bool product_across(const PureState& s, const Scope& scope) {
  for (const auto& b : scope)
    if (exact_rank(reshape_bipartite(s, b)) > 1) return false;
  return true;
}

QuadraticSystem scoped_system(const StateSet& set, const Scope& scope) {
  QuadraticSystem sys;
  sys.nvars = set.size();
  for (const auto& b : scope) {
    auto part = quadratic_system(set, b);
    sys.scope.push_back(part.scope.front());
    sys.polys.insert(sys.polys.end(), part.polys.begin(), part.polys.end());
  }
  return sys;
}

double residual(const std::vector<MultiPoly>& polys, const Point& x) {
  double r = 0;
  for (const auto& f : polys) r = std::max(r, std::abs(f.evaluate(x)));
  return r;
}

std::vector<int> all_vars(std::size_t n, std::optional<std::size_t> skip = std::nullopt) {
  std::vector<int> v;
  for (std::size_t k = 0; k < n; ++k)
    if (!skip || k != *skip) v.push_back(static_cast<int>(k));
  return v;
}

// A common zero of `polys`, by slicing free variables with small integers
// until the ideal is zero-dimensional and then solving numerically.
std::optional<Point> find_point(std::vector<MultiPoly> polys, std::size_t nvars, int depth = 0) {
  polys.erase(std::remove_if(polys.begin(), polys.end(), [](const MultiPoly& p) { return p.is_zero(); }), polys.end());
  if (polys.empty()) return Point(nvars, ComplexFloat(0));
  GroebnerBasis gb = buchberger(polys, Ordering::grevlex(nvars));
  if (gb.contains_one()) return std::nullopt;
  std::vector<int> active = active_variables(gb.gens);
  if (gb.is_zero_dimensional(active)) {
    Elimination el = eliminate_to_univariate(gb.gens, active.back());
    if (!el.shape_position) return std::nullopt;
    Point at(nvars, ComplexFloat(0));
    for (ComplexFloat r : find_roots(UnivariatePoly::from_exact(el.generator, el.keep))) {
      Point x(nvars, ComplexFloat(0));
      x[el.keep] = r;
      at[el.keep] = r;
      for (const auto& [j, h] : el.back_subst) x[j] = h.evaluate(at);
      if (residual(polys, x) <= 1e-8) return x;
    }
    return std::nullopt;
  }
  if (depth > static_cast<int>(nvars)) return std::nullopt;
  for (int v : active) {
    bool bounded = false;
    for (const auto& g : gb.gens) {
      std::size_t which = 0;
      if (g.leading_monomial(gb.ordering).is_pure_power(nvars, &which) && static_cast<int>(which) == v) bounded = true;
    }
    if (bounded) continue;
    for (int c : {0, 1, -1, 2, -2, 3}) {
      std::vector<MultiPoly> sliced;
      for (const auto& g : gb.gens) sliced.push_back(g.substitute(v, GR(c)));
      if (auto x = find_point(sliced, nvars, depth + 1)) {
        (*x)[v] = static_cast<double>(c);
        return x;
      }
    }
    break;
  }
  return std::nullopt;
}

struct CesOutcome {
  bool product_free = true;
  std::optional<Point> witness;
};

CesOutcome ces_recursive(const StateSet& set, const Scope& scope, Json& steps) {
  const std::size_t n = set.size();
  if (n == 0) return {};
  if (n == 1) {
    bool product = product_across(set.states[0], scope);
    steps.push_back({{"n", 1}, {"method", "reshape rank"}, {"product", product}});
    if (product) return {false, Point{1.0}};
    return {};
  }
  QuadraticSystem sys = scoped_system(set, scope);
  GroebnerBasis hom = buchberger(sys.nonzero(), Ordering::grevlex(n));
  if (hom.is_zero_dimensional(all_vars(n))) {
    steps.push_back({{"n", n}, {"method", "homogeneous"}, {"ordering", hom.ordering.name()}, {"basis", hom.lines()}});
    return {};
  }
  const std::size_t k = n - 1;
  CesOutcome sub = ces_recursive(set.without(k), scope, steps);
  if (!sub.product_free) {
    if (sub.witness) sub.witness->insert(sub.witness->begin() + static_cast<long>(k), ComplexFloat(0));
    return sub;
  }
  QuadraticSystem pinned = perturb(sys, k);
  GroebnerBasis gb = buchberger(pinned.nonzero(), Ordering::grevlex(n));
  Json step = {{"n", n}, {"method", "pinned"}, {"pinned", set.states[k].label()}, {"ordering", gb.ordering.name()},
               {"basis", gb.lines()}};
  steps.push_back(step);
  if (gb.contains_one()) return {};
  CesOutcome out{false, std::nullopt};
  if (auto x = find_point(pinned.nonzero(), n)) {
    (*x)[k] = 1.0;
    out.witness = x;
  }
  return out;
}

std::size_t count_standard_monomials(const GroebnerBasis& gb, const std::vector<int>& vars) {
  std::vector<Monomial> leads;
  for (const auto& g : gb.gens) leads.push_back(g.leading_monomial(gb.ordering));
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::set<Monomial> seen;
  std::vector<Monomial> todo;
  if (standard(Monomial{})) todo.push_back(Monomial{});
  while (!todo.empty()) {
    Monomial m = todo.back();
    todo.pop_back();
    if (!seen.insert(m).second) continue;
    for (int v : vars) {
      Monomial next = m * Monomial::var(v);
      if (standard(next) && !seen.count(next)) todo.push_back(next);
    }
  }
  return seen.size();
}

std::vector<std::string> labels(const StateSet& set) {
  std::vector<std::string> out;
  for (const auto& s : set.states) out.push_back(s.label());
  return out;
}

}  // namespace

Scope fully_product(const PartySpec& spec) {
  Scope s;
  for (const auto& b : all_bipartitions(spec))
    if (b.left.size() == 1) s.push_back(b);
  if (s.empty()) s = all_bipartitions(spec);
  return s;
}

std::string scope_name(const PartySpec& spec, const Scope& scope) {
  if (scope.size() == 1) return bipartition_name(spec, scope.front());
  std::string s;
  for (const auto& b : scope) s += (s.empty() ? "" : ",") + bipartition_name(spec, b);
  return s;
}

Certificate certify_ces(const StateSet& set, const Scope& scope) {
  for (const auto& b : scope) validate(b, set.spec);
  Certificate c;
  c.property = "ces";
  c.scope = scope_name(set.spec, scope);

  std::vector<std::size_t> pivots;
  if (!set.states.empty()) rref(coefficient_matrix(set), &pivots);
  StateSet basis = set.subset(pivots);
  Json steps = Json::array();
  CesOutcome r = ces_recursive(basis, scope, steps);

  c.evidence["dimension"] = basis.size();
  if (basis.size() < set.size()) c.evidence["independent"] = labels(basis);
  c.evidence["steps"] = steps;
  c.verdict = r.product_free ? Verdict::Holds : Verdict::Fails;
  if (r.witness) {
    Point full(set.size(), ComplexFloat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) full[pivots[k]] = (*r.witness)[k];
    c.evidence["witness"] = point_json(full);
    c.evidence["witness_residual"] = residual(scoped_system(set, scope).polys, full);
  }
  return c;
}

Certificate certify_ces(const StateSet& set, const Bipartition& b) { return certify_ces(set, Scope{b}); }

Certificate certify_ges(const StateSet& set) {
  Certificate c;
  c.property = "ges";
  c.scope = scope_name(set.spec, all_bipartitions(set.spec));
  c.verdict = Verdict::Holds;
  Json cuts = Json::array();
  for (const auto& b : all_bipartitions(set.spec)) {
    Certificate part = certify_ces(set, b);
    Json j = {{"bipartition", part.scope}, {"verdict", std::string(to_string(part.verdict))}};
    if (part.evidence.contains("witness")) j["witness"] = part.evidence["witness"];
    j["steps"] = part.evidence.value("steps", Json::array());
    cuts.push_back(j);
    if (part.fails()) c.verdict = Verdict::Fails;
    else if (!part.holds() && c.verdict == Verdict::Holds) c.verdict = Verdict::Inconclusive;
  }
  c.evidence["bipartitions"] = cuts;
  return c;
}

QcesAnalysis analyze_qces(const StateSet& set, std::optional<std::size_t> pinned) {
  const std::size_t n = set.size();
  if (n == 0) throw Error(ErrorKind::PreconditionFailed, "empty set");
  const std::size_t k = pinned.value_or(n - 1);
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "pinned index out of range");

  QcesAnalysis a;
  a.system = perturb(scoped_system(set, fully_product(set.spec)), k);
  std::vector<MultiPoly> polys = a.system.nonzero();
  if (n == 1) {
    a.index = polys.empty() ? 1 : 0;
    if (a.index) a.solutions.push_back({1.0, Point{1.0}, 0.0});
    return a;
  }
  std::vector<int> active = active_variables(polys);
  if (active.size() < n - 1) {
    GroebnerBasis gb = buchberger(polys, Ordering::grevlex(n));
    if (gb.contains_one()) return a;
    throw Error(ErrorKind::NotZeroDimensional, "a coordinate is unconstrained");
  }
  a.elimination = eliminate_to_univariate(polys, active.back());
  if (a.elimination.basis.contains_one()) return a;
  a.index = count_standard_monomials(a.elimination.basis, active);
  if (!a.elimination.shape_position) return a;
  a.roots = find_roots(UnivariatePoly::from_exact(a.elimination.generator, a.elimination.keep));
  a.solutions = back_substitute(a.roots, a.elimination, a.system);
  a.gram = gram_nonorthogonality(a.solutions, set);
  return a;
}

Certificate certify_qces(const StateSet& set) {
  Certificate c;
  c.property = "qces";
  Scope scope = fully_product(set.spec);

  // Deleting any one state must leave a product-free span; otherwise the
  // states with x_k = 0 are counted recursively.
  bool precondition = true;
  for (std::size_t k = 0; k < set.size() && precondition; ++k)
    if (!certify_ces(set.without(k), scope).holds()) precondition = false;
  c.evidence["deletions_product_free"] = precondition;

  std::function<std::pair<std::size_t, std::vector<Point>>(const StateSet&)> count =
      [&](const StateSet& s) -> std::pair<std::size_t, std::vector<Point>> {
    if (s.size() == 0) return {0, {}};
    QcesAnalysis a = analyze_qces(s);
    std::vector<Point> pts;
    std::size_t index = a.index;
    if (!precondition && s.size() > 1) {
      auto [sub, sub_pts] = count(s.without(s.size() - 1));
      index += sub;
      for (auto& p : sub_pts) {
        p.push_back(0.0);
        pts.push_back(std::move(p));
      }
    }
    for (const auto& sol : a.solutions) pts.push_back(sol.x);
    return {index, pts};
  };

  try {
    QcesAnalysis top = analyze_qces(set);
    auto [index, points] = count(set);
    c.verdict = Verdict::Holds;
    c.evidence["product_index"] = index;
    c.evidence["pinned"] = set.states.back().label();
    c.evidence["pinned_variable"] = var_name(set.size() - 1);
    if (!top.elimination.generator.is_zero()) {
      c.evidence["generator"] = top.elimination.generator.str();
      c.evidence["variable"] = var_name(top.elimination.keep);
      Json bs = Json::object();
      for (const auto& [j, h] : top.elimination.back_subst) bs[var_name(j)] = h.str();
      c.evidence["back_substitution"] = bs;
      c.evidence["shape_position"] = top.elimination.shape_position;
    }
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(point_json(p));
    c.evidence["solutions"] = pts;
    if (points.size() == index && index > 0) {
      std::vector<ProductStateSolution> sols;
      for (const auto& p : points) sols.push_back({0.0, p, 0.0});
      GramReport g = gram_nonorthogonality(sols, set);
      c.evidence["gram"] = {{"weights", g.weights}, {"min_offdiagonal", g.min_offdiagonal}, {"all_nonzero", g.all_nonzero}};
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotZeroDimensional) throw;
    c.verdict = Verdict::Fails;
    c.evidence["reason"] = "infinitely many product states";
  }
  return c;
}

Certificate certify_ubb(const StateSet& set) {
  if (auto bad = first_overlap(set))
    throw Error(ErrorKind::NotOrthogonal, "states " + set.states[bad->first].label() + " and " +
                                              set.states[bad->second].label() + " are not orthogonal");
  std::vector<std::string> entangled;
  for (const auto& s : set.states) {
    bool bisep = false;
    for (const auto& b : all_bipartitions(set.spec))
      if (exact_rank(reshape_bipartite(s, b)) == 1) bisep = true;
    if (!bisep) entangled.push_back(s.label());
  }
  if (!entangled.empty()) {
    std::string list;
    for (const auto& l : entangled) list += (list.empty() ? "" : ", ") + l;
    throw Error(ErrorKind::NotBiseparable, "not biseparable: " + list);
  }
  StateSet comp = orthogonal_complement(set);
  if (comp.size() == 0) throw Error(ErrorKind::PreconditionFailed, "the complement is 0-dimensional");

  Certificate ges = certify_ges(comp);
  Certificate c;
  c.property = "ubb";
  c.verdict = ges.verdict;
  c.evidence["complement_dimension"] = comp.size();
  Json states = Json::array();
  for (const auto& s : comp.states) states.push_back(ket_string(s));
  c.evidence["complement"] = states;
  c.evidence["complement_ges"] = ges.evidence["bipartitions"];
  return c;
}

Certificate certify_split(const StateSet& set, std::optional<StateSet> complement) {
  StateSet comp = complement ? *complement : orthogonal_complement(set);
  Scope scope = fully_product(set.spec);
  Certificate c;
  c.property = "split";
  c.verdict = Verdict::Holds;
  Json removals = Json::array();
  for (std::size_t k = 0; k < set.size(); ++k) {
    StateSet w = set.without(k);
    StateSet wp = comp;
    wp.states.push_back(set.states[k]);
    Certificate a = certify_ces(w, scope);
    Certificate b = certify_ces(wp, scope);
    removals.push_back({{"removed", set.states[k].label()},
                        {"W", std::string(to_string(a.verdict))},
                        {"W_perp", std::string(to_string(b.verdict))}});
    for (const auto* part : {&a, &b}) {
      if (part->fails()) c.verdict = Verdict::Fails;
      else if (!part->holds() && c.verdict == Verdict::Holds) c.verdict = Verdict::Inconclusive;
    }
  }
  c.evidence["removals"] = removals;
  return c;
}

Certificate certify_stability(const StateSet& core, std::size_t pinned, std::optional<StateSet> complement) {
  StateSet comp = complement ? *complement : orthogonal_complement(core);
  Certificate c;
  c.property = "stability";
  if (pinned >= core.size()) throw Error(ErrorKind::IndexOutOfRange, "pinned index out of range");
  c.evidence["pinned"] = core.states[pinned].label();
  if (comp.size() == 0) {
    c.verdict = Verdict::Holds;
    c.evidence["complement_dimension"] = 0;
    return c;
  }

  QuadraticSystem base = perturb(scoped_system(core, fully_product(core.spec)), pinned);
  std::vector<int> active = active_variables(base.nonzero());
  if (active.empty()) throw Error(ErrorKind::NotZeroDimensional, "the core system is empty");
  Elimination el = eliminate_to_univariate(base.nonzero(), active.back());
  c.evidence["generator"] = el.generator.str();
  Json bs = Json::object();
  for (const auto& [j, h] : el.back_subst) bs[var_name(j)] = h.str();
  c.evidence["back_substitution"] = bs;
  if (el.basis.contains_one()) {
    c.verdict = Verdict::Holds;
    c.evidence["reason"] = "no product state in the core span with the pinned coordinate";
    return c;
  }
  if (!el.shape_position) {
    c.verdict = Verdict::Inconclusive;
    c.evidence["reason"] = "core basis not in shape position";
    return c;
  }

  const std::size_t n = core.size() + comp.size();
  QuadraticSystem ext = extended_stability_system(core, comp, pinned);
  MultiPoly gen = el.generator.extended(n);
  std::vector<int> priority;
  for (std::size_t v = core.size(); v < n; ++v) priority.push_back(static_cast<int>(v));
  priority.push_back(el.keep);
  for (std::size_t v = 0; v < core.size(); ++v)
    if (static_cast<int>(v) != el.keep) priority.push_back(static_cast<int>(v));
  Ordering ord = Ordering::block(priority, comp.size());

  std::vector<MultiPoly> restricted;
  for (MultiPoly p : ext.nonzero()) {
    for (const auto& [j, h] : el.back_subst) p = p.substitute(j, h.extended(n));
    p = reduce(p, {gen}, ord);
    if (!p.is_zero()) restricted.push_back(p);
  }
  restricted.push_back(gen);
  GroebnerBasis gb = buchberger(restricted, ord);
  c.evidence["ordering"] = ord.name();
  c.evidence["basis"] = gb.lines();

  Json forced = Json::object();
  c.verdict = Verdict::Holds;
  for (std::size_t v = core.size(); v < n; ++v) {
    MultiPoly xv = MultiPoly::variable(n, v);
    bool zero = gb.contains(xv);
    if (!zero) {
      // Radical membership: 1 - t x_v generates the unit ideal.
      std::vector<MultiPoly> rab;
      for (const auto& g : gb.gens) rab.push_back(g.extended(n + 1));
      rab.push_back(MultiPoly::constant(n + 1, GR(1)) - MultiPoly::variable(n + 1, n) * xv.extended(n + 1));
      zero = buchberger(rab, Ordering::grevlex(n + 1)).contains_one();
    }
    forced[var_name(v)] = zero;
    if (!zero) c.verdict = Verdict::Fails;
  }
  c.evidence["forced_zero"] = forced;
  return c;
}

Certificate certify_distillable(const StateSet& set) {
  const std::size_t n = set.size();
  if (n == 0 || n > 16) throw Error(ErrorKind::PreconditionFailed, "subset enumeration needs 1..16 states");
  std::vector<Bipartition> groups = joint_groups(set.spec);
  Certificate c;
  c.property = "distill";
  c.verdict = Verdict::Holds;
  Json rows = Json::array();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::string> names;
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        names.push_back(set.states[i].label());
        ++t;
      }
    for (const auto& g : groups) {
      std::size_t d = group_dim(set.spec, g.left);
      ExactMatrix rho(d, d);
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        ExactMatrix pi = reduced_feature(set, i, i, g);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t q = 0; q < d; ++q) rho(r, q) += pi(r, q);
      }
      std::size_t rank = exact_rank(rho);
      bool ok = rank >= t + 1;
      if (!ok) c.verdict = Verdict::Fails;
      rows.push_back({{"subset", names}, {"traced", group_name(set.spec, g.right)}, {"rank", rank}, {"needed", t + 1}});
    }
  }
  c.evidence["bimarginals"] = rows;
  return c;
}

Certificate certify_orthogonality(const StateSet& set) {
  Certificate c;
  c.property = "orthogonality";
  auto bad = first_overlap(set);
  c.verdict = bad ? Verdict::Fails : Verdict::Holds;
  c.evidence["states"] = set.size();
  if (bad) {
    c.evidence["pair"] = {set.states[bad->first].label(), set.states[bad->second].label()};
    c.evidence["overlap"] = inner_product(set.states[bad->first], set.states[bad->second]).str();
  }
  return c;
}

Certificate certify_opm(const StateSet& set) {
  Certificate sn = certify_strong_nonlocality(set);
  Certificate c;
  c.property = "opm";
  c.verdict = sn.verdict == Verdict::Inconclusive ? Verdict::Inconclusive : Verdict::Holds;
  c.evidence = sn.evidence;
  c.evidence["strong_nonlocality"] = std::string(to_string(sn.verdict));
  return c;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"orthogonality", "strong-nonlocality", "ces", "ges", "qces",
                                                 "ubb", "split", "stability", "distill", "opm"};
  return names;
}

int Report::exit_code() const {
  bool any_fail = false, any_inconclusive = false;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    if (errored[k]) return 3;
    any_fail |= checks[k].fails();
    any_inconclusive |= checks[k].verdict == Verdict::Inconclusive;
  }
  return any_fail ? 1 : any_inconclusive ? 2 : 0;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["set"] = set;
  j["checks"] = Json::array();
  for (const auto& c : checks) j["checks"].push_back(c.to_json(with_timing));
  return j;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "set " << set << "\n";
  for (const auto& c : checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f ms", c.ms);
    os << "\n[" << to_string(c.verdict) << "] " << c.property;
    if (!c.scope.empty()) os << " (" << c.scope << ")";
    os << "  " << ms << "\n";
    std::istringstream body(c.evidence.dump(2));
    for (std::string line; std::getline(body, line);) os << "    " << line << "\n";
  }
  return os.str();
}

Report run_report(const StateSet& set, const std::vector<std::string>& requested, const ReportOptions& opts) {
  std::vector<std::string> checks;
  for (const auto& name : requested) {
    if (name == "all") {
      for (const auto& k : known_checks())
        if (std::find(checks.begin(), checks.end(), k) == checks.end()) checks.push_back(k);
      continue;
    }
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
      throw Error(ErrorKind::PreconditionFailed, "unknown check '" + name + "'");
    if (std::find(checks.begin(), checks.end(), name) == checks.end()) checks.push_back(name);
  }

  auto run_one = [&](const std::string& name) -> std::pair<Certificate, bool> {
    auto t0 = std::chrono::steady_clock::now();
    Certificate c;
    bool failed = false;
    try {
      if (name == "orthogonality") c = certify_orthogonality(set);
      else if (name == "strong-nonlocality") c = certify_strong_nonlocality(set);
      else if (name == "ces") c = certify_ces(set, fully_product(set.spec));
      else if (name == "ges") c = certify_ges(set);
      else if (name == "qces") c = certify_qces(set);
      else if (name == "ubb") c = certify_ubb(set);
      else if (name == "split") c = certify_split(set, opts.complement);
      else if (name == "stability") {
        if (set.size() == 0) throw Error(ErrorKind::PreconditionFailed, "empty set");
        c = certify_stability(set, opts.pin.value_or(set.size() - 1), opts.complement);
      } else if (name == "distill") c = certify_distillable(set);
      else c = certify_opm(set);
    } catch (const Error& e) {
      c = Certificate{};
      c.evidence = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
      failed = true;
    } catch (const std::exception& e) {
      c = Certificate{};
      c.evidence = {{"error", "internal"}, {"message", e.what()}};
      failed = true;
    }
    c.property = name;
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return {c, failed};
  };

  unsigned cap = opts.threads;
  if (cap == 0) {
    if (const char* env = std::getenv("ENTANGLE_CERT_THREADS")) cap = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (cap == 0) cap = std::max(1u, std::thread::hardware_concurrency());
  }

  Report rep;
  rep.set = set.name;
  rep.checks.resize(checks.size());
  rep.errored.resize(checks.size());
  for (std::size_t start = 0; start < checks.size(); start += cap) {
    std::vector<std::future<std::pair<Certificate, bool>>> batch;
    std::size_t end = std::min(checks.size(), start + cap);
    for (std::size_t k = start; k < end; ++k)
      batch.push_back(std::async(cap == 1 ? std::launch::deferred : std::launch::async, run_one, checks[k]));
    for (std::size_t k = start; k < end; ++k) {
      auto [c, failed] = batch[k - start].get();
      rep.checks[k] = std::move(c);
      rep.errored[k] = failed;
    }
  }
  return rep;
}

}  // namespace entcert
