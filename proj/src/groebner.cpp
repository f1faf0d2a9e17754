#include "entcert/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "entcert/error.hpp"

namespace entcert {

namespace {

using GR = GaussianRational;

struct ITerm {
  Monomial m;
  GaussInt c;
};

// Polynomial with Gaussian-integer coefficients, terms in descending order.
using IntPoly = std::vector<ITerm>;

bool is_unit(const GaussInt& g) { return g.norm() == 1; }

GaussInt unit_normal_factor(const GaussInt& lc) {
  // Unit u with u * lc in the first quadrant (re > 0, im >= 0).
  if (sgn(lc.re) > 0 && sgn(lc.im) >= 0) return {1, 0};
  if (sgn(lc.im) > 0 && sgn(lc.re) <= 0) return {0, -1};
  if (sgn(lc.re) < 0 && sgn(lc.im) <= 0) return {-1, 0};
  return {0, 1};
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  GaussInt g = p.front().c;
  // Cheap integer content first; the Gaussian gcd only when it can help.
  mpz_class ic = integer_content(g);
  for (const auto& t : p) {
    mpz_class tc = integer_content(t.c);
    mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), tc.get_mpz_t());
    if (ic == 1) break;
  }
  if (ic > 1)
    for (auto& t : p) {
      mpz_divexact(t.c.re.get_mpz_t(), t.c.re.get_mpz_t(), ic.get_mpz_t());
      mpz_divexact(t.c.im.get_mpz_t(), t.c.im.get_mpz_t(), ic.get_mpz_t());
    }
  bool all_real = true;
  for (const auto& t : p)
    if (sgn(t.c.im) != 0) {
      all_real = false;
      break;
    }
  if (!all_real) {
    g = p.front().c;
    for (const auto& t : p) {
      if (is_unit(g)) break;
      g = gcd(g, t.c);
    }
    if (!is_unit(g))
      for (auto& t : p) t.c = exact_div(t.c, g);
  }
  GaussInt u = unit_normal_factor(p.front().c);
  if (!(u == GaussInt{1, 0}))
    for (auto& t : p) t.c = t.c * u;
}

IntPoly to_int(const MultiPoly& f, const Ordering& ord) {
  mpz_class l = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_class d = denominator_lcm(c);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntPoly p;
  for (const auto& [m, c] : f.terms()) {
    GaussInt v{c.re().num() * (l / c.re().den()), c.im().num() * (l / c.im().den())};
    p.push_back({m, v});
  }
  std::sort(p.begin(), p.end(), [&](const ITerm& a, const ITerm& b) { return ord.greater(a.m, b.m); });
  make_primitive(p);
  return p;
}

MultiPoly to_multi(const IntPoly& p, std::size_t nvars) {
  MultiPoly f(nvars);
  if (p.empty()) return f;
  GR inv = p.front().c.to_rational().inverse();
  for (const auto& t : p) f.add_term(t.m, t.c.to_rational() * inv);
  return f;
}

// a * f[from..] - b * shift * g[1..], merged in descending order.
IntPoly combine(const IntPoly& f, std::size_t k, const GaussInt& a, const IntPoly& g, const Monomial& shift,
                const GaussInt& b, const Ordering& ord) {
  IntPoly out;
  out.reserve(f.size() + g.size());
  const bool a_one = a == GaussInt{1, 0};
  for (std::size_t i = 0; i < k; ++i) out.push_back({f[i].m, a_one ? f[i].c : f[i].c * a});
  std::size_t i = k + 1, j = 1;
  while (i < f.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back({f[i].m, a_one ? f[i].c : f[i].c * a});
      ++i;
      continue;
    }
    Monomial gm = g[j].m * shift;
    if (i >= f.size()) {
      GaussInt v = g[j].c * b;
      out.push_back({gm, GaussInt{-v.re, -v.im}});
      ++j;
      continue;
    }
    int c = ord.compare(f[i].m, gm);
    if (c > 0) {
      out.push_back({f[i].m, a_one ? f[i].c : f[i].c * a});
      ++i;
    } else if (c < 0) {
      GaussInt v = g[j].c * b;
      out.push_back({gm, GaussInt{-v.re, -v.im}});
      ++j;
    } else {
      GaussInt v = (a_one ? f[i].c : f[i].c * a) - g[j].c * b;
      if (!v.is_zero()) out.push_back({f[i].m, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Engine {
  const Ordering& ord;
  std::vector<IntPoly> polys;
  std::vector<bool> active;
  std::vector<unsigned> sugar;

  const IntPoly* find_divisor(const Monomial& m) const {
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k] && polys[k].front().m.divides(m)) return &polys[k];
    return nullptr;
  }

  // Full reduction (every term) by the active basis.
  void reduce(IntPoly& f) const {
    std::size_t k = 0;
    unsigned steps = 0;
    while (k < f.size()) {
      const IntPoly* g = find_divisor(f[k].m);
      if (!g) {
        ++k;
        continue;
      }
      const GaussInt& cf = f[k].c;
      const GaussInt& cg = g->front().c;
      GaussInt h = gcd(cf, cg);
      GaussInt a = exact_div(cg, h);
      GaussInt b = exact_div(cf, h);
      f = combine(f, k, a, *g, f[k].m / g->front().m, b, ord);
      if (++steps % 16 == 0) make_primitive(f);
    }
    make_primitive(f);
  }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

bool is_nonzero_constant(const IntPoly& p) { return p.size() == 1 && p.front().m.is_one(); }

MultiPoly lead_term_free(const MultiPoly& p, const Ordering& ord) {
  MultiPoly q = p;
  Monomial lm = q.leading_monomial(ord);
  q.add_term(lm, -q.coeff(lm));
  return q;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& input, const Ordering& ord, BuchbergerStats* stats) {
  std::size_t nvars = 0;
  for (const auto& p : input) nvars = std::max(nvars, p.nvars());
  GroebnerBasis result{nvars, ord, {}};
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  Engine eng{ord, {}, {}, {}};
  std::vector<Pair> pairs;

  auto one = [&] {
    result.gens = {MultiPoly::constant(nvars, GR(1))};
    return result;
  };

  // Gebauer-Moeller update with the new polynomial at index h.
  auto update = [&](std::size_t h) {
    const Monomial& lh = eng.polys[h].front().m;
    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g) {
      if (!eng.active[g]) continue;
      const Monomial& lg = eng.polys[g].front().m;
      Monomial l = lcm(lh, lg);
      unsigned s = std::max(eng.sugar[h] + (l.deg - lh.deg), eng.sugar[g] + (l.deg - lg.deg));
      c.push_back({g, h, l, s});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = coprime(lh, eng.polys[c[a].i].front().m);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
      else ++st.pairs_skipped;
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs) {
      const Monomial& li = eng.polys[p.i].front().m;
      const Monomial& lj = eng.polys[p.j].front().m;
      if (lh.divides(p.lcm) && !(lcm(li, lh) == p.lcm) && !(lcm(lh, lj) == p.lcm)) {
        ++st.pairs_skipped;
        continue;
      }
      kept.push_back(p);
    }
    for (const auto& p : d) {
      if (coprime(lh, eng.polys[p.i].front().m)) {
        ++st.pairs_skipped;
        continue;
      }
      kept.push_back(p);
    }
    pairs = std::move(kept);
    for (std::size_t g = 0; g < h; ++g)
      if (eng.active[g] && lh.divides(eng.polys[g].front().m)) eng.active[g] = false;
  };

  auto add = [&](IntPoly p, unsigned sugar) -> bool {
    eng.polys.push_back(std::move(p));
    eng.active.push_back(true);
    eng.sugar.push_back(sugar);
    update(eng.polys.size() - 1);
    st.max_basis = std::max(st.max_basis, eng.polys.size());
    return true;
  };

  // Inputs: reduce each against those already added, smallest first.
  std::vector<IntPoly> start;
  for (const auto& p : input)
    if (!p.is_zero()) start.push_back(to_int(p, ord));
  std::sort(start.begin(), start.end(), [&](const IntPoly& a, const IntPoly& b) { return ord.greater(b.front().m, a.front().m); });
  for (auto& p : start) {
    unsigned s = 0;
    for (const auto& t : p) s = std::max(s, t.m.deg);
    eng.reduce(p);
    if (p.empty()) continue;
    if (is_nonzero_constant(p)) return one();
    add(std::move(p), s);
  }

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = std::next(best); it != pairs.end(); ++it) {
      int c = ord.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && it->sugar < best->sugar)) best = it;
    }
    Pair p = *best;
    pairs.erase(best);
    ++st.pairs_considered;

    const IntPoly& f = eng.polys[p.i];
    const IntPoly& g = eng.polys[p.j];
    GaussInt h = gcd(f.front().c, g.front().c);
    GaussInt a = exact_div(g.front().c, h);
    GaussInt b = exact_div(f.front().c, h);
    // S = a * (lcm/lf) f - b * (lcm/lg) g
    IntPoly fs;
    Monomial sf = p.lcm / f.front().m;
    for (const auto& t : f) fs.push_back({t.m * sf, t.c});
    // The leading terms cancel; combine skips both.
    IntPoly s = combine(fs, 0, a, g, p.lcm / g.front().m, b, ord);
    eng.reduce(s);
    if (s.empty()) {
      ++st.zero_reductions;
      continue;
    }
    if (is_nonzero_constant(s)) return one();
    add(std::move(s), p.sugar);
  }

  // Minimal basis, then interreduce tails.
  std::vector<IntPoly> minimal;
  for (std::size_t k = 0; k < eng.polys.size(); ++k)
    if (eng.active[k]) minimal.push_back(eng.polys[k]);
  std::sort(minimal.begin(), minimal.end(), [&](const IntPoly& x, const IntPoly& y) { return ord.greater(y.front().m, x.front().m); });
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Engine others{ord, {}, {}, {}};
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == k) continue;
      others.polys.push_back(minimal[j]);
      others.active.push_back(true);
    }
    // Reduce the tail only; the leading term is not divisible by the others.
    IntPoly f = minimal[k];
    std::size_t pos = 1;
    while (pos < f.size()) {
      const IntPoly* g = others.find_divisor(f[pos].m);
      if (!g) {
        ++pos;
        continue;
      }
      GaussInt h = gcd(f[pos].c, g->front().c);
      GaussInt a = exact_div(g->front().c, h);
      GaussInt b = exact_div(f[pos].c, h);
      f = combine(f, pos, a, *g, f[pos].m / g->front().m, b, ord);
    }
    make_primitive(f);
    minimal[k] = std::move(f);
  }
  for (const auto& p : minimal) result.gens.push_back(to_multi(p, nvars));
  return result;
}

bool contains_one(const GroebnerBasis& gb) { return gb.contains_one(); }

bool GroebnerBasis::contains_one() const {
  return gens.size() == 1 && gens.front().is_constant() && !gens.front().is_zero();
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors, const Ordering& ord) {
  std::vector<Monomial> lms;
  std::vector<GR> lcs;
  for (const auto& d : divisors) {
    lms.push_back(d.leading_monomial(ord));
    lcs.push_back(d.coeff(lms.back()));
  }
  MultiPoly rest = p;
  MultiPoly rem(p.nvars());
  while (!rest.is_zero()) {
    Monomial lm = rest.leading_monomial(ord);
    GR lc = rest.coeff(lm);
    bool divided = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (!lms[k].divides(lm)) continue;
      rest -= divisors[k].times(lm / lms[k], lc / lcs[k]);
      divided = true;
      break;
    }
    if (!divided) {
      rem.add_term(lm, lc);
      rest.add_term(lm, -lc);
    }
  }
  return rem;
}

MultiPoly GroebnerBasis::reduce(const MultiPoly& p) const { return entcert::reduce(p, gens, ordering); }

bool GroebnerBasis::is_zero_dimensional(const std::vector<int>& active) const {
  if (contains_one()) return true;
  for (int v : active) {
    bool found = false;
    for (const auto& g : gens) {
      std::size_t which = 0;
      if (g.leading_monomial(ordering).is_pure_power(nvars, &which) && static_cast<int>(which) == v) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<std::string> GroebnerBasis::lines() const {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.str());
  return out;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const Ordering& ord) {
  Monomial lf = f.leading_monomial(ord), lg = g.leading_monomial(ord);
  Monomial l = lcm(lf, lg);
  return f.times(l / lf, f.coeff(lf).inverse()) - g.times(l / lg, g.coeff(lg).inverse());
}

bool verify_confluence(const GroebnerBasis& gb, std::pair<std::size_t, std::size_t>* bad) {
  for (std::size_t i = 0; i < gb.gens.size(); ++i)
    for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
      if (!reduce(s_polynomial(gb.gens[i], gb.gens[j], gb.ordering), gb.gens, gb.ordering).is_zero()) {
        if (bad) *bad = {i, j};
        return false;
      }
    }
  return true;
}

std::vector<int> active_variables(const std::vector<MultiPoly>& polys) {
  std::set<int> vs;
  for (const auto& p : polys)
    for (int v : p.support()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

GroebnerBasis fglm(const GroebnerBasis& gb, const Ordering& target) {
  GroebnerBasis out{gb.nvars, target, {}};
  if (gb.contains_one()) {
    out.gens = gb.gens;
    return out;
  }
  std::vector<int> vars = active_variables(gb.gens);
  if (!gb.is_zero_dimensional(vars)) throw Error(ErrorKind::NotZeroDimensional, "the ideal is not zero-dimensional");
  const std::size_t n = gb.nvars;

  // Echelon rows: v = sum_b expr[b] NF(b), with v[pivot] = 1.
  struct Row {
    Monomial pivot;
    MultiPoly v;
    std::vector<GR> expr;
  };
  std::vector<Row> rows;
  std::vector<Monomial> staircase;
  std::vector<MultiPoly> nf;
  std::vector<Monomial> leads;

  auto lex_less = [&](const Monomial& a, const Monomial& b) { return target.compare(a, b) < 0; };
  std::set<Monomial, decltype(lex_less)> todo(lex_less);
  std::map<Monomial, MultiPoly> pending;  // candidate -> its normal form

  auto enqueue = [&](std::size_t b) {
    for (int v : vars) {
      Monomial m = staircase[b] * Monomial::var(v);
      if (todo.count(m)) continue;
      todo.insert(m);
      pending.emplace(m, gb.reduce(nf[b].times(Monomial::var(v), GR(1))));
    }
  };

  staircase.push_back(Monomial{});
  nf.push_back(gb.reduce(MultiPoly::constant(n, GR(1))));
  {
    Monomial piv = nf[0].leading_monomial(gb.ordering);
    GR inv = nf[0].coeff(piv).inverse();
    rows.push_back({piv, nf[0].scaled(inv), {inv}});
  }
  enqueue(0);

  while (!todo.empty()) {
    Monomial m = *todo.begin();
    todo.erase(todo.begin());
    MultiPoly nfm = std::move(pending.at(m));
    pending.erase(m);
    MultiPoly w = nfm;
    bool blocked = false;
    for (const auto& l : leads)
      if (l.divides(m)) blocked = true;
    if (blocked) continue;

    std::vector<GR> comb(staircase.size());
    for (const auto& r : rows) {
      GR c = w.coeff(r.pivot);
      if (c.is_zero()) continue;
      w -= r.v.scaled(c);
      for (std::size_t b = 0; b < r.expr.size(); ++b) comb[b] += c * r.expr[b];
    }
    if (w.is_zero()) {
      MultiPoly g(n);
      g.add_term(m, GR(1));
      for (std::size_t b = 0; b < comb.size(); ++b) g.add_term(staircase[b], -comb[b]);
      leads.push_back(m);
      out.gens.push_back(std::move(g));
      continue;
    }
    std::size_t idx = staircase.size();
    staircase.push_back(m);
    nf.push_back(std::move(nfm));
    Monomial piv = w.leading_monomial(gb.ordering);
    GR inv = w.coeff(piv).inverse();
    std::vector<GR> expr(idx + 1);
    for (std::size_t b = 0; b < idx; ++b) expr[b] = -comb[b] * inv;
    expr[idx] = inv;
    rows.push_back({piv, w.scaled(inv), std::move(expr)});
    for (auto& r : rows) r.expr.resize(idx + 1);
    enqueue(idx);
  }
  std::sort(out.gens.begin(), out.gens.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return target.compare(a.leading_monomial(target), b.leading_monomial(target)) < 0;
  });
  return out;
}

Elimination eliminate_to_univariate(const std::vector<MultiPoly>& system, int keep) {
  std::size_t nvars = 0;
  for (const auto& p : system) nvars = std::max(nvars, p.nvars());
  if (keep < 0 || static_cast<std::size_t>(keep) >= nvars) throw Error(ErrorKind::IndexOutOfRange, "kept variable out of range");
  std::vector<int> active = active_variables(system);
  if (std::find(active.begin(), active.end(), keep) == active.end()) active.push_back(keep);
  std::sort(active.begin(), active.end());

  std::vector<int> priority;
  for (int v : active)
    if (v != keep) priority.push_back(v);
  priority.push_back(keep);
  for (int v = 0; v < static_cast<int>(nvars); ++v)
    if (std::find(active.begin(), active.end(), v) == active.end()) priority.push_back(v);

  Elimination out;
  out.keep = keep;
  GroebnerBasis grev = buchberger(system, Ordering::grevlex(priority));
  if (!grev.is_zero_dimensional(active))
    throw Error(ErrorKind::NotZeroDimensional, "the system has infinitely many solutions");
  out.basis = fglm(grev, Ordering::lex(priority));

  const Ordering& ord = out.basis.ordering;
  for (const auto& g : out.basis.gens) {
    auto sup = g.support();
    if (sup.empty() || (sup.size() == 1 && sup.front() == keep)) {
      out.generator = g.primitive(ord);
      break;
    }
  }
  if (out.basis.contains_one()) return out;

  // Shape position: one generator x_j - h_j(keep) per other variable.
  out.shape_position = out.basis.gens.size() == active.size();
  for (const auto& g : out.basis.gens) {
    if (!out.shape_position) break;
    auto sup = g.support();
    if (sup.size() == 1 && sup.front() == keep) continue;
    Monomial lm = g.leading_monomial(ord);
    std::size_t which = 0;
    bool linear = lm.deg == 1 && lm.is_pure_power(nvars, &which);
    bool only_keep = true;
    MultiPoly tail = lead_term_free(g, ord);
    for (int v : tail.support())
      if (v != keep) only_keep = false;
    if (!linear || !only_keep) {
      out.shape_position = false;
      break;
    }
    out.back_subst[static_cast<int>(which)] = -tail;
  }
  if (!out.shape_position) out.back_subst.clear();
  return out;
}

}  // namespace entcert
