#include "entcert/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entcert/error.hpp"

namespace entcert {

UnivariatePoly UnivariatePoly::from_exact(const MultiPoly& p, std::size_t var) {
  UnivariatePoly u;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (v != var && m.e[v] != 0) throw Error(ErrorKind::PreconditionFailed, "polynomial is not univariate");
    std::size_t d = m.e[var];
    if (u.c.size() <= d) u.c.resize(d + 1);
    u.c[d] = c.to_complex();
  }
  while (!u.c.empty() && u.c.back() == ComplexFloat(0)) u.c.pop_back();
  return u;
}

bool UnivariatePoly::real_coefficients() const {
  return std::all_of(c.begin(), c.end(), [](ComplexFloat v) { return v.imag() == 0.0; });
}

ComplexFloat UnivariatePoly::operator()(ComplexFloat x) const {
  ComplexFloat r = 0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

ComplexFloat UnivariatePoly::derivative(ComplexFloat x) const {
  ComplexFloat r = 0;
  for (std::size_t k = c.size(); k-- > 1;) r = r * x + c[k] * static_cast<double>(k);
  return r;
}

double UnivariatePoly::scale(ComplexFloat x) const {
  double r = 0, ax = std::abs(x);
  for (std::size_t k = c.size(); k-- > 0;) r = r * ax + std::abs(c[k]);
  return r;
}

namespace {

void order_roots(std::vector<ComplexFloat>& roots, bool real_input) {
  if (real_input) {
    std::vector<ComplexFloat> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      ComplexFloat z = roots[i];
      if (std::abs(z.imag()) <= 1e-9 * (1 + std::abs(z))) {
        out.push_back({z.real(), 0.0});
        continue;
      }
      std::size_t best = roots.size();
      double gap = 0;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        double g = std::abs(roots[j] - std::conj(z));
        if (best == roots.size() || g < gap) best = j, gap = g;
      }
      if (best == roots.size()) {
        out.push_back(z);
        continue;
      }
      used[best] = true;
      ComplexFloat avg = 0.5 * (z + std::conj(roots[best]));
      out.push_back(avg);
      out.push_back(std::conj(avg));
    }
    roots = std::move(out);
  }
  std::stable_sort(roots.begin(), roots.end(), [](ComplexFloat a, ComplexFloat b) {
    bool ra = a.imag() == 0.0, rb = b.imag() == 0.0;
    if (ra != rb) return ra;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() > b.imag();
  });
}

}  // namespace

std::vector<ComplexFloat> find_roots(const UnivariatePoly& p, double tol) {
  if (p.c.empty() || p.degree() < 1) throw Error(ErrorKind::PreconditionFailed, "root finding needs degree >= 1");
  std::size_t zeros = 0;
  while (zeros < p.degree() && p.c[zeros] == ComplexFloat(0)) ++zeros;
  if (zeros > 0) {
    std::vector<ComplexFloat> out(zeros, ComplexFloat(0));
    if (zeros < p.degree()) {
      UnivariatePoly rest;
      rest.c.assign(p.c.begin() + static_cast<long>(zeros), p.c.end());
      auto more = find_roots(rest, tol);
      out.insert(out.end(), more.begin(), more.end());
    }
    order_roots(out, p.real_coefficients());
    return out;
  }
  const std::size_t n = p.degree();

  double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(p.c[k] / p.c[n]));
  radius += 1;
  std::vector<ComplexFloat> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  constexpr int kCap = 500;
  bool done = false;
  for (int it = 0; it < kCap && !done; ++it) {
    done = true;
    for (std::size_t k = 0; k < n; ++k) {
      ComplexFloat v = p(z[k]);
      if (v == ComplexFloat(0)) continue;
      ComplexFloat ratio = v / p.derivative(z[k]);
      ComplexFloat repulse = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulse += 1.0 / (z[k] - z[j]);
      ComplexFloat w = ratio / (1.0 - ratio * repulse);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[k] -= w;
      if (std::abs(w) > tol * (1 + std::abs(z[k]))) done = false;
    }
  }
  if (!done) throw Error(ErrorKind::NonConvergence, "root iteration hit the cap of 500 sweeps");
  for (auto& r : z) {
    // Two Newton steps tidy the last bits.
    for (int s = 0; s < 2; ++s) {
      ComplexFloat d = p.derivative(r);
      if (d != ComplexFloat(0)) r -= p(r) / d;
    }
    if (std::abs(p(r)) > 1e-9 * p.scale(r)) throw Error(ErrorKind::NonConvergence, "root failed the residual check");
  }
  order_roots(z, p.real_coefficients());
  return z;
}

std::vector<ProductStateSolution> back_substitute(const std::vector<ComplexFloat>& roots, const Elimination& el,
                                                  const QuadraticSystem& sys) {
  if (!el.shape_position) throw Error(ErrorKind::NotShapePosition, "the basis is not in shape position");
  std::vector<ProductStateSolution> out;
  for (ComplexFloat r : roots) {
    ProductStateSolution s;
    s.root = r;
    s.x.assign(sys.nvars, ComplexFloat(0));
    s.x[el.keep] = r;
    std::vector<ComplexFloat> at(sys.nvars, ComplexFloat(0));
    at[el.keep] = r;
    for (const auto& [j, h] : el.back_subst) s.x[j] = h.evaluate(at);
    if (sys.pinned) s.x[*sys.pinned] = 1.0;
    for (const auto& f : sys.polys) s.residual = std::max(s.residual, std::abs(f.evaluate(s.x)));
    if (s.residual > 1e-8) throw Error(ErrorKind::ResidualTooLarge, "back-substituted point misses the system");
    out.push_back(std::move(s));
  }
  return out;
}

GramReport gram_nonorthogonality(const std::vector<ProductStateSolution>& solutions, const StateSet& set) {
  const std::size_t n = set.size();
  FloatMatrix overlap(n, n);
  GramReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) overlap(i, j) = inner_product(set.states[i], set.states[j]).to_complex();
  for (std::size_t i = 0; i < n; ++i) rep.weights.push_back(overlap(i, i).real());

  const std::size_t m = solutions.size();
  rep.gram = FloatMatrix(m, m);
  rep.min_offdiagonal = m > 1 ? INFINITY : 0.0;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t p = 0; p < m; ++p) {
      ComplexFloat g = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g += std::conj(solutions[k].x[i]) * solutions[p].x[j] * overlap(i, j);
      rep.gram(k, p) = g;
      if (k != p) rep.min_offdiagonal = std::min(rep.min_offdiagonal, std::abs(g));
    }
  rep.all_nonzero = m < 2 || rep.min_offdiagonal > 1e-6;
  return rep;
}

}  // namespace entcert
