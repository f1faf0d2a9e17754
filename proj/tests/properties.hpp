#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "entcert/certify.hpp"
#include "entcert/feature.hpp"
#include "entcert/io.hpp"
#include "support.hpp"

namespace testing {

using Vec = Eigen::VectorXcd;

inline PureState random_state(const PartySpec& spec, std::mt19937& rng) {
  PureState s(spec);
  for (std::size_t f = 0; f < spec.total(); ++f) s.add(spec.decode(f), random_gr(rng, 3, 2));
  if (s.is_zero()) s.add(spec.decode(0), 1);
  return s;
}

inline Vec dense(const PureState& s, const PartySpec& spec) {
  Vec v = Vec::Zero(static_cast<Eigen::Index>(spec.total()));
  for (const auto& [idx, a] : s.terms()) v(static_cast<Eigen::Index>(spec.encode(idx))) = a.to_complex();
  return v;
}

// Orthonormal basis of the span, as columns.
inline Eigen::MatrixXcd span_basis(const StateSet& set) {
  const auto dim = static_cast<Eigen::Index>(set.spec.total());
  Eigen::MatrixXcd a(dim, static_cast<Eigen::Index>(set.size()));
  for (std::size_t k = 0; k < set.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = dense(set.states[k], set.spec);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU);
  Eigen::Index r = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) > 1e-9 * svd.singularValues()(0)) ++r;
  return svd.matrixU().leftCols(r);
}

inline Vec kron_all(const std::vector<Vec>& locals) {
  Vec v = Vec::Ones(1);
  for (const auto& l : locals) {
    Vec next(v.size() * l.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * l.size(), l.size()) = v(i) * l;
    v = next;
  }
  return v;
}

// Squared distance from the unit product state to the span.
inline double distance2(const Eigen::MatrixXcd& q, const std::vector<Vec>& locals) {
  Vec v = kron_all(locals);
  return std::max(0.0, 1.0 - (q.adjoint() * v).squaredNorm());
}

// Best local vector for party p with the others fixed: top eigenvector of a 2x2 form.
inline void improve(const Eigen::MatrixXcd& q, std::vector<Vec>& locals, std::size_t p) {
  const Eigen::Index d = locals[p].size();
  Eigen::MatrixXcd w(q.cols(), d);
  for (Eigen::Index i = 0; i < d; ++i) {
    std::vector<Vec> e = locals;
    e[p] = Vec::Zero(d);
    e[p](i) = 1.0;
    w.col(i) = q.adjoint() * kron_all(e);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(w.adjoint() * w);
  locals[p] = es.eigenvectors().col(d - 1).normalized();
}

inline std::vector<Vec> sphere_grid() {
  std::vector<Vec> out;
  const double pi = std::acos(-1.0);
  for (int t = 0; t <= 8; ++t) {
    double theta = pi * t / 8;
    int steps = (t == 0 || t == 8) ? 1 : 12;
    for (int f = 0; f < steps; ++f) {
      Vec v(2);
      v << std::cos(theta / 2), std::polar(std::sin(theta / 2), 2 * pi * f / steps);
      out.push_back(v);
    }
  }
  return out;
}

// Grid over every party but the first, exact optimum over the first, then
// alternating refinement from the best starts.
inline double oracle_min_distance2(const StateSet& set) {
  Eigen::MatrixXcd q = span_basis(set);
  const std::size_t n = set.spec.dims.size();
  static const std::vector<Vec> grid = sphere_grid();
  std::vector<std::pair<double, std::vector<Vec>>> starts;
  std::size_t combos = 1;
  for (std::size_t p = 1; p < n; ++p) combos *= grid.size();
  for (std::size_t c = 0; c < combos; ++c) {
    std::vector<Vec> locals(n);
    locals[0] = Vec::Ones(2).normalized();
    std::size_t r = c;
    for (std::size_t p = 1; p < n; ++p, r /= grid.size()) locals[p] = grid[r % grid.size()];
    improve(q, locals, 0);
    starts.emplace_back(distance2(q, locals), locals);
  }
  std::sort(starts.begin(), starts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  double best = 1.0;
  for (std::size_t s = 0; s < std::min<std::size_t>(starts.size(), 6); ++s) {
    auto locals = starts[s].second;
    for (int it = 0; it < 400; ++it) {
      for (std::size_t p = 0; p < n; ++p) improve(q, locals, p);
      if (distance2(q, locals) < 1e-14) break;
    }
    best = std::min(best, distance2(q, locals));
  }
  return best;
}

inline std::vector<PureState> all_small_states(const PartySpec& spec) {
  std::vector<PureState> out;
  const std::size_t dim = spec.total();
  std::size_t count = 1;
  for (std::size_t k = 0; k < dim; ++k) count *= 3;
  for (std::size_t c = 1; c < count; ++c) {
    PureState s(spec);
    std::size_t r = c;
    for (std::size_t f = 0; f < dim; ++f, r /= 3)
      if (r % 3) s.add(spec.decode(f), GaussianRational(static_cast<long>(r % 3) == 1 ? 1 : -1));
    out.push_back(s);
  }
  return out;
}

inline PureState small_state(const PartySpec& spec, std::mt19937& rng, bool product) {
  std::uniform_int_distribution<int> d(-1, 1);
  PureState s(spec);
  if (product) {
    std::vector<std::vector<int>> locals;
    for (int dd : spec.dims) {
      std::vector<int> l(static_cast<std::size_t>(dd));
      do
        for (auto& x : l) x = d(rng);
      while (std::all_of(l.begin(), l.end(), [](int x) { return x == 0; }));
      locals.push_back(l);
    }
    for (std::size_t f = 0; f < spec.total(); ++f) {
      MultiIndex idx = spec.decode(f);
      long a = 1;
      for (std::size_t p = 0; p < locals.size(); ++p) a *= locals[p][static_cast<std::size_t>(idx[p])];
      if (a) s.add(idx, GaussianRational(a));
    }
    return s;
  }
  while (s.is_zero())
    for (std::size_t f = 0; f < spec.total(); ++f)
      if (int a = d(rng)) s.add(spec.decode(f), GaussianRational(static_cast<long>(a)));
  return s;
}


struct CesAgreement {
  int holds = 0;
  int fails = 0;
  std::vector<std::string> disagreements;  // serialized sets
};

/// certify_ces against the float oracle; a product state is reported iff the
/// squared distance drops below 1e-10.
inline void compare_ces(const StateSet& set, CesAgreement& out) {
  Certificate c = certify_ces(set, fully_product(set.spec));
  const bool oracle_product = oracle_min_distance2(set) < 1e-10;
  if (c.holds() == oracle_product) out.disagreements.push_back(serialize_state_set(set));
  (c.holds() ? out.holds : out.fails)++;
}

inline CesAgreement ces_corpus_2x2() {
  PartySpec two({2, 2});
  auto states = all_small_states(two);
  CesAgreement out;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) compare_ces(set_of(two, {states[i], states[j]}), out);
  return out;
}

inline int entangled_lines_2x2() {
  int n = 0;
  for (const auto& s : all_small_states(PartySpec({2, 2}))) {
    ExactMatrix m = reshape_bipartite(s, Bipartition{{0}, {1}});
    if (!(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero()) ++n;
  }
  return n / 2;
}

/// Random pairs made orthogonal exactly; counts violations of the adjoint
/// and trace laws.
inline int adjoint_law_violations(int pairs, unsigned seed) {
  std::mt19937 rng(seed);
  PartySpec q3({2, 2, 2});
  int bad = 0;
  for (int t = 0; t < pairs; ++t) {
    PureState u = random_state(q3, rng), v = random_state(q3, rng);
    GaussianRational f = inner_product(u, v) / inner_product(u, u);
    for (const auto& [idx, a] : u.terms()) v.add(idx, -(f * a));
    if (!inner_product(u, v).is_zero()) {
      ++bad;
      continue;
    }
    StateSet s = set_of(q3, {u, v});
    for (const auto& g : joint_groups(q3)) {
      ExactMatrix p01 = reduced_feature(s, 0, 1, g), p10 = reduced_feature(s, 1, 0, g);
      GaussianRational tr;
      for (std::size_t k = 0; k < p01.rows(); ++k) tr += p01(k, k);
      if (!(adjoint(p01) == p10) || !tr.is_zero()) ++bad;
    }
  }
  return bad;
}

/// Exact rank against the SVD numerical rank at 1e-9 on random products of
/// Gaussian-rational factors.
inline int rank_disagreements(int matrices, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> shape(2, 6);
  int bad = 0;
  for (int t = 0; t < matrices; ++t) {
    const std::size_t rows = static_cast<std::size_t>(shape(rng)), cols = static_cast<std::size_t>(shape(rng));
    const std::size_t inner = std::uniform_int_distribution<std::size_t>(1, std::min(rows, cols))(rng);
    ExactMatrix a(rows, inner), b(inner, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < inner; ++c) a(r, c) = random_gr(rng, 4, 3);
    for (std::size_t r = 0; r < inner; ++r)
      for (std::size_t c = 0; c < cols; ++c) b(r, c) = random_gr(rng, 4, 3);
    ExactMatrix m = t % 4 == 0 ? a : a * b;
    Eigen::MatrixXcd f(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) f(r, c) = m(r, c).to_complex();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f);
    const auto& sv = svd.singularValues();
    std::size_t numeric = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) > 1e-9 * std::max(1.0, sv(0))) ++numeric;
    if (exact_rank(m) != numeric) ++bad;
  }
  return bad;
}

inline const std::vector<std::string>& shipped_files() {
  static const std::vector<std::string> files = {"U.json",      "Omega.json",  "S0.json",          "Sz_0.json",
                                                 "Sz_1.json",   "Sz_i.json",   "Sz_1+i.json",      "Sz_-2.json",
                                                 "B_a1_-2_b1_i.json", "B_a1_3_b1_1+i.json"};
  return files;
}

/// Homogeneous, pinned and per-cut ideals of every shipped set; returns the
/// names of those whose basis fails the S-polynomial criterion.
inline std::vector<std::string> nonconfluent_ideals(const std::string& dir) {
  std::vector<std::string> bad;
  for (const auto& file : shipped_files()) {
    StateSet set = load_state_set(dir + "/" + file);
    QuadraticSystem hom = quadratic_system(set);
    const std::size_t n = set.size();
    if (!verify_confluence(buchberger(hom.nonzero(), Ordering::grevlex(n)))) bad.push_back(file + " homogeneous");
    if (!verify_confluence(buchberger(perturb(hom, n - 1).nonzero(), Ordering::grevlex(n))))
      bad.push_back(file + " pinned");
    for (const auto& b : all_bipartitions(set.spec))
      if (!verify_confluence(buchberger(quadratic_system(set, b).nonzero(), Ordering::grevlex(n))))
        bad.push_back(file + " " + bipartition_name(set.spec, b));
  }
  return bad;
}

}  // namespace testing
