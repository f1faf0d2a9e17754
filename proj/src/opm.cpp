#include "entcert/opm.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "entcert/error.hpp"

namespace entcert {

namespace {

using GR = GaussianRational;

bool is_scalar_identity(const ExactMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r != c && !m(r, c).is_zero()) return false;
      if (r == c && m(r, c) != m(0, 0)) return false;
    }
  return true;
}

bool is_scalar_identity(const FloatMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      ComplexFloat want = r == c ? m(0, 0) : ComplexFloat{};
      if (std::abs(m(r, c) - want) > tol) return false;
    }
  return true;
}

// Exact eigenvalue check: lambda is an eigenvalue iff E - lambda I is singular.
std::optional<Rational> exact_eigenvalue(const ExactMatrix& E, double approx) {
  Rational r = rational_reconstruct(approx, 1000000);
  if (std::abs(r.to_double() - approx) > 1e-9 * (1.0 + std::abs(approx))) return std::nullopt;
  ExactMatrix shifted = E;
  for (std::size_t k = 0; k < E.rows(); ++k) shifted(k, k) -= GR(r);
  if (exact_rank(shifted) == E.rows()) return std::nullopt;
  return r;
}

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

Json matrix_json(const FloatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

GaussianRational group_matrix_element(const PureState& a, const PureState& b, const Bipartition& group,
                                      const ExactMatrix& E) {
  ExactMatrix A = reshape_bipartite(a, group);
  ExactMatrix B = reshape_bipartite(b, group);
  if (E.rows() != A.rows() || E.cols() != A.rows())
    throw Error(ErrorKind::PreconditionFailed, "operator size does not match the group dimension");
  GR acc;
  for (std::size_t r = 0; r < A.cols(); ++r)
    for (std::size_t p = 0; p < A.rows(); ++p) {
      if (A(p, r).is_zero()) continue;
      GR row;
      for (std::size_t q = 0; q < A.rows(); ++q)
        if (!E(p, q).is_zero() && !B(q, r).is_zero()) row += E(p, q) * B(q, r);
      acc += A(p, r).conj() * row;
    }
  return acc;
}

std::vector<double> hermitian_eigenvalues(const ExactMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) h(r, c) = m(r, c).to_complex();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return out;
}

ExactMatrix real_z_operator(const GaussianRational& z) {
  const GR z2 = z * z;
  const GR z3 = z2 * z;
  auto p = [&](long c3, long c2, long c1, long c0) { return GR(c3) * z3 + GR(c2) * z2 + GR(c1) * z + GR(c0); };
  ExactMatrix E(4, 4);
  E(0, 0) = p(0, 4, -4, 0);
  E(0, 1) = p(0, -1, 2, 2);
  E(0, 2) = p(-1, 4, -2, 2);
  E(0, 3) = p(-1, 3, 3, -2);
  E(1, 1) = p(-2, 4, 2, -4);
  E(1, 2) = p(0, 2, -1, 2);
  E(1, 3) = p(0, 5, -4, 2);
  E(2, 2) = p(0, 2, 2, -4);
  E(2, 3) = p(-1, 2, 0, 2);
  E(3, 3) = GR(0);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < r; ++c) E(r, c) = E(c, r);
  return E;
}

Bipartition bc_group() { return Bipartition{{1, 2}, {0}}; }

OpmWitness build_opm_witness(const StateSet& set, const Bipartition& group, const ExactMatrix& E) {
  validate(group, set.spec);
  const std::size_t d = group_dim(set.spec, group.left);
  if (E.rows() != d || E.cols() != d) throw Error(ErrorKind::PreconditionFailed, "operator has the wrong size for the group");
  if (!is_hermitian(E)) throw Error(ErrorKind::PreconditionFailed, "operator is not hermitian");
  if (is_scalar_identity(E)) throw Error(ErrorKind::TrivialWitness, "operator is a multiple of the identity");

  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      if (!group_matrix_element(set.states[i], set.states[j], group, E).is_zero())
        throw Error(ErrorKind::OrthogonalityPreservationViolated,
                    "<" + set.states[i].label() + "|E|" + set.states[j].label() + "> != 0");
    }

  OpmWitness w;
  w.group = group;
  w.E = E;
  auto eig = hermitian_eigenvalues(E);
  w.mu = eig.back();
  w.nu = -eig.front();

  auto mu_exact = exact_eigenvalue(E, w.mu);
  auto nu_exact = exact_eigenvalue(E, -w.nu);
  if (mu_exact && nu_exact) {
    Rational mu = *mu_exact;
    Rational nu = -*nu_exact;
    GR scale = GR(mu + nu).inverse();
    ExactMatrix m0(d, d), m1(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        GR id = r == c ? GR(1) : GR(0);
        m0(r, c) = (GR(nu) * id + E(r, c)) * scale;
        m1(r, c) = (GR(mu) * id - E(r, c)) * scale;
      }
    w.M0_exact = m0;
    w.M1_exact = m1;
    w.M0 = to_float(m0);
    w.M1 = to_float(m1);
  } else {
    FloatMatrix Ef = to_float(E);
    w.M0 = FloatMatrix(d, d);
    w.M1 = FloatMatrix(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        double id = r == c ? 1.0 : 0.0;
        w.M0(r, c) = (w.nu * id + Ef(r, c)) / (w.mu + w.nu);
        w.M1(r, c) = (w.mu * id - Ef(r, c)) / (w.mu + w.nu);
      }
  }

  w.nontrivial = !is_scalar_identity(w.M0, 1e-12) && !is_scalar_identity(w.M1, 1e-12);
  if (!w.nontrivial) throw Error(ErrorKind::TrivialWitness, "measurement operators are proportional to identity");

  for (std::size_t k = 0; k < set.size(); ++k) {
    const auto& s = set.states[k];
    if (w.M0_exact) {
      if (group_matrix_element(s, s, group, *w.M0_exact).is_zero()) w.eliminated[0].push_back(k);
      if (group_matrix_element(s, s, group, *w.M1_exact).is_zero()) w.eliminated[1].push_back(k);
    } else {
      double norm = inner_product(s, s).re().to_double();
      GR e = group_matrix_element(s, s, group, E);
      double m0 = (w.nu * norm + e.re().to_double()) / (w.mu + w.nu);
      double m1 = (w.mu * norm - e.re().to_double()) / (w.mu + w.nu);
      if (std::abs(m0) <= 1e-10 * norm) w.eliminated[0].push_back(k);
      if (std::abs(m1) <= 1e-10 * norm) w.eliminated[1].push_back(k);
    }
  }
  // Outcome b eliminates the states with zero weight under M_b.
  if (w.eliminated[0].empty() && w.eliminated[1].empty())
    throw Error(ErrorKind::NonEliminatingWitness, "no outcome of the measurement eliminates a state");
  return w;
}

Json OpmWitness::to_json(const StateSet& set) const {
  Json j;
  j["group"] = group_name(set.spec, group.left);
  j["E"] = matrix_json(E);
  j["mu"] = mu;
  j["nu"] = nu;
  if (M0_exact) {
    j["M0"] = matrix_json(*M0_exact);
    j["M1"] = matrix_json(*M1_exact);
  } else {
    j["M0"] = matrix_json(M0);
    j["M1"] = matrix_json(M1);
  }
  Json elim = Json::object();
  for (int b = 0; b < 2; ++b) {
    Json labels = Json::array();
    for (auto k : eliminated[b]) labels.push_back(set.states[k].label());
    elim[std::to_string(b)] = labels;
  }
  j["eliminated"] = elim;
  j["nontrivial"] = nontrivial;
  j["eliminates_each_outcome"] = eliminates_each_outcome();
  return j;
}

}  // namespace entcert
