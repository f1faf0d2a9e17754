#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <functional>

#include "entcert/error.hpp"
#include "entcert/opm.hpp"
#include "support.hpp"

using namespace entcert;
using namespace testing;

namespace {

double min_eigenvalue(const FloatMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) h(r, c) = m(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return es.eigenvalues().minCoeff();
}

// <a| E (x) I |b> in floats, E on `group.left`.
std::complex<double> float_element(const PureState& a, const PureState& b, const Bipartition& g, const FloatMatrix& E) {
  FloatMatrix ra = to_float(reshape_bipartite(a, g)), rb = to_float(reshape_bipartite(b, g));
  std::complex<double> s = 0;
  for (std::size_t p = 0; p < ra.rows(); ++p)
    for (std::size_t q = 0; q < rb.rows(); ++q)
      for (std::size_t r = 0; r < ra.cols(); ++r) s += std::conj(ra(p, r)) * E(p, q) * rb(q, r);
  return s;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvariantViolation;
}

void check_valid(const StateSet& set, const OpmWitness& w) {
  const std::size_t d = w.M0.rows();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      CHECK(std::abs(w.M0(r, c) + w.M1(r, c) - (r == c ? 1.0 : 0.0)) <= 1e-12);
  CHECK(min_eigenvalue(w.M0) >= -1e-10);
  CHECK(min_eigenvalue(w.M1) >= -1e-10);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      CHECK(group_matrix_element(set.states[i], set.states[j], w.group, w.E).is_zero());
      CHECK(std::abs(float_element(set.states[i], set.states[j], w.group, w.M0)) <= 1e-10);
      CHECK(std::abs(float_element(set.states[i], set.states[j], w.group, w.M1)) <= 1e-10);
    }
  CHECK(w.nontrivial);
}

}  // namespace

TEST_CASE("z = 0 witness projectors in quarters") {
  StateSet s = sz("0");
  OpmWitness w = build_opm_witness(s, bc_group(), real_z_operator(0));
  check_valid(s, w);
  REQUIRE(w.M0_exact.has_value());
  REQUIRE(w.M1_exact.has_value());
  ExactMatrix m0 = exact({{3, 1, 1, -1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {-1, 1, 1, 3}});
  ExactMatrix m1 = exact({{1, -1, -1, 1}, {-1, 3, -1, -1}, {-1, -1, 3, -1}, {1, -1, -1, 1}});
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      m0(r, c) /= GaussianRational(4);
      m1(r, c) /= GaussianRational(4);
    }
  CHECK(*w.M0_exact == m0);
  CHECK(*w.M1_exact == m1);
  CHECK(w.eliminated[0] == std::vector<std::size_t>{0, 2});
  CHECK(w.eliminated[1] == std::vector<std::size_t>{4});
  CHECK(w.eliminates_each_outcome());
  Json j = w.to_json(s);
  CHECK(j["eliminated"]["0"] == Json::array({"phi00-", "psi10-"}));
  CHECK(j["eliminated"]["1"] == Json::array({"tau"}));
  CHECK(j["M0"][0][0] == "3/4");
}

TEST_CASE("eigenvalues of the z = 0 operator") {
  std::vector<double> ev = hermitian_eigenvalues(real_z_operator(0));
  REQUIRE(ev.size() == 4);
  CHECK(ev.front() == doctest::Approx(-6.0).epsilon(1e-12));
  CHECK(std::count_if(ev.begin(), ev.end(), [](double x) { return std::abs(x - 2.0) < 1e-9; }) >= 2);
}

TEST_CASE("real z witnesses are valid") {
  for (long z : {0L, 1L, -2L, 3L}) {
    CAPTURE(z);
    StateSet s = sz(std::to_string(z).c_str());
    OpmWitness w = build_opm_witness(s, bc_group(), real_z_operator(z));
    check_valid(s, w);
    CHECK(w.eliminated[0].size() + w.eliminated[1].size() > 0);
    if (z != 3) CHECK(w.eliminates_each_outcome());
  }
}

TEST_CASE("invalid operators are rejected") {
  StateSet s = sz("0");
  CHECK(kind_of([&] { build_opm_witness(s, bc_group(), ExactMatrix(4, 4)); }) == ErrorKind::TrivialWitness);
  ExactMatrix id = ExactMatrix::identity(4);
  id(0, 0) = 3;
  id(1, 1) = 3;
  id(2, 2) = 3;
  id(3, 3) = 3;
  CHECK(kind_of([&] { build_opm_witness(s, bc_group(), id); }) == ErrorKind::TrivialWitness);
  ExactMatrix proj(4, 4);
  proj(0, 0) = 1;
  CHECK(kind_of([&] { build_opm_witness(s, bc_group(), proj); }) == ErrorKind::OrthogonalityPreservationViolated);
  ExactMatrix skew(4, 4);
  skew(0, 1) = 1;
  CHECK(kind_of([&] { build_opm_witness(s, bc_group(), skew); }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([&] { build_opm_witness(s, bc_group(), ExactMatrix::identity(2)); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("the z = 0 operator does not preserve orthogonality for complex z") {
  StateSet s = sz("i");
  CHECK(kind_of([&] { build_opm_witness(s, bc_group(), real_z_operator(0)); }) ==
        ErrorKind::OrthogonalityPreservationViolated);
}
