#pragma once

#include <array>
#include <optional>
#include <vector>

#include "entcert/certificate.hpp"
#include "entcert/matrix.hpp"
#include "entcert/state.hpp"

namespace entcert {

/// Two-outcome orthogonality-preserving measurement on a party group,
/// M0 = (nu I + E)/(mu + nu), M1 = (mu I - E)/(mu + nu) with mu the largest
/// and -nu the smallest eigenvalue of E.
struct OpmWitness {
  Bipartition group;
  ExactMatrix E;
  double mu = 0.0;
  double nu = 0.0;
  FloatMatrix M0;
  FloatMatrix M1;
  /// Present when mu and nu are rational (verified exactly).
  std::optional<ExactMatrix> M0_exact;
  std::optional<ExactMatrix> M1_exact;
  std::array<std::vector<std::size_t>, 2> eliminated;
  bool nontrivial = false;

  bool eliminates_each_outcome() const { return !eliminated[0].empty() && !eliminated[1].empty(); }

  Json to_json(const StateSet& set) const;
};

/// <a| E (x) I |b> where E acts on group.left.
GaussianRational group_matrix_element(const PureState& a, const PureState& b, const Bipartition& group,
                                      const ExactMatrix& E);

/// Eigenvalues of a hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ExactMatrix& m);

/// The operator on BC used for real z in the S_z family.
ExactMatrix real_z_operator(const GaussianRational& z);
/// The BC bipartition (B, C on the left, A on the right).
Bipartition bc_group();

/// Verifies E exactly and builds the witness. Throws TrivialWitness,
/// OrthogonalityPreservationViolated, NonEliminatingWitness (neither
/// outcome eliminates a state) or PreconditionFailed (E not hermitian or
/// of the wrong size).
OpmWitness build_opm_witness(const StateSet& set, const Bipartition& group, const ExactMatrix& E);

}  // namespace entcert
