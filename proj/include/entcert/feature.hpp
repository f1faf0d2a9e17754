#pragma once

#include <cstddef>
#include <vector>

#include "entcert/certificate.hpp"
#include "entcert/matrix.hpp"
#include "entcert/state.hpp"

namespace entcert {

/// Pi_ij over `group.left`: entry (p, q) = sum_r psi_i[p, r] conj(psi_j[q, r]).
ExactMatrix reduced_feature(const StateSet& set, std::size_t i, std::size_t j, const Bipartition& group);

/// Column-stacked vec of each input, one column per matrix.
ExactMatrix vectorization_map(const std::vector<ExactMatrix>& mats);

/// {Pi_ij, Pi_ij^dagger} for all i < j, in pair order.
std::vector<ExactMatrix> feature_family(const StateSet& set, const Bipartition& group);

/// Holds iff the feature family spans a space of dimension d_G^2 - 1, so
/// the only OPM on the group is trivial. Evidence: rank and bound.
Certificate no_go_first_move(const StateSet& set, const Bipartition& group);

/// Every hermitian E on the group with <psi_i| E (x) I |psi_j> = 0 for all
/// i != j, minus multiples of the identity: a basis of traceless solutions.
std::vector<ExactMatrix> opm_candidates(const StateSet& set, const Bipartition& group);

/// Runs the rank test over every (n-1)-party group. A failing group is
/// searched for an eliminating OPM witness; the verdict is Fails only when
/// one verifies, otherwise Inconclusive.
Certificate certify_strong_nonlocality(const StateSet& set);

}  // namespace entcert
