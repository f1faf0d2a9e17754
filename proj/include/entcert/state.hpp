#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entcert/exact.hpp"
#include "entcert/matrix.hpp"

namespace entcert {

using MultiIndex = std::vector<int>;

/// Local dimensions of the parties, A first.
struct PartySpec {
  std::vector<int> dims;
  std::vector<std::string> labels;

  PartySpec() = default;
  explicit PartySpec(std::vector<int> dims);

  std::size_t parties() const { return dims.size(); }
  std::size_t total() const;
  std::size_t encode(const MultiIndex& idx) const;
  MultiIndex decode(std::size_t flat) const;
  bool contains(const MultiIndex& idx) const;

  friend bool operator==(const PartySpec& a, const PartySpec& b) { return a.dims == b.dims; }
};

/// Unnormalised pure state with sparse amplitudes.
class PureState {
 public:
  PureState() = default;
  explicit PureState(PartySpec spec, std::string label = {});

  static PureState from_dense(const PartySpec& spec, const std::vector<GaussianRational>& amps,
                              std::string label = {});

  const PartySpec& spec() const { return spec_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Adds `amp` to the amplitude at `idx`; zero results are erased.
  void add(const MultiIndex& idx, const GaussianRational& amp);
  GaussianRational amp(const MultiIndex& idx) const;
  const std::map<MultiIndex, GaussianRational>& terms() const { return amps_; }
  std::vector<GaussianRational> dense() const;

  bool is_zero() const { return amps_.empty(); }
  PureState scaled(const GaussianRational& s) const;

 private:
  PartySpec spec_;
  std::string label_;
  std::map<MultiIndex, GaussianRational> amps_;
};

struct StateSet {
  PartySpec spec;
  std::string name;
  std::vector<PureState> states;
  bool orthogonal = false;  // asserted by the producer, verified on load

  std::size_t size() const { return states.size(); }
  StateSet subset(const std::vector<std::size_t>& keep) const;
  StateSet without(std::size_t k) const;
};

/// Split of the parties into two nonempty groups. Party order inside each
/// group fixes the digit order used by reshape_bipartite.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  Bipartition swapped() const { return {right, left}; }
  friend bool operator==(const Bipartition& a, const Bipartition& b) {
    return a.left == b.left && a.right == b.right;
  }
};

void validate(const Bipartition& b, const PartySpec& spec);
std::size_t group_dim(const PartySpec& spec, const std::vector<int>& group);
std::string group_name(const PartySpec& spec, const std::vector<int>& group);
std::string bipartition_name(const PartySpec& spec, const Bipartition& b);

/// One-party cuts k | k+1 k+2 ... (cyclic); for three parties A|BC, B|CA, C|AB.
/// With more than three parties every other cut is appended as well.
std::vector<Bipartition> all_bipartitions(const PartySpec& spec);
/// The (n-1)-party groups, each on the left: AB|C, BC|A, CA|B for three parties.
std::vector<Bipartition> joint_groups(const PartySpec& spec);
/// Parses "A|BC" style names against the labels of `spec`.
Bipartition parse_bipartition(const PartySpec& spec, std::string_view text);

/// "|000> - 2|010> + (1+1i)|011>", digits in party order.
std::string ket_string(const PureState& s);
GaussianRational inner_product(const PureState& a, const PureState& b);
ExactMatrix reshape_bipartite(const PureState& s, const Bipartition& b);

/// First (i, j) with i < j and nonzero overlap, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_overlap(const StateSet& set);
bool is_pairwise_orthogonal(const StateSet& set);

/// Column i holds the dense amplitudes of state i.
ExactMatrix coefficient_matrix(const StateSet& set);
/// Orthonormal-free basis of the orthogonal complement of span(set).
StateSet orthogonal_complement(const StateSet& set);

struct FamilyParams {
  std::optional<GaussianRational> a1;
  std::optional<GaussianRational> b1;
  std::optional<GaussianRational> z;
};

/// Named families: basis-B, set-S, set-Sz, set-S0, ubb-U, omega, tau, kappa
/// (case-insensitive; "basis", "ubb", "u", "s0", "sz" accepted as aliases).
StateSet make_family(std::string_view family, const FamilyParams& params = {});
std::string canonical_family(std::string_view family);

}  // namespace entcert
