#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entcert/poly.hpp"

namespace entcert {

struct GroebnerBasis {
  std::size_t nvars = 0;
  Ordering ordering;
  /// Reduced: monic, sorted by leading monomial (ascending).
  std::vector<MultiPoly> gens;

  bool contains_one() const;
  /// Normal form by plain division over Q(i) (independent of the
  /// fraction-free code used during construction).
  MultiPoly reduce(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return reduce(p).is_zero(); }
  /// Every variable in `active` has a pure power among the leading monomials.
  bool is_zero_dimensional(const std::vector<int>& active) const;
  std::vector<std::string> lines() const;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis = 0;
};

/// Reduced Groebner basis. Pairs are chosen by the normal strategy and
/// pruned with the Gebauer-Moeller criteria; stops early with {1} once a
/// nonzero constant appears.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const Ordering& ord, BuchbergerStats* stats = nullptr);

bool contains_one(const GroebnerBasis& gb);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const Ordering& ord);
/// Plain multivariate division remainder.
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors, const Ordering& ord);
/// Buchberger criterion checked directly on every pair; returns the first
/// failing pair in `bad` when not confluent.
bool verify_confluence(const GroebnerBasis& gb, std::pair<std::size_t, std::size_t>* bad = nullptr);

/// Change of ordering for a zero-dimensional reduced basis (FGLM). Throws
/// NotZeroDimensional otherwise.
GroebnerBasis fglm(const GroebnerBasis& gb, const Ordering& target);

/// Variables that occur in at least one polynomial.
std::vector<int> active_variables(const std::vector<MultiPoly>& polys);

struct Elimination {
  GroebnerBasis basis;  // lex, keep last
  int keep = 0;
  MultiPoly generator;  // univariate in keep, coprime integers when real
  bool shape_position = false;
  std::map<int, MultiPoly> back_subst;  // x_j = h_j(keep)
};

/// Grevlex basis first, then FGLM to lex. Throws NotZeroDimensional. When the basis is not in shape position the
/// generator is still returned with shape_position = false.
Elimination eliminate_to_univariate(const std::vector<MultiPoly>& system, int keep);

}  // namespace entcert
