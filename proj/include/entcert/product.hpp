#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entcert/matrix.hpp"
#include "entcert/poly.hpp"
#include "entcert/state.hpp"

namespace entcert {

/// (Lambda_{kp|lr})_{ij} = a^(i)_{kl} a^(j)_{pr} - a^(i)_{kr} a^(j)_{pl}.
struct ProductFormingMatrix {
  Bipartition bipartition;
  std::size_t k = 0, p = 0;  // rows of the left factor, k < p
  std::size_t l = 0, r = 0;  // columns of the right factor, l < r
  ExactMatrix entries;
};

/// Row pairs outer, column pairs inner, both ascending.
std::vector<ProductFormingMatrix> product_forming(const StateSet& set, const Bipartition& b);

/// X^t P X with coefficient P[i][j] + P[j][i] on x_i x_j.
MultiPoly quadratic_form(const ExactMatrix& P);

struct QuadraticSystem {
  std::size_t nvars = 0;
  std::vector<std::string> scope;  // bipartition names, in order
  std::vector<MultiPoly> polys;    // one per product-forming matrix
  std::optional<std::size_t> pinned;

  std::vector<MultiPoly> nonzero() const;
  /// One polynomial per line, zero polynomials included.
  std::string text() const;
};

QuadraticSystem quadratic_system(const StateSet& set, const Bipartition& b);
/// Union over all_bipartitions(set.spec), concatenated in that order.
QuadraticSystem quadratic_system(const StateSet& set);

/// x_k := 1 in every polynomial.
QuadraticSystem perturb(const QuadraticSystem& sys, std::size_t k);

/// core followed by complement, all bipartitions, x_pinned := 1. Throws
/// SpanDeficient unless the combined states span the whole space.
QuadraticSystem extended_stability_system(const StateSet& core, const StateSet& complement, std::size_t pinned);

}  // namespace entcert
