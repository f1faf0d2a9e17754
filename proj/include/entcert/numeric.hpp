#pragma once

#include <cstddef>
#include <vector>

#include "entcert/exact.hpp"
#include "entcert/groebner.hpp"
#include "entcert/product.hpp"
#include "entcert/state.hpp"

namespace entcert {

struct UnivariatePoly {
  std::vector<ComplexFloat> c;  // c[0] + c[1] x + ...

  /// Coefficients of a polynomial that involves only variable `var`.
  static UnivariatePoly from_exact(const MultiPoly& p, std::size_t var);
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }
  bool real_coefficients() const;
  ComplexFloat operator()(ComplexFloat x) const;
  ComplexFloat derivative(ComplexFloat x) const;
  /// sum |c_i| |x|^i, the natural scale for |p(x)|.
  double scale(ComplexFloat x) const;
};

/// Aberth-Ehrlich iteration started on a circle of Cauchy-bound radius.
/// Real roots come first (ascending), then conjugate pairs ordered by real
/// part with the positive imaginary member first. Throws NonConvergence.
std::vector<ComplexFloat> find_roots(const UnivariatePoly& p, double tol = 1e-12);

struct ProductStateSolution {
  ComplexFloat root;
  std::vector<ComplexFloat> x;  // every coordinate; the pinned one is 1
  double residual = 0.0;        // max |f(x)| over the system
};

/// Throws NotShapePosition without back-substitution data and
/// ResidualTooLarge when a point misses the system by more than 1e-8.
std::vector<ProductStateSolution> back_substitute(const std::vector<ComplexFloat>& roots, const Elimination& el,
                                                  const QuadraticSystem& sys);

struct GramReport {
  FloatMatrix gram;             // <eta_k|eta_p>
  std::vector<double> weights;  // <s_i|s_i> for the spanning states
  double min_offdiagonal = 0.0;
  bool all_nonzero = true;      // every off-diagonal magnitude > 1e-6
};

/// eta_k = sum_i x_i^(k) |s_i>, inner products taken with the exact state
/// overlaps of `set`.
GramReport gram_nonorthogonality(const std::vector<ProductStateSolution>& solutions, const StateSet& set);

}  // namespace entcert
