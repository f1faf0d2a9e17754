#include "entcert/matrix.hpp"

#include <utility>

namespace entcert {

ExactMatrix adjoint(const ExactMatrix& m) {
  ExactMatrix a(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a(c, r) = m(r, c).conj();
  return a;
}

bool is_zero(const ExactMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

bool is_hermitian(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (m(r, c) != m(c, r).conj()) return false;
  return true;
}

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix f(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) f(r, c) = m(r, c).to_complex();
  return f;
}

std::size_t exact_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row.
  std::vector<std::vector<GaussInt>> a(rows, std::vector<GaussInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_class d = denominator_lcm(m(r, c));
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = m(r, c);
      a[r][c].re = v.re().num() * (l / v.re().den());
      a[r][c].im = v.im().num() * (l / v.im().den());
    }
  }

  GaussInt prev{1, 0};
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const GaussInt p = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const GaussInt f = a[r][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = exact_div(p * a[r][k] - f * a[rank][k], prev);
      }
      a[r][c] = GaussInt{0, 0};
    }
    prev = p;
    ++rank;
  }
  return rank;
}

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots) {
  ExactMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(piv, k), a(rank, k));
    const GaussianRational inv = a(rank, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(rank, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, c).is_zero()) continue;
      const GaussianRational f = a(r, c);
      for (std::size_t k = c; k < cols; ++k) a(r, k) -= f * a(rank, k);
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return a;
}

ExactMatrix null_space(const ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  ExactMatrix r = rref(m, &pivots);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);

  ExactMatrix basis(cols, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = GaussianRational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) basis(pivots[k], f) = -r(k, free[f]);
  }
  return basis;
}

}  // namespace entcert
