#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "entcert/exact.hpp"

namespace entcert {

constexpr std::size_t kMaxVars = 16;

/// Exponent vector over at most kMaxVars variables.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial var(std::size_t k, unsigned power = 1);

  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& o) const;
  /// Only variables with index < nvars are inspected.
  bool is_pure_power(std::size_t nvars, std::size_t* which = nullptr) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

/// Monomial order given by a variable priority list (most significant
/// first) and a kind. Block orders compare the first `block` variables of
/// the priority list by grevlex, then the rest by grevlex.
class Ordering {
 public:
  enum class Kind { Grevlex, Lex, Block };

  Ordering() = default;
  static Ordering grevlex(std::size_t nvars);
  static Ordering lex(std::size_t nvars);
  static Ordering lex(std::vector<int> priority);
  static Ordering grevlex(std::vector<int> priority);
  static Ordering block(std::vector<int> priority, std::size_t block);

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  Kind kind() const { return kind_; }
  const std::vector<int>& priority() const { return priority_; }
  /// "grevlex(x0 > x1)", "lex(x2 > x0 > x1)", "block(x5 > x6 | x3 > x0)".
  std::string name() const;
  /// Inverse of name().
  static Ordering parse(std::string_view text);

 private:
  int grevlex_on(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const;

  Kind kind_ = Kind::Grevlex;
  std::vector<int> priority_;
  std::size_t block_ = 0;
};

/// Sparse polynomial over Q(i) in variables x0 .. x{nvars-1}.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const GaussianRational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t k);
  /// Parses "c*x0^2*x1 - x2 + 3/4" style text.
  static MultiPoly parse(std::string_view text, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t total_degree() const;
  GaussianRational coeff(const Monomial& m) const;
  /// Variables appearing with nonzero exponent.
  std::vector<int> support() const;

  void add_term(const Monomial& m, const GaussianRational& c);

  Monomial leading_monomial(const Ordering& ord) const;
  GaussianRational leading_coeff(const Ordering& ord) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const GaussianRational& c) const;
  MultiPoly times(const Monomial& m, const GaussianRational& c) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Replace x_k by a constant.
  MultiPoly substitute(std::size_t k, const GaussianRational& value) const;
  /// Replace x_k by a polynomial.
  MultiPoly substitute(std::size_t k, const MultiPoly& value) const;
  /// Same terms over a larger variable set.
  MultiPoly extended(std::size_t nvars) const;

  ComplexFloat evaluate(const std::vector<ComplexFloat>& x) const;
  GaussianRational evaluate(const std::vector<GaussianRational>& x) const;
  /// Sum of coefficient magnitudes (float).
  double coeff_norm1() const;

  /// Scaled to have leading coefficient 1 under `ord`.
  MultiPoly monic(const Ordering& ord) const;
  /// If every coefficient is real: scaled to coprime integers with a
  /// positive leading coefficient under `ord`. Otherwise monic.
  MultiPoly primitive(const Ordering& ord) const;

  /// Terms printed in lex order x0 > x1 > ... ; "0" for the zero polynomial.
  std::string str() const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

std::string monomial_str(const Monomial& m, std::size_t nvars, const std::vector<std::string>* names = nullptr);

}  // namespace entcert
