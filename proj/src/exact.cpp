#include "entcert/exact.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <ostream>

#include "entcert/error.hpp"

namespace entcert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParamConstraintViolated: return "ParamConstraintViolated";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotBiseparable: return "NotBiseparable";
    case ErrorKind::SpanDeficient: return "SpanDeficient";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotShapePosition: return "NotShapePosition";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::OrthogonalityPreservationViolated: return "OrthogonalityPreservationViolated";
    case ErrorKind::TrivialWitness: return "TrivialWitness";
    case ErrorKind::NonEliminatingWitness: return "NonEliminatingWitness";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

double Rational::to_double() const {
  // mpq_get_d truncates, so round to nearest through MPFR.
  mpfr_t f;
  mpfr_init2(f, 53);
  mpfr_set_q(f, q_.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(f, MPFR_RNDN);
  mpfr_clear(f);
  return d;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const { return q_.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::ParseError, "malformed number '" + std::string(text) + "'");
}

// Unsigned "int" or "int/int".
Rational parse_unsigned(std::string_view s, std::string_view whole) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(s)) bad_number(whole);
    return Rational(mpz_class(std::string(s)));
  }
  auto n = s.substr(0, slash);
  auto d = s.substr(slash + 1);
  if (!all_digits(n) || !all_digits(d)) bad_number(whole);
  mpz_class den(std::string{d});
  if (sgn(den) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(whole) + "'");
  return Rational(mpz_class(std::string{n}), den);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational r = parse_unsigned(s, text);
  return neg ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// -------------------------------------------------------- GaussianRational

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  Rational n = norm2();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string out = re_.str();
  if (im_.sign() > 0) out += '+';
  out += im_.str();
  out += 'i';
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) bad_number(text);
  for (char c : text)
    if (std::isspace(static_cast<unsigned char>(c))) bad_number(text);
  if (text.back() != 'i') return {Rational::parse(text), Rational(0)};

  std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);

  Rational re = real_part.empty() ? Rational(0) : Rational::parse(real_part);
  Rational im;
  if (imag_part.empty() || imag_part == "+") {
    im = Rational(1);
  } else if (imag_part == "-") {
    im = Rational(-1);
  } else {
    im = Rational::parse(imag_part);
  }
  return {re, im};
}

GaussianRational conj(const GaussianRational& a) { return a.conj(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

// ---------------------------------------------------------------- GaussInt

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.norm();
  if (sgn(n) == 0) throw Error(ErrorKind::DivisionByZero, "Gaussian integer division by zero");
  if (sgn(b.im) == 0) {
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  GaussInt p = a * b.conj();
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), p.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), p.im.get_mpz_t(), n.get_mpz_t());
  return q;
}

namespace {

// Nearest-integer division of a by the positive integer n.
mpz_class round_div(const mpz_class& a, const mpz_class& n) {
  mpz_class twice = 2 * a + n;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * n).get_mpz_t());
  return q;
}

GaussInt normalise_unit(GaussInt g) {
  // Rotate by powers of i until re > 0 and im >= 0.
  for (int k = 0; k < 4; ++k) {
    if (sgn(g.re) > 0 && sgn(g.im) >= 0) return g;
    g = GaussInt{-g.im, g.re};
  }
  return g;
}

}  // namespace

GaussInt gcd(GaussInt a, GaussInt b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    return {g, 0};
  }
  while (!b.is_zero()) {
    mpz_class n = b.norm();
    GaussInt p = a * b.conj();
    GaussInt q{round_div(p.re, n), round_div(p.im, n)};
    GaussInt r = a - q * b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return normalise_unit(std::move(a));
}

mpz_class integer_content(const GaussInt& a) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.re.get_mpz_t(), a.im.get_mpz_t());
  return g;
}

mpz_class denominator_lcm(const GaussianRational& a) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.re().raw().get_den_mpz_t(), a.im().raw().get_den_mpz_t());
  return l;
}

Rational rational_reconstruct(double value, long max_den) {
  // Continued-fraction convergents of value.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = value;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(x);
    if (std::abs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0;
    long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2;
    k0 = k1; k1 = k2;
    double frac = x - a;
    if (std::abs(frac) < 1e-12) break;
    x = 1.0 / frac;
  }
  return Rational(h1, k1);
}

}  // namespace entcert
