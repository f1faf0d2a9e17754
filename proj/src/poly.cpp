#include "entcert/poly.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

#include "entcert/error.hpp"

namespace entcert {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t k, unsigned power) {
  if (k >= kMaxVars) throw Error(ErrorKind::IndexOutOfRange, "too many variables");
  Monomial m;
  m.e[k] = static_cast<std::uint16_t>(power);
  m.deg = power;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t k = 0; k < kMaxVars; ++k)
    if (e[k] > o.e[k]) return false;
  return true;
}

bool Monomial::is_pure_power(std::size_t nvars, std::size_t* which) const {
  if (deg == 0) return false;
  for (std::size_t k = 0; k < nvars; ++k)
    if (e[k] == deg) {
      if (which) *which = k;
      return true;
    }
  return false;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t k = 0; k < kMaxVars; ++k) m.e[k] = static_cast<std::uint16_t>(a.e[k] + b.e[k]);
  m.deg = a.deg + b.deg;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t k = 0; k < kMaxVars; ++k) m.e[k] = static_cast<std::uint16_t>(a.e[k] - b.e[k]);
  m.deg = a.deg - b.deg;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    m.e[k] = std::max(a.e[k], b.e[k]);
    m.deg += m.e[k];
  }
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < kMaxVars; ++k)
    if (a.e[k] && b.e[k]) return false;
  return true;
}

// ---------------------------------------------------------------- Ordering

namespace {

std::vector<int> identity_priority(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

Ordering Ordering::grevlex(std::size_t nvars) { return grevlex(identity_priority(nvars)); }
Ordering Ordering::lex(std::size_t nvars) { return lex(identity_priority(nvars)); }

Ordering Ordering::lex(std::vector<int> priority) {
  Ordering o;
  o.kind_ = Kind::Lex;
  o.priority_ = std::move(priority);
  return o;
}

Ordering Ordering::grevlex(std::vector<int> priority) {
  Ordering o;
  o.kind_ = Kind::Grevlex;
  o.priority_ = std::move(priority);
  return o;
}

Ordering Ordering::block(std::vector<int> priority, std::size_t block) {
  Ordering o;
  o.kind_ = Kind::Block;
  o.priority_ = std::move(priority);
  o.block_ = block;
  return o;
}

int Ordering::grevlex_on(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
  unsigned da = 0, db = 0;
  for (std::size_t k = from; k < to; ++k) {
    da += a.e[priority_[k]];
    db += b.e[priority_[k]];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = to; k-- > from;) {
    int v = priority_[k];
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

int Ordering::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (int v : priority_)
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
      return 0;
    case Kind::Grevlex:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      return grevlex_on(a, b, 0, priority_.size());
    case Kind::Block: {
      int c = grevlex_on(a, b, 0, block_);
      return c != 0 ? c : grevlex_on(a, b, block_, priority_.size());
    }
  }
  return 0;
}

std::string Ordering::name() const {
  std::string s = kind_ == Kind::Lex ? "lex" : kind_ == Kind::Grevlex ? "grevlex" : "block";
  s += "(";
  for (std::size_t k = 0; k < priority_.size(); ++k) {
    if (k) s += kind_ == Kind::Block && k == block_ ? " | " : " > ";
    s += "x" + std::to_string(priority_[k]);
  }
  return s + ")";
}

Ordering Ordering::parse(std::string_view text) {
  auto open = text.find('('), close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw Error(ErrorKind::ParseError, "bad ordering '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, open);
  std::vector<int> priority;
  std::size_t block = 0;
  bool seen_bar = false;
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::size_t k = 0;
  while (k < body.size()) {
    char ch = body[k];
    if (ch == ' ' || ch == '>') {
      ++k;
    } else if (ch == '|') {
      if (seen_bar) throw Error(ErrorKind::ParseError, "bad ordering '" + std::string(text) + "'");
      seen_bar = true;
      block = priority.size();
      ++k;
    } else if (ch == 'x') {
      std::size_t end = ++k;
      while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
      if (end == k) throw Error(ErrorKind::ParseError, "bad ordering '" + std::string(text) + "'");
      priority.push_back(std::stoi(std::string(body.substr(k, end - k))));
      k = end;
    } else {
      throw Error(ErrorKind::ParseError, "bad ordering '" + std::string(text) + "'");
    }
  }
  if (kind == "lex" && !seen_bar) return lex(priority);
  if (kind == "grevlex" && !seen_bar) return grevlex(priority);
  if (kind == "block" && seen_bar) return Ordering::block(priority, block);
  throw Error(ErrorKind::ParseError, "bad ordering '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::size_t nvars, const GaussianRational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  MultiPoly p(nvars);
  p.add_term(Monomial::var(k), GaussianRational(1));
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg);
  return d;
}

GaussianRational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

std::vector<int> MultiPoly::support() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < nvars_; ++k)
    for (const auto& [m, c] : terms_)
      if (m.e[k]) {
        out.push_back(static_cast<int>(k));
        break;
      }
  return out;
}

void MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Monomial MultiPoly::leading_monomial(const Ordering& ord) const {
  if (terms_.empty()) throw Error(ErrorKind::InvariantViolation, "leading monomial of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return best->first;
}

GaussianRational MultiPoly::leading_coeff(const Ordering& ord) const { return coeff(leading_monomial(ord)); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
  MultiPoly p(nvars_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

MultiPoly MultiPoly::times(const Monomial& mono, const GaussianRational& c) const {
  MultiPoly p(nvars_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m * mono, v * c);
  return p;
}

MultiPoly MultiPoly::substitute(std::size_t k, const GaussianRational& value) const {
  MultiPoly p(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    GaussianRational f = c;
    for (unsigned j = 0; j < m.e[k]; ++j) f *= value;
    r.deg -= r.e[k];
    r.e[k] = 0;
    p.add_term(r, f);
  }
  return p;
}

MultiPoly MultiPoly::substitute(std::size_t k, const MultiPoly& value) const {
  MultiPoly p(std::max(nvars_, value.nvars_));
  std::vector<MultiPoly> powers{MultiPoly::constant(p.nvars_, GaussianRational(1))};
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m.e[k]) powers.push_back(powers.back() * value);
    Monomial r = m;
    r.deg -= r.e[k];
    r.e[k] = 0;
    p += powers[m.e[k]].times(r, c);
  }
  return p;
}

MultiPoly MultiPoly::extended(std::size_t nvars) const {
  MultiPoly p = *this;
  p.nvars_ = std::max(nvars_, nvars);
  return p;
}

ComplexFloat MultiPoly::evaluate(const std::vector<ComplexFloat>& x) const {
  ComplexFloat acc{};
  for (const auto& [m, c] : terms_) {
    ComplexFloat t = c.to_complex();
    for (std::size_t k = 0; k < nvars_; ++k)
      for (unsigned j = 0; j < m.e[k]; ++j) t *= x[k];
    acc += t;
  }
  return acc;
}

GaussianRational MultiPoly::evaluate(const std::vector<GaussianRational>& x) const {
  GaussianRational acc;
  for (const auto& [m, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t k = 0; k < nvars_; ++k)
      for (unsigned j = 0; j < m.e[k]; ++j) t *= x[k];
    acc += t;
  }
  return acc;
}

double MultiPoly::coeff_norm1() const {
  double s = 0.0;
  for (const auto& [m, c] : terms_) s += std::abs(c.to_complex());
  return s;
}

MultiPoly MultiPoly::monic(const Ordering& ord) const {
  if (is_zero()) return *this;
  return scaled(leading_coeff(ord).inverse());
}

MultiPoly MultiPoly::primitive(const Ordering& ord) const {
  if (is_zero()) return *this;
  for (const auto& [m, c] : terms_)
    if (!c.is_real()) return monic(ord);
  mpz_class den = 1, num = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class d = c.re().den(), n = c.re().num();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  }
  Rational s(den, num);
  if (leading_coeff(ord).re().sign() < 0) s = -s;
  return scaled(GaussianRational(s));
}

std::string monomial_str(const Monomial& m, std::size_t nvars, const std::vector<std::string>* names) {
  std::string s;
  for (std::size_t k = 0; k < nvars; ++k) {
    if (!m.e[k]) continue;
    if (!s.empty()) s += '*';
    s += names ? (*names)[k] : "x" + std::to_string(k);
    if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
  }
  return s;
}

std::string MultiPoly::str() const {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nvars_; ++k) names.push_back("x" + std::to_string(k));
  return str(names);
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // std::map is ascending lex with x0 most significant; print descending.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono = monomial_str(m, nvars_, &names);
    bool negative = c.is_real() && c.re().sign() < 0;
    GaussianRational mag = negative ? -c : c;
    std::string coeff;
    if (mag.is_real()) {
      coeff = mag.str();
    } else if (mag.re().is_zero()) {
      coeff = mag.im() == Rational(1) ? "i" : mag.im() == Rational(-1) ? "-i" : mag.im().str() + "i";
      if (!mono.empty()) coeff = "(" + coeff + ")";
    } else {
      coeff = "(" + mag.str() + ")";
    }
    std::string term;
    if (mono.empty()) term = coeff;
    else if (mag.is_one()) term = mono;
    else term = coeff + "*" + mono;
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct PolyParser {
  std::string_view s;
  std::size_t pos = 0;
  std::size_t nvars;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos) + " in '" + std::string(s) + "'");
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string digits() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::string(s.substr(start, pos - start));
  }

  // factor := number | "i" | "(" gaussian ")" | "x" digits ["^" digits]
  void factor(Monomial& m, GaussianRational& c) {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char ch = s[pos];
    if (ch == 'x') {
      ++pos;
      std::string d = digits();
      if (d.empty()) fail("variable index expected");
      std::size_t k = std::stoul(d);
      if (k >= nvars) fail("variable x" + d + " out of range");
      unsigned p = 1;
      if (eat('^')) {
        std::string e = digits();
        if (e.empty()) fail("exponent expected");
        p = static_cast<unsigned>(std::stoul(e));
      }
      m = m * Monomial::var(k, p);
    } else if (ch == '(') {
      ++pos;
      std::size_t close = s.find(')', pos);
      if (close == std::string_view::npos) fail("missing ')'");
      c *= GaussianRational::parse(s.substr(pos, close - pos));
      pos = close + 1;
    } else if (ch == 'i') {
      ++pos;
      c *= GaussianRational::i();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string n = digits();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string d = digits();
        if (d.empty()) fail("denominator expected");
        n += "/" + d;
      }
      GaussianRational v = GaussianRational::parse(n);
      if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        v *= GaussianRational::i();
      }
      c *= v;
    } else {
      fail(std::string("unexpected '") + ch + "'");
    }
  }

  MultiPoly run() {
    MultiPoly p(nvars);
    skip();
    if (pos == s.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos == s.size()) break;
      GaussianRational c(1);
      if (eat('-')) c = GaussianRational(-1);
      else if (!eat('+') && !first) fail("'+' or '-' expected");
      first = false;
      Monomial m;
      factor(m, c);
      while (eat('*')) factor(m, c);
      p.add_term(m, c);
    }
    return p;
  }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::size_t nvars) {
  PolyParser parser{text, 0, nvars};
  return parser.run();
}

}  // namespace entcert
