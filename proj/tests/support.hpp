#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "entcert/exact.hpp"
#include "entcert/matrix.hpp"
#include "entcert/poly.hpp"
#include "entcert/state.hpp"

namespace testing {

using namespace entcert;

inline GaussianRational gr(const char* s) { return GaussianRational::parse(s); }

inline StateSet family(const std::string& name) { return make_family(name); }

inline StateSet sz(const char* z) {
  FamilyParams p;
  p.z = GaussianRational::parse(z);
  return make_family("set-Sz", p);
}

inline PureState ket(const PartySpec& spec, std::vector<std::pair<MultiIndex, GaussianRational>> terms,
                     std::string label = {}) {
  PureState s(spec, std::move(label));
  for (auto& [idx, a] : terms) s.add(idx, a);
  return s;
}

inline StateSet set_of(const PartySpec& spec, std::vector<PureState> states, std::string name = "test") {
  StateSet s;
  s.spec = spec;
  s.name = std::move(name);
  s.states = std::move(states);
  return s;
}

inline ExactMatrix exact(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = GaussianRational(rows[r][c]);
  return m;
}

/// Small Gaussian rational with numerator and denominator drawn from the rng.
inline GaussianRational random_gr(std::mt19937& rng, int span = 5, int den = 3) {
  std::uniform_int_distribution<int> num(-span, span), d(1, den);
  return {Rational(num(rng), d(rng)), Rational(num(rng), d(rng))};
}

inline std::vector<MultiPoly> parse_all(const std::vector<std::string>& lines, std::size_t nvars) {
  std::vector<MultiPoly> out;
  for (const auto& l : lines) out.push_back(MultiPoly::parse(l, nvars));
  return out;
}

inline double max_abs(const std::vector<std::complex<double>>& v) {
  double m = 0;
  for (auto z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace testing
