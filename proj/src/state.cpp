#include "entcert/state.hpp"

#include <algorithm>
#include <cctype>

#include "entcert/error.hpp"

namespace entcert {

PartySpec::PartySpec(std::vector<int> d) : dims(std::move(d)) {
  if (dims.size() < 2) throw Error(ErrorKind::SpecMismatch, "need at least two parties");
  for (int v : dims)
    if (v < 2) throw Error(ErrorKind::SpecMismatch, "party dimension must be >= 2");
  for (std::size_t k = 0; k < dims.size(); ++k) labels.push_back(std::string(1, static_cast<char>('A' + k)));
}

std::size_t PartySpec::total() const {
  std::size_t t = 1;
  for (int v : dims) t *= static_cast<std::size_t>(v);
  return t;
}

std::size_t PartySpec::encode(const MultiIndex& idx) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

MultiIndex PartySpec::decode(std::size_t flat) const {
  MultiIndex idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
  return idx;
}

bool PartySpec::contains(const MultiIndex& idx) const {
  if (idx.size() != dims.size()) return false;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (idx[k] < 0 || idx[k] >= dims[k]) return false;
  return true;
}

// ----------------------------------------------------------------- states

PureState::PureState(PartySpec spec, std::string label) : spec_(std::move(spec)), label_(std::move(label)) {}

PureState PureState::from_dense(const PartySpec& spec, const std::vector<GaussianRational>& amps,
                                std::string label) {
  if (amps.size() != spec.total()) throw Error(ErrorKind::SpecMismatch, "dense amplitude length mismatch");
  PureState s(spec, std::move(label));
  for (std::size_t k = 0; k < amps.size(); ++k)
    if (!amps[k].is_zero()) s.amps_.emplace(spec.decode(k), amps[k]);
  return s;
}

void PureState::add(const MultiIndex& idx, const GaussianRational& amp) {
  if (!spec_.contains(idx)) throw Error(ErrorKind::IndexOutOfRange, "multi-index outside party dimensions");
  auto it = amps_.find(idx);
  if (it == amps_.end()) {
    if (!amp.is_zero()) amps_.emplace(idx, amp);
    return;
  }
  it->second += amp;
  if (it->second.is_zero()) amps_.erase(it);
}

GaussianRational PureState::amp(const MultiIndex& idx) const {
  auto it = amps_.find(idx);
  return it == amps_.end() ? GaussianRational() : it->second;
}

std::vector<GaussianRational> PureState::dense() const {
  std::vector<GaussianRational> v(spec_.total());
  for (const auto& [idx, a] : amps_) v[spec_.encode(idx)] = a;
  return v;
}

PureState PureState::scaled(const GaussianRational& s) const {
  PureState out(spec_, label_);
  if (s.is_zero()) return out;
  for (const auto& [idx, a] : amps_) out.amps_.emplace(idx, a * s);
  return out;
}

StateSet StateSet::subset(const std::vector<std::size_t>& keep) const {
  StateSet out{spec, name, {}, orthogonal};
  for (auto k : keep) {
    if (k >= states.size()) throw Error(ErrorKind::IndexOutOfRange, "state index out of range");
    out.states.push_back(states[k]);
  }
  return out;
}

StateSet StateSet::without(std::size_t k) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < states.size(); ++i)
    if (i != k) keep.push_back(i);
  return subset(keep);
}

// ----------------------------------------------------------- bipartitions

void validate(const Bipartition& b, const PartySpec& spec) {
  std::vector<int> seen(spec.parties(), 0);
  if (b.left.empty() || b.right.empty()) throw Error(ErrorKind::SpecMismatch, "empty side in bipartition");
  for (int p : b.left) {
    if (p < 0 || p >= static_cast<int>(spec.parties())) throw Error(ErrorKind::IndexOutOfRange, "party out of range");
    ++seen[p];
  }
  for (int p : b.right) {
    if (p < 0 || p >= static_cast<int>(spec.parties())) throw Error(ErrorKind::IndexOutOfRange, "party out of range");
    ++seen[p];
  }
  for (int c : seen)
    if (c != 1) throw Error(ErrorKind::SpecMismatch, "bipartition must cover every party exactly once");
}

std::size_t group_dim(const PartySpec& spec, const std::vector<int>& group) {
  std::size_t d = 1;
  for (int p : group) d *= static_cast<std::size_t>(spec.dims[p]);
  return d;
}

std::string group_name(const PartySpec& spec, const std::vector<int>& group) {
  std::string s;
  for (int p : group) s += spec.labels[p];
  return s;
}

std::string bipartition_name(const PartySpec& spec, const Bipartition& b) {
  return group_name(spec, b.left) + "|" + group_name(spec, b.right);
}

namespace {

std::vector<int> cyclic_after(int first, int count, int n) {
  std::vector<int> g;
  for (int k = 0; k < count; ++k) g.push_back((first + k) % n);
  return g;
}

}  // namespace

std::vector<Bipartition> all_bipartitions(const PartySpec& spec) {
  const int n = static_cast<int>(spec.parties());
  std::vector<Bipartition> out;
  if (n == 2) return {Bipartition{{0}, {1}}};
  for (int k = 0; k < n; ++k) out.push_back({{k}, cyclic_after(k + 1, n - 1, n)});
  // Remaining cuts with at least two parties on each side; ascending order,
  // one representative per unordered pair.
  for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
    int size = __builtin_popcount(mask);
    if (size < 2 || n - size < 2) continue;
    if (2 * size > n || (2 * size == n && !(mask & 1u))) continue;
    Bipartition b;
    for (int p = 0; p < n; ++p) ((mask >> p) & 1u ? b.left : b.right).push_back(p);
    out.push_back(b);
  }
  return out;
}

std::vector<Bipartition> joint_groups(const PartySpec& spec) {
  const int n = static_cast<int>(spec.parties());
  std::vector<Bipartition> out;
  // Excluded party n-1 first, then 0, 1, ...: AB, BC, CA for three parties.
  for (int e = 0; e < n; ++e) {
    int excluded = (e + n - 1) % n;
    out.push_back({cyclic_after(excluded + 1, n - 1, n), {excluded}});
  }
  return out;
}

Bipartition parse_bipartition(const PartySpec& spec, std::string_view text) {
  auto bar = text.find('|');
  auto side = [&](std::string_view s) {
    std::vector<int> g;
    for (char c : s) {
      auto it = std::find(spec.labels.begin(), spec.labels.end(), std::string(1, static_cast<char>(std::toupper(c))));
      if (it == spec.labels.end()) throw Error(ErrorKind::ParseError, "unknown party label in '" + std::string(text) + "'");
      g.push_back(static_cast<int>(it - spec.labels.begin()));
    }
    return g;
  };
  Bipartition b;
  if (bar == std::string_view::npos) {
    // A bare group name: complement in cyclic order after the group.
    b.left = side(text);
    for (int k = 1; k <= static_cast<int>(spec.parties()); ++k) {
      int p = (b.left.back() + k) % static_cast<int>(spec.parties());
      if (std::find(b.left.begin(), b.left.end(), p) == b.left.end()) b.right.push_back(p);
    }
  } else {
    b.left = side(text.substr(0, bar));
    b.right = side(text.substr(bar + 1));
  }
  validate(b, spec);
  return b;
}

// ------------------------------------------------------------- algebra

std::string ket_string(const PureState& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, a] : s.terms()) {
    std::string ket = "|";
    for (int d : idx) ket += std::to_string(d);
    ket += ">";
    bool real = a.im().is_zero();
    bool negative = real && a.re().sign() < 0;
    GaussianRational mag = negative ? -a : a;
    std::string coeff = mag == GaussianRational(1) ? "" : real ? mag.str() : "(" + mag.str() + ")";
    if (out.empty()) out = (negative ? "-" : "") + coeff + ket;
    else out += (negative ? " - " : " + ") + coeff + ket;
  }
  return out;
}

GaussianRational inner_product(const PureState& a, const PureState& b) {
  if (!(a.spec() == b.spec())) throw Error(ErrorKind::SpecMismatch, "inner product across different party specs");
  GaussianRational acc;
  const auto& small = a.terms().size() <= b.terms().size() ? a.terms() : b.terms();
  const bool a_small = &small == &a.terms();
  for (const auto& [idx, v] : small) {
    const auto& other = a_small ? b.terms() : a.terms();
    auto it = other.find(idx);
    if (it == other.end()) continue;
    acc += a_small ? v.conj() * it->second : it->second.conj() * v;
  }
  return acc;
}

ExactMatrix reshape_bipartite(const PureState& s, const Bipartition& b) {
  const auto& spec = s.spec();
  validate(b, spec);
  ExactMatrix m(group_dim(spec, b.left), group_dim(spec, b.right));
  for (const auto& [idx, v] : s.terms()) {
    std::size_t row = 0, col = 0;
    for (int p : b.left) row = row * spec.dims[p] + idx[p];
    for (int p : b.right) col = col * spec.dims[p] + idx[p];
    m(row, col) = v;
  }
  return m;
}

std::optional<std::pair<std::size_t, std::size_t>> first_overlap(const StateSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!inner_product(set.states[i], set.states[j]).is_zero()) return std::make_pair(i, j);
  return std::nullopt;
}

bool is_pairwise_orthogonal(const StateSet& set) { return !first_overlap(set).has_value(); }

ExactMatrix coefficient_matrix(const StateSet& set) {
  ExactMatrix m(set.spec.total(), set.size());
  for (std::size_t c = 0; c < set.size(); ++c)
    for (const auto& [idx, v] : set.states[c].terms()) m(set.spec.encode(idx), c) = v;
  return m;
}

StateSet orthogonal_complement(const StateSet& set) {
  // v is orthogonal to every state iff (conj C)^T v = 0.
  ExactMatrix a = adjoint(coefficient_matrix(set));
  ExactMatrix basis = null_space(a);
  StateSet out{set.spec, set.name + "-complement", {}, false};
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    std::vector<GaussianRational> v(basis.rows());
    for (std::size_t r = 0; r < basis.rows(); ++r) v[r] = basis(r, c);
    out.states.push_back(PureState::from_dense(set.spec, v, "perp" + std::to_string(c)));
  }
  return out;
}

// ------------------------------------------------------------- families

namespace {

using GR = GaussianRational;

const PartySpec& qubits3() {
  static const PartySpec spec({2, 2, 2});
  return spec;
}

PureState make_state(std::string label, std::initializer_list<std::pair<MultiIndex, GR>> terms) {
  PureState s(qubits3(), std::move(label));
  for (const auto& [idx, a] : terms) s.add(idx, a);
  return s;
}

void check_param(const GR& v, const char* name) {
  // a0 = 1, so a0^2 != a1^2 is a1^2 != 1.
  if (v * v == GR(1)) throw Error(ErrorKind::ParamConstraintViolated, std::string(name) + "^2 must differ from 1");
}

PureState phi00(const GR& a1, bool plus) {
  GR a0(1);
  GR c = plus ? (a0.norm2() + a1.norm2()) / (a0.conj() + a1.conj()) : -(a0 + a1);
  return make_state(plus ? "phi00+" : "phi00-", {{{0, 0, 0}, a0}, {{0, 1, 0}, a1}, {{0, 1, 1}, c}});
}

PureState phi01(const GR& a1, bool plus) {
  GR a0(1);
  GR c = plus ? GR(a0.norm2() + a1.norm2()) / (a0 - a1) : -(a0.conj() - a1.conj());
  return make_state(plus ? "phi01+" : "phi01-", {{{0, 1, 0}, a0.conj()}, {{0, 0, 0}, -a1.conj()}, {{1, 0, 0}, c}});
}

PureState psi10(const GR& b1, bool plus) {
  GR b0(1);
  GR c = plus ? (b0.norm2() + b1.norm2()) / (b0.conj() + b1.conj()) : -(b0 + b1);
  return make_state(plus ? "psi10+" : "psi10-", {{{1, 0, 1}, b0}, {{1, 1, 1}, b1}, {{1, 1, 0}, c}});
}

PureState psi11(const GR& b1, bool plus) {
  GR b0(1);
  GR c = plus ? GR(b0.norm2() + b1.norm2()) / (b0 - b1) : -(b0.conj() - b1.conj());
  return make_state(plus ? "psi11+" : "psi11-", {{{1, 1, 1}, b0.conj()}, {{1, 0, 1}, -b1.conj()}, {{0, 0, 1}, c}});
}

PureState tau() {
  PureState s(qubits3(), "tau");
  for (std::size_t k = 0; k < 8; ++k) s.add(qubits3().decode(k), GR(1));
  return s;
}

// |0+1>_B |00+01+10-11>_CA: minus sign only where C = 1 and A = 1.
PureState kappa() {
  PureState s(qubits3(), "kappa");
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) s.add({a, b, c}, GR(c == 1 && a == 1 ? -1 : 1));
  return s;
}

StateSet named(std::string name, std::vector<PureState> states) {
  return StateSet{qubits3(), std::move(name), std::move(states), true};
}

}  // namespace

std::string canonical_family(std::string_view family) {
  std::string f;
  for (char c : family) f += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (f == "basis" || f == "basis-b" || f == "b") return "basis-B";
  if (f == "set-s" || f == "s") return "set-S";
  if (f == "set-sz" || f == "sz") return "set-Sz";
  if (f == "set-s0" || f == "s0") return "set-S0";
  if (f == "ubb" || f == "ubb-u" || f == "u") return "ubb-U";
  if (f == "omega") return "omega";
  if (f == "tau") return "tau";
  if (f == "kappa") return "kappa";
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(family) + "'");
}

StateSet make_family(std::string_view family, const FamilyParams& params) {
  const std::string f = canonical_family(family);
  if (f == "basis-B" || f == "set-S") {
    GR a1 = params.a1.value_or(GR(-2));
    GR b1 = params.b1.value_or(GR::i());
    check_param(a1, "a1");
    check_param(b1, "b1");
    if (f == "basis-B")
      return named("B", {phi00(a1, false), phi00(a1, true), phi01(a1, false), phi01(a1, true), psi10(b1, false),
                         psi10(b1, true), psi11(b1, false), psi11(b1, true)});
    return named("S", {phi00(a1, false), phi01(a1, false), psi10(b1, false), psi11(b1, false), tau()});
  }
  if (f == "set-Sz") {
    if (!params.z) throw Error(ErrorKind::ParamConstraintViolated, "set-Sz requires z");
    const GR& z = *params.z;
    return named("S_z=" + z.str(), {phi00(GR(-2), false), phi01(GR(-2), false), psi10(z, false), psi11(z, false), tau()});
  }
  if (f == "set-S0") {
    return named("S0", {phi00(GR(-2), false), phi01(GR(-2), false),
                        make_state("psi10-", {{{1, 0, 1}, GR(1)}, {{1, 1, 0}, GR(-1)}}),
                        make_state("psi11-", {{{0, 0, 1}, GR(1)}, {{1, 1, 1}, GR(-1)}}), tau()});
  }
  if (f == "ubb-U") {
    return named("U", {phi00(GR(-2), false), phi01(GR(-2), false),
                       make_state("psi10+", {{{1, 0, 1}, GR(1)}, {{1, 1, 0}, GR(1)}}),
                       make_state("psi11+", {{{0, 0, 1}, GR(1)}, {{1, 1, 1}, GR(1)}}), kappa()});
  }
  if (f == "omega") {
    StateSet omega = named("Omega",
                 {make_state("psi0", {{{0, 0, 0}, GR(1)}, {{0, 1, 0}, GR(-2)}, {{0, 1, 1}, GR(-5)},
                                      {{1, 0, 1}, GR(-3)}, {{1, 1, 0}, GR(3)}}),
                  make_state("psi1", {{{0, 0, 0}, GR(6)}, {{0, 1, 0}, GR(3)}, {{1, 0, 0}, GR(5)},
                                      {{1, 0, 1}, GR(7)}, {{1, 1, 0}, GR(-7)}}),
                  make_state("psi2", {{{0, 0, 1}, GR(1)}, {{1, 1, 1}, GR(-1)}, {{1, 0, 1}, GR(1)},
                                      {{1, 1, 0}, GR(-1)}})});
    omega.orthogonal = is_pairwise_orthogonal(omega);
    return omega;
  }
  if (f == "tau") return named("tau", {tau()});
  return named("kappa", {kappa()});
}

}  // namespace entcert
