#include <doctest.h>

#include "entcert/error.hpp"
#include "entcert/matrix.hpp"
#include "entcert/state.hpp"
#include "support.hpp"

using namespace entcert;
using namespace testing;

namespace {

const PartySpec q3({2, 2, 2});

Bipartition a_bc() { return {{0}, {1, 2}}; }

bool all_minors_vanish(const ExactMatrix& m) {
  for (std::size_t r0 = 0; r0 < m.rows(); ++r0)
    for (std::size_t r1 = r0 + 1; r1 < m.rows(); ++r1)
      for (std::size_t c0 = 0; c0 < m.cols(); ++c0)
        for (std::size_t c1 = c0 + 1; c1 < m.cols(); ++c1)
          if (m(r0, c0) * m(r1, c1) != m(r0, c1) * m(r1, c0)) return false;
  return true;
}

}  // namespace

TEST_CASE("party spec encoding is row-major with A most significant") {
  PartySpec s({2, 3, 2});
  CHECK(s.total() == 12);
  CHECK(s.encode({1, 2, 0}) == 10);
  CHECK(s.decode(10) == MultiIndex{1, 2, 0});
  CHECK(s.labels == std::vector<std::string>{"A", "B", "C"});
  CHECK_FALSE(s.contains({0, 3, 0}));
}

TEST_CASE("inner products") {
  StateSet u = family("ubb-U");
  CHECK(inner_product(u.states[0], u.states[1]) == GaussianRational(0));
  StateSet tau = family("tau");
  CHECK(inner_product(tau.states[0], tau.states[0]) == GaussianRational(8));
  StateSet kappa = family("kappa");
  CHECK(inner_product(kappa.states[0], kappa.states[0]) == GaussianRational(8));
  PureState a = ket(q3, {{{0, 0, 0}, gr("i")}});
  PureState b = ket(q3, {{{0, 0, 0}, GaussianRational(1)}});
  CHECK(inner_product(a, b) == gr("-i"));
  PureState other(PartySpec({2, 2}));
  other.add({0, 0}, 1);
  CHECK_THROWS_AS(inner_product(a, other), Error);
}

TEST_CASE("reshape across A|BC") {
  PureState s = ket(q3, {{{1, 0, 1}, 1}, {{1, 1, 0}, -1}});
  ExactMatrix m = reshape_bipartite(s, a_bc());
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 4);
  for (std::size_t c = 0; c < 4; ++c) CHECK(m(0, c).is_zero());
  CHECK(m(1, 0) == GaussianRational(0));
  CHECK(m(1, 1) == GaussianRational(1));
  CHECK(m(1, 2) == GaussianRational(-1));
  CHECK(m(1, 3) == GaussianRational(0));

  PureState prod = ket(q3, {{{0, 0, 0}, 1}});
  for (const auto& b : all_bipartitions(q3)) CHECK(exact_rank(reshape_bipartite(prod, b)) == 1);
}

TEST_CASE("Omega psi0 coefficient table across A|BC") {
  StateSet omega = family("omega");
  ExactMatrix m = reshape_bipartite(omega.states[0], a_bc());
  CHECK(m == exact({{1, 0, -2, -5}, {0, -3, 3, 0}}));
}

TEST_CASE("reshape across a swapped bipartition transposes") {
  for (const char* name : {"ubb-U", "omega", "set-S0", "basis-B"}) {
    StateSet set = family(name);
    for (const auto& b : all_bipartitions(set.spec))
      for (const auto& s : set.states) CHECK(reshape_bipartite(s, b.swapped()) == reshape_bipartite(s, b).transpose());
  }
}

TEST_CASE("product states have vanishing minors in every cut") {
  std::vector<GaussianRational> a{gr("1+i"), 2}, b{3, gr("-1/2")}, c{gr("i"), 1};
  PureState prod(q3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) prod.add({i, j, k}, a[i] * b[j] * c[k]);
  for (const auto& bp : all_bipartitions(q3)) CHECK(all_minors_vanish(reshape_bipartite(prod, bp)));
  StateSet u = family("ubb-U");
  CHECK_FALSE(all_minors_vanish(reshape_bipartite(u.states[4], a_bc())));
}

TEST_CASE("bipartition naming and parsing") {
  auto cuts = all_bipartitions(q3);
  REQUIRE(cuts.size() == 3);
  CHECK(bipartition_name(q3, cuts[0]) == "A|BC");
  CHECK(bipartition_name(q3, cuts[1]) == "B|CA");
  CHECK(bipartition_name(q3, cuts[2]) == "C|AB");
  auto groups = joint_groups(q3);
  CHECK(bipartition_name(q3, groups[0]) == "AB|C");
  CHECK(bipartition_name(q3, groups[1]) == "BC|A");
  CHECK(bipartition_name(q3, groups[2]) == "CA|B");
  CHECK(parse_bipartition(q3, "B|CA") == cuts[1]);
  CHECK_THROWS_AS(validate(Bipartition{{0}, {0, 1, 2}}, q3), Error);
  CHECK_THROWS_AS(validate(Bipartition{{}, {0, 1, 2}}, q3), Error);
}

TEST_CASE("families") {
  SUBCASE("S_z at z = 0 is S0") {
    StateSet s = sz("0"), s0 = family("set-S0");
    REQUIRE(s.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) {
      StateSet pair = set_of(s.spec, {s.states[k], s0.states[k]});
      CHECK(exact_rank(coefficient_matrix(pair)) == 1);
    }
  }
  SUBCASE("B is an orthogonal basis") {
    FamilyParams p;
    p.a1 = GaussianRational(-2);
    p.b1 = GaussianRational::i();
    StateSet b = make_family("basis-B", p);
    REQUIRE(b.size() == 8);
    int zero = 0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j) zero += inner_product(b.states[i], b.states[j]).is_zero();
    CHECK(zero == 28);
    CHECK(exact_rank(coefficient_matrix(b)) == 8);
  }
  SUBCASE("U has five states in three qubits") {
    StateSet u = family("ubb-U");
    CHECK(u.size() == 5);
    CHECK(u.spec.dims == std::vector<int>{2, 2, 2});
  }
  SUBCASE("parameter constraints") {
    FamilyParams p;
    p.a1 = GaussianRational(-2);
    p.b1 = GaussianRational(1);
    try {
      make_family("basis", p);
      FAIL("expected ParamConstraintViolated");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParamConstraintViolated);
    }
    p.a1 = GaussianRational(-1);
    p.b1 = GaussianRational(3);
    CHECK_THROWS_AS(make_family("set-S", p), Error);
    try {
      make_family("nonsense");
      FAIL("expected UnknownFamily");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownFamily);
    }
  }
}

TEST_CASE("orthogonality of the shipped families") {
  FamilyParams p;
  p.a1 = GaussianRational(3);
  p.b1 = gr("1+i");
  CHECK(is_pairwise_orthogonal(make_family("basis-B", p)));
  CHECK(is_pairwise_orthogonal(make_family("set-S", p)));
  for (const char* z : {"0", "1", "i", "1+i", "-2", "-3+2i", "3"}) CHECK(is_pairwise_orthogonal(sz(z)));
  CHECK(is_pairwise_orthogonal(family("set-S0")));
  CHECK(is_pairwise_orthogonal(family("ubb-U")));
}

TEST_CASE("Omega is orthogonal to U and completes it") {
  StateSet u = family("ubb-U"), omega = family("omega");
  for (const auto& w : omega.states)
    for (const auto& s : u.states) CHECK(inner_product(w, s).is_zero());
  StateSet both = u;
  for (const auto& w : omega.states) both.states.push_back(w);
  CHECK(exact_rank(coefficient_matrix(both)) == 8);

  StateSet comp = orthogonal_complement(u);
  REQUIRE(comp.size() == 3);
  StateSet mixed = comp;
  for (const auto& w : omega.states) mixed.states.push_back(w);
  CHECK(exact_rank(coefficient_matrix(comp)) == 3);
  CHECK(exact_rank(coefficient_matrix(omega)) == 3);
  CHECK(exact_rank(coefficient_matrix(mixed)) == 3);
}

TEST_CASE("ket rendering") {
  PureState s = ket(q3, {{{0, 0, 0}, gr("5/3")}, {{0, 1, 0}, gr("-1/3")}, {{0, 1, 1}, gr("1+i")}});
  CHECK(ket_string(s) == "5/3|000> - 1/3|010> + (1+1i)|011>");
}

TEST_CASE("subsets") {
  StateSet u = family("ubb-U");
  StateSet w = u.without(0);
  CHECK(w.size() == 4);
  CHECK(w.states[0].label() == u.states[1].label());
  CHECK_THROWS_AS(u.subset({7}), Error);
}
