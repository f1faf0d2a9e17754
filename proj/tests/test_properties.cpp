#include <doctest.h>

#include "properties.hpp"

using namespace entcert;
using namespace testing;

TEST_CASE("adjoint law on random orthogonal pairs") { CHECK(adjoint_law_violations(200, 101) == 0); }

TEST_CASE("exact rank agrees with the SVD numerical rank") { CHECK(rank_disagreements(100, 55) == 0); }

TEST_CASE("every shipped ideal is confluent") {
  auto bad = nonconfluent_ideals(ENTCERT_DATA_DIR);
  CHECK(bad.empty());
  for (const auto& b : bad) MESSAGE(b);
}

TEST_CASE("ces agrees with the oracle on every two-state span in 2x2") {
  CesAgreement r = ces_corpus_2x2();
  for (const auto& d : r.disagreements) MESSAGE(d);
  CHECK(r.disagreements.empty());
  CHECK(r.holds + r.fails == 3160);
  // Only the lines through an entangled v (pairs v, -v) are product free.
  CHECK(r.holds == entangled_lines_2x2());
  CHECK(r.holds > 0);
}

TEST_CASE("ces agrees with the oracle on sampled spans in 2x2x2") {
  PartySpec q3({2, 2, 2});
  std::mt19937 rng(77);
  CesAgreement r;
  for (int k = 0; k < 120; ++k) {
    std::vector<PureState> s;
    const int size = k % 3 == 2 ? 3 : 2;
    for (int m = 0; m < size; ++m) s.push_back(small_state(q3, rng, k % 4 == 0 && m == 0));
    compare_ces(set_of(q3, s), r);
  }
  for (const auto& d : r.disagreements) MESSAGE(d);
  CHECK(r.disagreements.empty());
  CHECK(r.holds > 0);
  CHECK(r.fails > 0);
}

TEST_CASE("ces agrees with the oracle on sampled three-state spans in 2x2") {
  PartySpec two({2, 2});
  std::mt19937 rng(78);
  CesAgreement r;
  for (int k = 0; k < 60; ++k)
    compare_ces(set_of(two, {small_state(two, rng, false), small_state(two, rng, false), small_state(two, rng, false)}),
                r);
  CHECK(r.disagreements.empty());
  CHECK(r.holds == 0);
}
