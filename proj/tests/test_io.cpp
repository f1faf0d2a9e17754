#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>

#include "entcert/error.hpp"
#include "entcert/io.hpp"
#include "support.hpp"

using namespace entcert;
using namespace testing;

namespace {

const std::string kData = ENTCERT_DATA_DIR;

StateSet b_family(const char* a1, const char* b1) {
  FamilyParams p;
  p.a1 = gr(a1);
  p.b1 = gr(b1);
  return make_family("basis-B", p);
}

std::vector<std::pair<std::string, StateSet>> goldens() {
  return {{"B_a1_-2_b1_i.json", b_family("-2", "i")},
          {"B_a1_3_b1_1+i.json", b_family("3", "1+i")},
          {"Sz_0.json", sz("0")},
          {"Sz_1.json", sz("1")},
          {"Sz_i.json", sz("i")},
          {"Sz_1+i.json", sz("1+i")},
          {"Sz_-2.json", sz("-2")},
          {"S0.json", family("set-S0")},
          {"U.json", family("ubb-U")},
          {"Omega.json", family("omega")}};
}

bool same_states(const StateSet& a, const StateSet& b) {
  if (a.size() != b.size() || a.spec.dims != b.spec.dims) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.states[k].terms() != b.states[k].terms() || a.states[k].label() != b.states[k].label()) return false;
  return true;
}

std::string parse_message(std::string_view text) {
  try {
    parse_state_set(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("no error raised");
  return {};
}

int run_cli(const std::string& args, const std::string& out) {
  std::string cmd = std::string(ENTCERT_CLI) + " " + args + " > " + out + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("shipped documents equal freshly generated ones") {
  for (const auto& [file, set] : goldens()) {
    CAPTURE(file);
    std::string text = read_file(kData + "/" + file);
    CHECK(text == serialize_state_set(set));
    StateSet back = parse_state_set(text);
    CHECK(same_states(back, set));
    CHECK(back.name == set.name);
    CHECK(serialize_state_set(back) == text);
  }
}

TEST_CASE("round trip is byte-identical for every family") {
  for (const char* name : {"set-S0", "ubb-U", "omega", "tau", "kappa"}) {
    StateSet s = family(name);
    std::string once = serialize_state_set(s);
    CHECK(serialize_state_set(parse_state_set(once)) == once);
    CHECK(once.back() == '\n');
  }
  FamilyParams p;
  p.a1 = gr("1/2");
  p.b1 = gr("-3+i");
  std::string text = serialize_state_set(make_family("set-S", p));
  CHECK(serialize_state_set(parse_state_set(text)) == text);
  CHECK(state_set_to_json(parse_state_set(text)) == Json::parse(text));
}

TEST_CASE("the legacy amplitude map is accepted") {
  StateSet s = parse_state_set(R"({"dims": [2, 2, 2], "states": [
      {"label": "a", "amplitudes": {"000": "1", "011": "-1/2+i"}},
      {"label": "b", "amplitudes": {"111": "2"}}]})");
  REQUIRE(s.size() == 2);
  CHECK(s.states[0].amp({0, 1, 1}) == gr("-1/2+i"));
  CHECK(s.states[1].amp({1, 1, 1}) == GaussianRational(2));
  StateSet wide = parse_state_set(R"({"dims": [2, 11], "states": [{"amplitudes": {"1,10": "1"}}]})");
  CHECK(wide.states[0].amp({1, 10}) == GaussianRational(1));
}

TEST_CASE("malformed JSON reports line and column") {
  std::string msg = parse_message(read_file(std::string(ENTCERT_DATA_DIR) + "/../tests/garbage.json"));
  CHECK(msg.find("line 3, column") != std::string::npos);
  CHECK(parse_message("{\n  \"dims\": [2, 2\n").find("line ") != std::string::npos);
}

TEST_CASE("structural errors name the offending location") {
  CHECK(parse_message(R"({"states": []})").find("/dims") != std::string::npos);
  CHECK(parse_message(R"({"dims": [2, 2], "states": [{"label": "a"}]})").find("/states/0") != std::string::npos);
  CHECK(parse_message(R"({"dims": [2, 2], "states": [{"terms": [{"index": [0, 5], "amp": "1"}]}]})")
            .find("/states/0/terms/0") != std::string::npos);
  CHECK(parse_message(R"({"dims": [2, 2], "states": [{"terms": [{"index": [0, 1], "amp": "1+"}]}]})")
            .find("/states/0/terms/0") != std::string::npos);
  CHECK(parse_message(R"({"dims": [2, 2], "states": [{"terms": [{"index": [0], "amp": "1"}]}]})")
            .find("/states/0/terms/0") != std::string::npos);
}

TEST_CASE("a false orthogonality claim is an invariant violation") {
  try {
    parse_state_set(R"({"dims": [2, 2], "orthogonal": true, "states": [
        {"terms": [{"index": [0, 0], "amp": "1"}]},
        {"terms": [{"index": [0, 0], "amp": "1"}, {"index": [1, 1], "amp": "1"}]}]})");
    FAIL("expected InvariantViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvariantViolation);
  }
}

TEST_CASE("complex formatting") {
  CHECK(format_complex({0.030984, 1.511701}) == "0.030984 + 1.511701i");
  CHECK(format_complex({-0.42103, -0.612019}) == "-0.421030 - 0.612019i");
  CHECK(format_complex({2.429704, 0.0}) == "2.429704");
}

TEST_CASE("tables") {
  PartySpec two({2, 2});
  StateSet toy = set_of(two, {ket(two, {{{0, 0}, 1}}, "a"), ket(two, {{{1, 1}, 1}}, "b")});
  Json t = tables_json(toy, certify_qces(toy));
  CHECK(t["solutions"].size() == 2);
  std::string text = render_tables(toy, certify_qces(toy));
  CHECK(text.rfind("product index 2", 0) == 0);

  StateSet omega = family("omega");
  CHECK(render_tables(omega, certify_qces(omega)) == "product index 0, no table\n");

  StateSet u = family("ubb-U");
  std::string ut = render_tables(u, certify_qces(u));
  for (const char* cell : {"0.207481", "2.429704", "0.030984 + 1.511701i", "0.450424 - 1.005911i", "-5.443347",
                           "-0.421030 - 0.612019i", "-1.759799 + 2.755537i", "0.219562 - 0.572381i"}) {
    CAPTURE(cell);
    CHECK(ut.find(cell) != std::string::npos);
  }
  CHECK(ut.find("all off-diagonal entries nonzero: yes") != std::string::npos);
}

TEST_CASE("command line") {
  const std::string out = "entcert_io_cli.out";
  CHECK(run_cli("generate --family ubb-U", out) == 0);
  CHECK(read_file(out) == read_file(kData + "/U.json"));
  CHECK(run_cli("generate --family set-Sz --z=-2", out) == 0);
  CHECK(read_file(out) == read_file(kData + "/Sz_-2.json"));
  CHECK(run_cli("analyze " + kData + "/Sz_i.json --check strong-nonlocality --format json", out) == 0);
  Json rep = Json::parse(read_file(out));
  CHECK(rep["checks"][0]["verdict"] == "holds");
  CHECK(run_cli("analyze " + kData + "/S0.json --check strong-nonlocality", out) == 1);
  CHECK(run_cli("tables " + kData + "/Omega.json", out) == 0);
  CHECK(read_file(out) == "product index 0, no table\n");
  CHECK(run_cli("analyze " + kData + "/U.json --check nonsense", out) == 3);
  std::remove(out.c_str());
}
