// entangle-cert: build the state families, run certifications, print tables.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entcert/certify.hpp"
#include "entcert/error.hpp"
#include "entcert/io.hpp"
#include "entcert/state.hpp"

using namespace entcert;

namespace {

struct Source {
  std::string input;
  std::string family;
  std::string z, a1, b1;
};

void add_family_flags(CLI::App* cmd, Source& src) {
  cmd->add_option("--family", src.family, "basis-B, set-S, set-Sz, set-S0, ubb-U, omega, tau, kappa");
  cmd->add_option("--z", src.z, "z for set-Sz, e.g. 1+i (use --z=-2 for negative values)");
  cmd->add_option("--a1", src.a1, "a1 for basis-B and set-S");
  cmd->add_option("--b1", src.b1, "b1 for basis-B and set-S");
}

StateSet resolve(const Source& src) {
  if (!src.input.empty() && !src.family.empty())
    throw Error(ErrorKind::PreconditionFailed, "give either an input file or --family, not both");
  if (!src.input.empty()) return load_state_set(src.input);
  if (src.family.empty()) throw Error(ErrorKind::PreconditionFailed, "an input file or --family is required");
  FamilyParams p;
  if (!src.z.empty()) p.z = GaussianRational::parse(src.z);
  if (!src.a1.empty()) p.a1 = GaussianRational::parse(src.a1);
  if (!src.b1.empty()) p.b1 = GaussianRational::parse(src.b1);
  return make_family(src.family, p);
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) std::cout << text;
  else write_file(out, text);
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify entanglement and local irreducibility of multipartite state sets"};
  app.require_subcommand(1);

  Source gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "write a family as a state-set document");
  add_family_flags(gen, gen_src);
  gen->add_option("--out", gen_out, "output path (default stdout)");

  Source an_src;
  std::string checks = "all", format = "text", an_out;
  std::optional<std::size_t> pin;
  auto* analyze = app.add_subcommand("analyze", "run certifications on a state set");
  analyze->add_option("input", an_src.input, "state-set document");
  add_family_flags(analyze, an_src);
  analyze->add_option("--check", checks, "comma-separated checks or 'all'");
  analyze->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--out", an_out, "output path (default stdout)");
  analyze->add_option("--pin", pin, "pinned state index for stability");

  Source tb_src;
  std::string tb_format = "text", tb_out;
  auto* tables = app.add_subcommand("tables", "product-state tables for a quasi-CES");
  tables->add_option("input", tb_src.input, "state-set document");
  add_family_flags(tables, tb_src);
  tables->add_option("--format", tb_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  tables->add_option("--out", tb_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*gen) {
      emit(gen_out, serialize_state_set(resolve(gen_src)));
      return 0;
    }
    if (*analyze) {
      StateSet set = resolve(an_src);
      ReportOptions opts;
      opts.pin = pin;
      Report rep = run_report(set, split_checks(checks), opts);
      emit(an_out, format == "json" ? rep.to_json().dump(2) + "\n" : rep.text());
      return rep.exit_code();
    }
    StateSet set = resolve(tb_src);
    Certificate q = certify_qces(set);
    emit(tb_out, tb_format == "json" ? tables_json(set, q).dump(2) + "\n" : render_tables(set, q));
    return q.fails() ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
