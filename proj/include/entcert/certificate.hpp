#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace entcert {

using Json = nlohmann::ordered_json;

enum class Verdict { Holds, Fails, Inconclusive };

std::string_view to_string(Verdict v);

struct Certificate {
  std::string property;
  Verdict verdict = Verdict::Inconclusive;
  std::string scope;
  Json evidence = Json::object();
  double ms = 0.0;  // wall time; not part of golden comparisons

  bool holds() const { return verdict == Verdict::Holds; }
  bool fails() const { return verdict == Verdict::Fails; }
  Json to_json(bool with_timing = true) const;
};

}  // namespace entcert
