#include "entcert/certificate.hpp"

namespace entcert {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Json Certificate::to_json(bool with_timing) const {
  Json j;
  j["property"] = property;
  j["verdict"] = std::string(to_string(verdict));
  if (!scope.empty()) j["scope"] = scope;
  j["evidence"] = evidence;
  if (with_timing) j["ms"] = ms;
  return j;
}

}  // namespace entcert
