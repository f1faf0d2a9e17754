#include "entcert/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "entcert/error.hpp"

namespace entcert {

namespace {

[[noreturn]] void structural(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

MultiIndex parse_key(const std::string& key, const PartySpec& spec, const std::string& where) {
  MultiIndex idx;
  if (key.find(',') != std::string::npos) {
    std::stringstream ss(key);
    for (std::string part; std::getline(ss, part, ',');) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        structural(where, "bad index '" + key + "'");
      idx.push_back(std::stoi(part));
    }
  } else {
    for (char ch : key) {
      if (ch < '0' || ch > '9') structural(where, "bad index '" + key + "'");
      idx.push_back(ch - '0');
    }
  }
  if (!spec.contains(idx)) structural(where, "index '" + key + "' outside the party dimensions");
  return idx;
}

MultiIndex parse_index(const Json& j, const PartySpec& spec, const std::string& where) {
  if (!j.is_array()) structural(where, "expected an array of digits");
  MultiIndex idx;
  for (const auto& d : j) {
    if (!d.is_number_integer()) structural(where, "expected an array of digits");
    idx.push_back(d.get<int>());
  }
  if (!spec.contains(idx)) structural(where, "index outside the party dimensions");
  return idx;
}

GaussianRational parse_amp(const Json& val, const std::string& where) {
  if (val.is_number_integer()) return GaussianRational(Rational(val.get<long>()));
  if (!val.is_string()) structural(where, "amplitudes are strings such as \"-3/2+1i\"");
  try {
    return GaussianRational::parse(val.get<std::string>());
  } catch (const Error&) {
    structural(where, "bad amplitude '" + val.get<std::string>() + "'");
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json complex_pair(ComplexFloat z) { return Json::array({z.real(), z.imag()}); }

ComplexFloat from_pair(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

Json state_set_to_json(const StateSet& set) {
  Json j;
  j["dims"] = set.spec.dims;
  j["name"] = set.name;
  j["orthogonal"] = set.orthogonal;
  j["states"] = Json::array();
  for (const auto& s : set.states) {
    Json terms = Json::array();
    for (const auto& [idx, a] : s.terms()) terms.push_back({{"index", idx}, {"amp", a.str()}});
    j["states"].push_back({{"label", s.label()}, {"terms", terms}});
  }
  return j;
}

std::string serialize_state_set(const StateSet& set) {
  std::ostringstream os;
  auto digits = [](const MultiIndex& idx) {
    std::string s = "[";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? ", " : "") + std::to_string(idx[k]);
    return s + "]";
  };
  os << "{\n  \"dims\": " << digits(set.spec.dims) << ",\n";
  os << "  \"name\": " << Json(set.name).dump() << ",\n";
  os << "  \"orthogonal\": " << (set.orthogonal ? "true" : "false") << ",\n";
  os << "  \"states\": [";
  for (std::size_t k = 0; k < set.size(); ++k) {
    const auto& st = set.states[k];
    os << (k ? ",\n" : "\n") << "    {\n      \"label\": " << Json(st.label()).dump() << ",\n      \"terms\": [";
    std::size_t t = 0;
    for (const auto& [idx, a] : st.terms())
      os << (t++ ? ",\n" : "\n") << "        {\"index\": " << digits(idx) << ", \"amp\": " << Json(a.str()).dump() << "}";
    os << "\n      ]\n    }";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

StateSet parse_state_set(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_column(text, offset);
    std::string msg = e.what();
    auto cut = msg.find(": ", msg.find("parse error"));
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                           (cut == std::string::npos ? msg : msg.substr(cut + 2)));
  }
  if (!j.is_object()) structural("/", "expected an object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) structural("/dims", "expected a nonempty array");
  std::vector<int> dims;
  for (std::size_t k = 0; k < j["dims"].size(); ++k) {
    const Json& d = j["dims"][k];
    if (!d.is_number_integer() || d.get<int>() < 2) structural("/dims/" + std::to_string(k), "expected an integer >= 2");
    dims.push_back(d.get<int>());
  }
  StateSet set;
  set.spec = PartySpec(dims);
  if (j.contains("name")) {
    if (!j["name"].is_string()) structural("/name", "expected a string");
    set.name = j["name"].get<std::string>();
  }
  if (j.contains("orthogonal")) {
    if (!j["orthogonal"].is_boolean()) structural("/orthogonal", "expected true or false");
    set.orthogonal = j["orthogonal"].get<bool>();
  }
  if (!j.contains("states") || !j["states"].is_array()) structural("/states", "expected an array");
  for (std::size_t k = 0; k < j["states"].size(); ++k) {
    const std::string where = "/states/" + std::to_string(k);
    const Json& s = j["states"][k];
    if (!s.is_object()) structural(where, "expected an object");
    std::string label = "s" + std::to_string(k);
    if (s.contains("label")) {
      if (!s["label"].is_string()) structural(where + "/label", "expected a string");
      label = s["label"].get<std::string>();
    }
    PureState st(set.spec, label);
    if (s.contains("terms")) {
      if (!s["terms"].is_array()) structural(where + "/terms", "expected an array");
      for (std::size_t t = 0; t < s["terms"].size(); ++t) {
        const std::string at = where + "/terms/" + std::to_string(t);
        const Json& term = s["terms"][t];
        if (!term.is_object() || !term.contains("index") || !term.contains("amp"))
          structural(at, "expected {\"index\": [...], \"amp\": \"...\"}");
        st.add(parse_index(term["index"], set.spec, at + "/index"), parse_amp(term["amp"], at + "/amp"));
      }
    } else if (s.contains("amplitudes")) {
      if (!s["amplitudes"].is_object()) structural(where + "/amplitudes", "expected an object");
      for (const auto& [key, val] : s["amplitudes"].items()) {
        const std::string at = where + "/amplitudes/" + key;
        st.add(parse_key(key, set.spec, at), parse_amp(val, at));
      }
    } else {
      structural(where, "expected \"terms\"");
    }
    if (st.is_zero()) structural(where, "zero state");
    set.states.push_back(std::move(st));
  }
  if (set.orthogonal) {
    if (auto bad = first_overlap(set))
      throw Error(ErrorKind::InvariantViolation, "document asserts orthogonality but " +
                                                     set.states[bad->first].label() + " and " +
                                                     set.states[bad->second].label() + " overlap");
  }
  return set;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvariantViolation, "cannot write " + path);
  out << text;
}

StateSet load_state_set(const std::string& path) { return parse_state_set(read_file(path)); }

std::string format_complex(ComplexFloat z, int digits) {
  const double eps = 0.5 * std::pow(10.0, -digits);
  double re = std::abs(z.real()) < eps ? 0.0 : z.real();
  double im = std::abs(z.imag()) < eps ? 0.0 : z.imag();
  char buf[96];
  if (im == 0.0) {
    std::snprintf(buf, sizeof buf, "%.*f", digits, re);
  } else {
    std::snprintf(buf, sizeof buf, "%.*f %c %.*fi", digits, re, im < 0 ? '-' : '+', digits, std::abs(im));
  }
  return buf;
}

Json tables_json(const StateSet& set, const Certificate& qces) {
  Json j;
  j["set"] = set.name;
  j["product_index"] = qces.evidence.value("product_index", 0);
  if (qces.evidence.contains("generator")) j["generator"] = qces.evidence["generator"];
  if (qces.evidence.contains("variable")) j["variable"] = qces.evidence["variable"];
  j["solutions"] = qces.evidence.value("solutions", Json::array());
  if (!j["solutions"].empty()) {
    std::vector<ProductStateSolution> sols;
    for (const auto& p : j["solutions"]) {
      ProductStateSolution s;
      for (const auto& z : p) s.x.push_back(from_pair(z));
      sols.push_back(std::move(s));
    }
    GramReport g = gram_nonorthogonality(sols, set);
    Json rows = Json::array();
    for (std::size_t k = 0; k < g.gram.rows(); ++k) {
      Json row = Json::array();
      for (std::size_t p = 0; p < g.gram.cols(); ++p) row.push_back(complex_pair(g.gram(k, p)));
      rows.push_back(row);
    }
    j["gram"] = rows;
    j["weights"] = g.weights;
    j["gram_all_nonzero"] = g.all_nonzero;
  }
  return j;
}

std::string render_tables(const StateSet& set, const Certificate& qces) {
  std::ostringstream os;
  const std::size_t index = qces.evidence.value("product_index", std::size_t{0});
  if (index == 0) {
    os << "product index 0, no table\n";
    return os.str();
  }
  Json t = tables_json(set, qces);
  os << "product index " << index << "\n";
  std::string var = qces.evidence.value("variable", std::string());
  if (qces.evidence.contains("generator")) os << "generator: " << qces.evidence["generator"].get<std::string>() << " = 0\n";
  if (qces.evidence.contains("back_substitution"))
    for (const auto& [x, h] : qces.evidence["back_substitution"].items()) os << "  " << x << " = " << h.get<std::string>() << "\n";

  const auto& sols = t["solutions"];
  const std::size_t n = set.size();
  std::size_t keep = n, pinned = n;
  if (var.size() > 1) keep = std::stoul(var.substr(1));
  std::string pv = qces.evidence.value("pinned_variable", std::string());
  if (pv.size() > 1) pinned = std::stoul(pv.substr(1));

  if (keep < n) {
    os << "\nroots of the generator\n";
    os << "  k  " << var << "\n";
    for (std::size_t k = 0; k < sols.size(); ++k) {
      char head[16];
      std::snprintf(head, sizeof head, "%3zu  ", k + 1);
      os << head << format_complex(from_pair(sols[k][keep])) << "\n";
    }
  }

  os << "\ncoordinates\n  k";
  for (std::size_t v = 0; v < n; ++v)
    if (v != keep && v != pinned) os << "  x" << v;
  os << "\n";
  for (std::size_t k = 0; k < sols.size(); ++k) {
    char head[16];
    std::snprintf(head, sizeof head, "%3zu", k + 1);
    os << head;
    for (std::size_t v = 0; v < n; ++v)
      if (v != keep && v != pinned) os << "  " << format_complex(from_pair(sols[k][v]));
    os << "\n";
  }

  os << "\ngram matrix <eta_k|eta_p>\n";
  for (const auto& row : t["gram"]) {
    os << " ";
    for (const auto& z : row) os << "  " << format_complex(from_pair(z), 4);
    os << "\n";
  }
  os << "weights:";
  for (const auto& w : t["weights"]) os << " " << w.get<double>();
  os << "\nall off-diagonal entries nonzero: " << (t["gram_all_nonzero"].get<bool>() ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace entcert
