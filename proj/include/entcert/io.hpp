#pragma once

#include <string>
#include <string_view>

#include "entcert/certificate.hpp"
#include "entcert/certify.hpp"
#include "entcert/state.hpp"

namespace entcert {

/// {"dims", "name", "orthogonal", "states": [{"label", "terms": [{"index": [0,1,0], "amp": "-2"}]}]}
/// The parser also takes "amplitudes": {"010": "-2"} maps (comma separated
/// digits when a dimension exceeds 10).
Json state_set_to_json(const StateSet& set);
/// One term per line, trailing newline; byte-stable for a given set.
std::string serialize_state_set(const StateSet& set);

/// Throws ParseError ("line L, column C: ..." for malformed JSON, a JSON
/// pointer for structural problems) and InvariantViolation when the
/// document asserts orthogonality that does not hold.
StateSet parse_state_set(std::string_view text);
StateSet load_state_set(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// "0.030984 + 1.511701i"; purely real values print as one number.
std::string format_complex(ComplexFloat z, int digits = 6);

/// Generator, roots, coordinates and Gram matrix from a qces certificate.
std::string render_tables(const StateSet& set, const Certificate& qces);
Json tables_json(const StateSet& set, const Certificate& qces);

}  // namespace entcert
