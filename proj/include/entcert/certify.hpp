#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entcert/certificate.hpp"
#include "entcert/groebner.hpp"
#include "entcert/numeric.hpp"
#include "entcert/product.hpp"
#include "entcert/state.hpp"

namespace entcert {

/// Which cuts a product state must factor across. One bipartition asks for
/// bipartite product states; all one-party cuts ask for fully product ones.
using Scope = std::vector<Bipartition>;

Scope fully_product(const PartySpec& spec);
std::string scope_name(const PartySpec& spec, const Scope& scope);

/// Product states in span(set) across `scope`. Decided exactly: a
/// homogeneous grevlex basis with only the origin as zero, or the pinned
/// recursion (x_k = 1 has no solution and span(set \ k) is product free).
/// A failing verdict carries a coordinate witness whenever one is found.
Certificate certify_ces(const StateSet& set, const Scope& scope);
Certificate certify_ces(const StateSet& set, const Bipartition& b);
/// certify_ces on every bipartition.
Certificate certify_ges(const StateSet& set);

struct QcesAnalysis {
  QuadraticSystem system;  // all cuts, pinned
  Elimination elimination;
  std::vector<ComplexFloat> roots;
  std::vector<ProductStateSolution> solutions;
  std::optional<GramReport> gram;
  std::size_t index = 0;  // product states with x_pinned != 0
};

/// Pins `pinned` (default: last state) in the fully product system and
/// eliminates to the last remaining variable. Throws NotZeroDimensional.
QcesAnalysis analyze_qces(const StateSet& set, std::optional<std::size_t> pinned = std::nullopt);

/// Counts fully product states in the span (with multiplicity).
Certificate certify_qces(const StateSet& set);
Certificate certify_ubb(const StateSet& set);
/// Every removal splits the space into two product-free halves.
Certificate certify_split(const StateSet& set, std::optional<StateSet> complement = std::nullopt);
/// Complement coordinates vanish on every product state of the pinned
/// extended system restricted to the core solutions.
Certificate certify_stability(const StateSet& core, std::size_t pinned,
                              std::optional<StateSet> complement = std::nullopt);
/// Every bimarginal of every subset sum has rank >= |T| + 1.
Certificate certify_distillable(const StateSet& set);
Certificate certify_orthogonality(const StateSet& set);
/// Conclusive when each joint group is either rank-blocked or carries a
/// verified witness.
Certificate certify_opm(const StateSet& set);

const std::vector<std::string>& known_checks();

struct Report {
  std::string set;
  std::vector<Certificate> checks;
  std::vector<bool> errored;

  /// 3 on any error, else 1 on any failure, else 2 on any inconclusive, else 0.
  int exit_code() const;
  Json to_json(bool with_timing = true) const;
  std::string text() const;
};

struct ReportOptions {
  std::optional<std::size_t> pin;
  std::optional<StateSet> complement;
  /// Parallel checks; 0 reads ENTANGLE_CERT_THREADS (default: hardware).
  unsigned threads = 0;
};

/// "all" expands to every known check. Errors inside a check are recorded
/// in its certificate rather than thrown.
Report run_report(const StateSet& set, const std::vector<std::string>& checks, const ReportOptions& opts = {});

}  // namespace entcert
