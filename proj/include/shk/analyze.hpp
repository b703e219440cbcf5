#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shk/complex.hpp"
#include "shk/decision.hpp"
#include "shk/field.hpp"
#include "shk/graph.hpp"
#include "shk/ideal.hpp"

namespace shk {

struct AnalyzeOptions {
  std::vector<std::string> props = {"all"};   // names, or name:vertex
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
  std::optional<long long> budget;            // empty = exact
  std::uint64_t seed = 0;                     // echoed; analysis is deterministic
  bool with_certificates = true;
};

// Reports are deterministic functions of (input, options): object keys are
// emitted sorted and no wall-clock data is included.
Json analyze_complex(const SimplicialComplex& c, const AnalyzeOptions& opts);
Json analyze_ideal(const MonomialIdeal& ideal, const AnalyzeOptions& opts);
Json analyze_graph(const Graph& g, const AnalyzeOptions& opts);
Json analyze_file(const std::string& path, const AnalyzeOptions& opts);

std::string render_human(const Json& report);

// complex -> dual ideal (.mi) or squarefree ideal -> dual-view complex (.cx).
std::string dualize_file(const std::string& path);

}  // namespace shk
