#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace shk {

using Json = nlohmann::json;

// A machine-checkable witness for a positive decision: a tree of vertex or
// variable choices with simplex/base-case leaves, or an ordered facet or
// generator list. The payload schema is what `--replay` consumes.
struct Certificate {
  std::string kind;
  Json payload;
};

// Result of a property decider. `value` is empty exactly when the search
// budget was exhausted in heuristic mode; exact mode always decides.
struct Decision {
  std::optional<bool> value;
  bool exact = true;
  std::optional<Certificate> certificate;
  long long nodes = 0;

  bool is_true() const { return value.has_value() && *value; }
  bool is_false() const { return value.has_value() && !*value; }
  bool is_unknown() const { return !value.has_value(); }
};

struct SearchOptions {
  // Empty: exact mode, unlimited backtracking. Set: heuristic mode, the
  // search stops after this many nodes and may report unknown.
  std::optional<long long> node_budget;
};

}  // namespace shk
