#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "shk/complex.hpp"
#include "shk/field.hpp"

namespace shk {

// Reduced Betti numbers; ranks[k] is the rank in dimension k-1, so ranks[0]
// corresponds to dimension -1 (nonzero only for the complex {∅}).
struct HomologyProfile {
  std::vector<long long> ranks;

  long long rank_at(int dim) const {
    int idx = dim + 1;
    if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
    return ranks[static_cast<std::size_t>(idx)];
  }
  bool operator==(const HomologyProfile&) const = default;
};

// Per-invocation memo: canonical facet key -> profile. Never shared across
// top-level calls.
using HomologyCache = std::unordered_map<std::string, HomologyProfile>;

// Core engine over raw facet masks (an antichain with at least one facet).
// Unused mask bits are ignored, so callers may pass induced subfamilies
// without reindexing.
HomologyProfile reduced_homology_of_facets(const std::vector<Face>& facets,
                                           const FieldSpec& field,
                                           HomologyCache* cache = nullptr);

HomologyProfile reduced_homology_ranks(const SimplicialComplex& c, const FieldSpec& field);

// Reisner-style test: pure, and every face link has reduced homology
// concentrated in its top dimension over the field.
bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field);

// The pure mdim-skeleton is Cohen–Macaulay.
bool is_initially_cm(const SimplicialComplex& c, const FieldSpec& field);

// Every pure j-skeleton, 0 ≤ j ≤ dim, is Cohen–Macaulay.
bool is_sequentially_cm(const SimplicialComplex& c, const FieldSpec& field);

// Depth of the face ring over the field, computed from the graded Betti
// table of the non-face ideal.
int depth(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace shk
