#pragma once

#include <optional>

#include "shk/complex.hpp"
#include "shk/decision.hpp"
#include "shk/field.hpp"

namespace shk {

// x is shedding when every facet containing x stays covered, after removing
// x, by a facet avoiding x.
bool is_shedding_vertex(const SimplicialComplex& c, int vertex_id);

// x is dismissing when deleting it does not lower the initial dimension.
bool is_dismissing_vertex(const SimplicialComplex& c, int vertex_id);

// Recursive decomposability via shedding vertices; a positive answer carries
// a shedding tree.
Decision is_vertex_decomposable(const SimplicialComplex& c, const SearchOptions& opts = {});

// Recursive decomposability via dismissing vertices; a positive answer
// carries a dismissing tree.
Decision is_vertex_dismissible(const SimplicialComplex& c, const SearchOptions& opts = {});

// Facet-order search: each step's intersection with the earlier facets must
// be pure of codimension one in the new facet.
Decision is_shellable(const SimplicialComplex& c, const SearchOptions& opts = {});

// Facet-order search with the relaxed condition that each step intersection
// keeps initial dimension ≥ mdim - 1.
Decision is_scalable(const SimplicialComplex& c, const SearchOptions& opts = {});

// Connectivity of the facet graph with edges |F ∩ G| ≥ mdim.
bool is_weakly_connected(const SimplicialComplex& c);
// Spanning connection edges as a replayable certificate (facet-path-set).
std::optional<Certificate> weak_connection_certificate(const SimplicialComplex& c);

enum class SkeletalProp { vertex_decomposable, shellable, cohen_macaulay };

// Pure j-skeleton satisfies the property for every 0 ≤ j ≤ k. `field` is
// required exactly for the Cohen–Macaulay property.
Decision has_k_property(const SimplicialComplex& c, int k, SkeletalProp prop,
                        const std::optional<FieldSpec>& field = std::nullopt,
                        const SearchOptions& opts = {});

}  // namespace shk
