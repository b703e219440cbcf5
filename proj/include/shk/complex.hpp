#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shk/vertex_set.hpp"

namespace shk {

enum class SkeletonMode { pure, full };

// Mask-level helpers shared by the complex type and the property searches.
// All of them expect/produce antichains in canonical order.
std::vector<Face> antichain_maximal(std::vector<Face> faces);
int dim_of_facets(const std::vector<Face>& facets);
int mdim_of_facets(const std::vector<Face>& facets);
std::vector<Face> deletion_facets(const std::vector<Face>& facets, int vertex);
std::vector<Face> link_facets(const std::vector<Face>& facets, Face sigma);
std::vector<Face> pure_skeleton_facets(const std::vector<Face>& facets, int k);
std::vector<Face> all_faces_of(const std::vector<Face>& facets);  // includes the empty face

// A finite simplicial complex: canonical facet antichain over an interned
// ambient vertex set. The ambient set may strictly contain the union of the
// facets (Alexander duality depends on it). Values are immutable; every
// operation returns a fresh complex.
//
// The void complex (no facets) is constructible but rejected by all property
// deciders; the complex {∅} is represented by a single empty facet and has
// dim = mdim = -1.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void complex on the empty vertex set

  static SimplicialComplex build(
      const std::vector<std::vector<std::string>>& raw_facets,
      const std::optional<std::vector<std::string>>& ambient = std::nullopt);
  // Antichain-reduces `faces` and sorts canonically.
  static SimplicialComplex from_faces(VertexSet vertices, std::vector<Face> faces);

  bool is_void() const { return facets_.empty(); }
  bool is_simplex() const { return facets_.size() == 1; }  // includes {∅}
  int dim() const;   // throws input_error on the void complex
  int mdim() const;
  std::pair<int, int> dimensions() const { return {dim(), mdim()}; }
  bool is_pure() const;

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  Face ambient_mask() const { return vertices_.full_mask(); }
  Face support() const;
  bool contains_face(Face f) const;

  std::vector<Face> all_faces() const { return all_faces_of(facets_); }
  std::vector<long long> f_vector() const;  // throws on the void complex

  SimplicialComplex deletion(int vertex_id) const;
  SimplicialComplex link(Face sigma) const;
  SimplicialComplex skeleton(int k, SkeletonMode mode) const;
  static SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

  bool operator==(const SimplicialComplex&) const = default;

  // Combinatorial-type key (label-free): ambient size plus facet masks.
  std::string canonical_key() const;

 private:
  VertexSet vertices_;
  std::vector<Face> facets_;
};

}  // namespace shk
