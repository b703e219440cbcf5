#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shk/complex.hpp"
#include "shk/vertex_set.hpp"

namespace shk {

// Finite simple graph over an interned vertex set; adjacency stored as
// per-vertex bitmasks.
class Graph {
 public:
  Graph() = default;
  static Graph build(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  int size() const { return vertices_.size(); }
  bool adjacent(int a, int b) const { return face_has(adj_[static_cast<std::size_t>(a)], b); }
  Face neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;

  bool operator==(const Graph&) const = default;

 private:
  VertexSet vertices_;
  std::vector<Face> adj_;
};

// Maximum-cardinality search producing a perfect elimination order, then
// verification; a found order is the certificate.
bool is_chordal(const Graph& g, std::vector<int>* elimination_order = nullptr);
bool is_cochordal(const Graph& g);

// Facets are the maximal independent sets; the ambient set is all vertices.
SimplicialComplex independence_complex(const Graph& g);

Graph cycle_graph(int n);  // vertices labeled "1".."n"; requires n ≥ 3

struct CycleExpectation {
  int mdim;                       // ⌈n/3⌉ - 1
  bool vertex_dismissible;        // n mod 3 ≠ 1
};
CycleExpectation classify_cycle(int n);

}  // namespace shk
