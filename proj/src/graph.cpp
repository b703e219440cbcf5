#include "shk/graph.hpp"

#include <algorithm>

#include "shk/errors.hpp"

namespace shk {

Graph Graph::build(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  g.vertices_ = VertexSet::from_labels(std::move(labels));
  g.adj_.assign(static_cast<std::size_t>(g.vertices_.size()), 0);
  for (const auto& [a, b] : edges) {
    int ia = g.vertices_.id(a), ib = g.vertices_.id(b);
    if (ia == ib) throw input_error("loop edge at vertex " + a);
    g.adj_[static_cast<std::size_t>(ia)] |= face_bit(ib);
    g.adj_[static_cast<std::size_t>(ib)] |= face_bit(ia);
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b : face_ids(adj_[static_cast<std::size_t>(a)]))
      if (a < b) out.emplace_back(a, b);
  return out;
}

Graph Graph::complement() const {
  Graph g;
  g.vertices_ = vertices_;
  Face all = vertices_.full_mask();
  g.adj_.resize(static_cast<std::size_t>(size()));
  for (int v = 0; v < size(); ++v)
    g.adj_[static_cast<std::size_t>(v)] = all & ~adj_[static_cast<std::size_t>(v)] & ~face_bit(v);
  return g;
}

bool is_chordal(const Graph& g, std::vector<int>* elimination_order) {
  const int n = g.size();
  if (n == 0) {
    if (elimination_order) elimination_order->clear();
    return true;
  }
  // Maximum-cardinality search; the visit order reversed is the candidate
  // perfect elimination order.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> numbered(static_cast<std::size_t>(n), false);
  std::vector<int> mcs;
  mcs.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (numbered[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    }
    numbered[static_cast<std::size_t>(best)] = true;
    mcs.push_back(best);
    for (int u : face_ids(g.neighbors(best)))
      if (!numbered[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
  }
  std::vector<int> peo(mcs.rbegin(), mcs.rend());
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;

  // v's later neighbors minus the earliest one must lie in that neighbor's
  // neighborhood.
  for (int i = 0; i < n; ++i) {
    int v = peo[static_cast<std::size_t>(i)];
    Face later = 0;
    int earliest = -1, earliest_pos = n;
    for (int u : face_ids(g.neighbors(v))) {
      int pu = position[static_cast<std::size_t>(u)];
      if (pu > i) {
        later |= face_bit(u);
        if (pu < earliest_pos) {
          earliest_pos = pu;
          earliest = u;
        }
      }
    }
    if (earliest < 0) continue;
    Face rest = later & ~face_bit(earliest);
    if (!face_subset(rest, g.neighbors(earliest))) return false;
  }
  if (elimination_order) *elimination_order = peo;
  return true;
}

bool is_cochordal(const Graph& g) { return is_chordal(g.complement()); }

SimplicialComplex independence_complex(const Graph& g) {
  if (g.size() == 0) throw input_error("independence complex of an empty graph");
  // Maximal independent sets of g = maximal cliques of the complement;
  // Bron-Kerbosch with pivoting.
  Graph h = g.complement();
  std::vector<Face> cliques;
  Face all = g.vertices().full_mask();
  auto bk = [&](auto&& self, Face r, Face p, Face x) -> void {
    if (p == 0 && x == 0) {
      cliques.push_back(r);
      return;
    }
    Face px = p | x;
    int pivot = -1, best = -1;
    for (int u : face_ids(px)) {
      int cnt = face_card(p & h.neighbors(u));
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
    for (int v : face_ids(p & ~h.neighbors(pivot))) {
      self(self, r | face_bit(v), p & h.neighbors(v), x & h.neighbors(v));
      p &= ~face_bit(v);
      x |= face_bit(v);
    }
  };
  bk(bk, 0, all, 0);
  return SimplicialComplex::from_faces(g.vertices(), std::move(cliques));
}

Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle graph needs at least 3 vertices");
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i)
    edges.emplace_back(std::to_string(i), std::to_string(i % n + 1));
  return Graph::build(std::move(labels), edges);
}

CycleExpectation classify_cycle(int n) {
  if (n < 3) throw input_error("cycle classification needs at least 3 vertices");
  return {(n + 2) / 3 - 1, n % 3 != 1};
}

}  // namespace shk
