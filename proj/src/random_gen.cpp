#include "shk/random_gen.hpp"

#include <algorithm>

#include "shk/errors.hpp"

namespace shk {

namespace {

std::vector<std::string> letter_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return labels;
}

Face random_subset_of_size(Rng& rng, int n, int size) {
  Face f = 0;
  while (face_card(f) < size) f |= face_bit(rng.below(n));
  return f;
}

}  // namespace

SimplicialComplex random_complex(Rng& rng, int n_vertices, int q_faces,
                                 int min_size, int max_size) {
  if (n_vertices < 1 || n_vertices > 26) throw input_error("random complex: 1..26 vertices");
  max_size = std::min(max_size, n_vertices);
  min_size = std::max(1, std::min(min_size, max_size));
  std::vector<Face> faces;
  for (int i = 0; i < q_faces; ++i)
    faces.push_back(random_subset_of_size(rng, n_vertices, rng.range(min_size, max_size)));
  return SimplicialComplex::from_faces(VertexSet::from_labels(letter_labels(n_vertices)),
                                       std::move(faces));
}

SimplicialComplex random_mdim1_complex(Rng& rng, int n_vertices, int q_faces) {
  for (int tries = 0; tries < 10000; ++tries) {
    SimplicialComplex c =
        random_complex(rng, n_vertices, q_faces, 2, std::min(n_vertices, 5));
    if (!c.is_void() && c.mdim() == 1) return c;
  }
  throw input_error("could not sample an mdim-1 complex");
}

MonomialIdeal random_squarefree_ideal(Rng& rng, int n_vars, int q_gens,
                                      int min_deg, int max_deg) {
  VertexSet ring = VertexSet::from_labels(letter_labels(n_vars));
  max_deg = std::min(max_deg, n_vars);
  min_deg = std::max(1, std::min(min_deg, max_deg));
  std::vector<Monomial> gens;
  for (int i = 0; i < q_gens; ++i)
    gens.push_back(Monomial::from_support(
        random_subset_of_size(rng, n_vars, rng.range(min_deg, max_deg)), n_vars));
  return MonomialIdeal::make(std::move(ring), std::move(gens));
}

MonomialIdeal random_nonsquarefree_ideal(Rng& rng, int n_vars, int q_gens, int max_exp) {
  VertexSet ring = VertexSet::from_labels(letter_labels(n_vars));
  while (true) {
    std::vector<Monomial> gens;
    for (int i = 0; i < q_gens; ++i) {
      std::vector<int> exps(static_cast<std::size_t>(n_vars), 0);
      int support = rng.range(1, std::min(n_vars, 4));
      for (int id : face_ids(random_subset_of_size(rng, n_vars, support)))
        exps[static_cast<std::size_t>(id)] = rng.range(1, max_exp);
      gens.emplace_back(std::move(exps));
    }
    MonomialIdeal ideal = MonomialIdeal::make(ring, std::move(gens));
    if (ideal.is_proper_nonzero() && !ideal.is_squarefree()) return ideal;
  }
}

Graph random_chordal_graph(Rng& rng, int n_vertices) {
  if (n_vertices < 1 || n_vertices > 26) throw input_error("random graph: 1..26 vertices");
  std::vector<Face> adj(static_cast<std::size_t>(n_vertices), 0);
  for (int v = 1; v < n_vertices; ++v) {
    // Grow a random clique among the existing vertices and attach v to it.
    Face clique = 0;
    int anchor = rng.below(v);
    clique |= face_bit(anchor);
    Face candidates = adj[static_cast<std::size_t>(anchor)] & (face_bit(v) - 1);
    while (candidates != 0 && rng.below(2) == 1) {
      auto ids = face_ids(candidates);
      int pick = ids[static_cast<std::size_t>(rng.below(static_cast<int>(ids.size())))];
      clique |= face_bit(pick);
      candidates &= adj[static_cast<std::size_t>(pick)];
    }
    if (rng.below(4) == 0) clique = 0;  // occasionally attach nothing
    for (int u : face_ids(clique)) {
      adj[static_cast<std::size_t>(u)] |= face_bit(v);
      adj[static_cast<std::size_t>(v)] |= face_bit(u);
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  auto labels = letter_labels(n_vertices);
  for (int a = 0; a < n_vertices; ++a)
    for (int b : face_ids(adj[static_cast<std::size_t>(a)]))
      if (a < b) edges.emplace_back(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
  return Graph::build(std::move(labels), edges);
}

Graph random_cochordal_graph(Rng& rng, int n_vertices) {
  return random_chordal_graph(rng, n_vertices).complement();
}

}  // namespace shk
