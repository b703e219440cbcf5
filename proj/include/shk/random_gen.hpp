#pragma once

#include <cstdint>
#include <random>

#include "shk/complex.hpp"
#include "shk/graph.hpp"
#include "shk/ideal.hpp"

namespace shk {

// Deterministic corpus generator. mt19937_64 output is pinned by the
// standard, and all draws reduce via modulo, so a seed fixes the corpus
// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }  // inclusive

 private:
  std::mt19937_64 eng_;
};

// q faces sampled uniformly from nonempty subsets with sizes in
// [min_size, max_size], antichain-reduced; vertices labeled a, b, c, ...
SimplicialComplex random_complex(Rng& rng, int n_vertices, int q_faces,
                                 int min_size, int max_size);

// Resamples with minimum face size 2 until mdim == 1.
SimplicialComplex random_mdim1_complex(Rng& rng, int n_vertices, int q_faces);

MonomialIdeal random_squarefree_ideal(Rng& rng, int n_vars, int q_gens,
                                      int min_deg, int max_deg);

// At least one exponent ≥ 2.
MonomialIdeal random_nonsquarefree_ideal(Rng& rng, int n_vars, int q_gens, int max_exp);

// Built by inserting each vertex adjacent to a clique of the current graph,
// so the result is chordal by construction.
Graph random_chordal_graph(Rng& rng, int n_vertices);
Graph random_cochordal_graph(Rng& rng, int n_vertices);

}  // namespace shk
