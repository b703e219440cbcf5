#include "shk/homology.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "shk/errors.hpp"
#include "shk/ideal.hpp"
#include "shk/ideal_properties.hpp"
#include "shk/linalg.hpp"

namespace shk {

namespace {

std::string facets_key(const std::vector<Face>& facets) {
  std::string key;
  key.reserve(facets.size() * 8);
  for (Face f : facets)
    for (int i = 0; i < 8; ++i) key.push_back(static_cast<char>((f >> (8 * i)) & 0xff));
  return key;
}

// Boundary matrix from level c (columns) to level c-1 (rows); the sign of
// dropping the k-th smallest vertex is (-1)^k.
IntMatrix boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  std::unordered_map<Face, int> row_index;
  row_index.reserve(lower.size() * 2);
  for (std::size_t i = 0; i < lower.size(); ++i) row_index[lower[i]] = static_cast<int>(i);
  IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (std::size_t j = 0; j < upper.size(); ++j) {
    Face f = upper[j];
    int pos = 0, sign = 1;
    Face rest = f;
    while (rest) {
      Face low = rest & (~rest + 1);
      m.at(row_index.at(f ^ low), static_cast<int>(j)) = sign;
      rest ^= low;
      sign = -sign;
      ++pos;
    }
    (void)pos;
  }
  return m;
}

}  // namespace

HomologyProfile reduced_homology_of_facets(const std::vector<Face>& facets,
                                           const FieldSpec& field,
                                           HomologyCache* cache) {
  if (facets.empty()) throw input_error("homology of the void complex");
  std::string key;
  if (cache) {
    key = field.name() + ":" + facets_key(facets);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
  }

  int top = 0;
  for (Face f : facets) top = std::max(top, face_card(f));
  std::vector<std::vector<Face>> level(static_cast<std::size_t>(top + 1));
  for (Face f : all_faces_of(facets)) level[static_cast<std::size_t>(face_card(f))].push_back(f);
  // all_faces_of returns canonical order, so each level is already sorted.

  std::vector<long> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[c] = rank ∂_c, ∂_0 = 0
  for (int c = 1; c <= top; ++c) {
    IntMatrix b = boundary_matrix(level[static_cast<std::size_t>(c - 1)],
                                  level[static_cast<std::size_t>(c)]);
    ranks[static_cast<std::size_t>(c)] = rank_over(b, field);
  }

  HomologyProfile prof;
  prof.ranks.resize(static_cast<std::size_t>(top + 1), 0);
  for (int c = 0; c <= top; ++c) {
    long long n = static_cast<long long>(level[static_cast<std::size_t>(c)].size());
    prof.ranks[static_cast<std::size_t>(c)] =
        n - ranks[static_cast<std::size_t>(c)] - ranks[static_cast<std::size_t>(c + 1)];
  }
  if (cache) (*cache)[key] = prof;
  return prof;
}

HomologyProfile reduced_homology_ranks(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw input_error("homology of the void complex");
  return reduced_homology_of_facets(c.facets(), field);
}

bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw input_error("Cohen-Macaulay test on the void complex");
  if (!c.is_pure()) return false;
  const int d = c.dim();
  HomologyCache cache;
  for (Face sigma : c.all_faces()) {
    int link_dim = d - face_card(sigma);
    if (link_dim <= 0) continue;  // homology below dimension 0 vanishes trivially
    std::vector<Face> lk = link_facets(c.facets(), sigma);
    HomologyProfile prof = reduced_homology_of_facets(lk, field, &cache);
    for (int i = -1; i < link_dim; ++i)
      if (prof.rank_at(i) != 0) return false;
  }
  return true;
}

bool is_initially_cm(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw input_error("initially-CM test on the void complex");
  return is_cohen_macaulay(c.skeleton(c.mdim(), SkeletonMode::pure), field);
}

bool is_sequentially_cm(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw input_error("sequentially-CM test on the void complex");
  for (int j = 0; j <= c.dim(); ++j)
    if (!is_cohen_macaulay(c.skeleton(j, SkeletonMode::pure), field)) return false;
  return true;
}

int depth(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw input_error("depth of the void complex");
  if (c.vertices().size() == 0) throw input_error("depth needs a nonempty ambient set");
  BridgePair bridge = stanley_reisner_bridge(c);
  const int n = c.vertices().size();
  if (bridge.stanley_reisner.is_zero()) return n;  // full simplex: polynomial ring
  BettiTable table = graded_betti_numbers(bridge.stanley_reisner, field);
  // pd of the face ring is one more than pd of its non-face ideal.
  return n - (table.projective_dimension() + 1);
}

}  // namespace shk
