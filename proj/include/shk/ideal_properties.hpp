#pragma once

#include <map>
#include <utility>

#include "shk/decision.hpp"
#include "shk/field.hpp"
#include "shk/ideal.hpp"

namespace shk {

// deg(I : x) + 1 ≤ deg I, with the convention that the test is false when
// (I : x) is the unit ideal (x itself a generator); the recursive deciders
// use the base-case reading instead.
bool is_dividing_variable(const MonomialIdeal& ideal, int var);

// Recursive decomposition I = xJ + K over dividing variables with
// J = (I : x), K the x-free restriction, K ⊆ J; positive answers carry a
// division tree.
Decision is_vertex_divisible(const MonomialIdeal& ideal, const SearchOptions& opts = {});

// Classical recursive split requiring the disjoint exact generator split
// G(I) = xG(J) ⊎ G(K).
Decision is_vertex_splittable(const MonomialIdeal& ideal, const SearchOptions& opts = {});

// Generator-order search: every step colon (f_1..f_{j-1}) : f_j is generated
// by variables.
Decision has_linear_quotients(const MonomialIdeal& ideal, const SearchOptions& opts = {});

// Generator-order search with the per-step bound
// deg(J_j) ≤ deg I - deg f_j + 1.
Decision has_degree_quotients(const MonomialIdeal& ideal, const SearchOptions& opts = {});

// Graded Betti numbers β_{i,j} of the ideal (not of the quotient ring).
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> count
  FieldSpec field = FieldSpec::rationals();

  long long entry(int i, int j) const;
  long long total(int i) const;
  int regularity() const;            // max j - i over nonzero entries
  int projective_dimension() const;  // max i over nonzero entries
  bool operator==(const BettiTable& other) const { return entries == other.entries; }
};

BettiTable graded_betti_numbers(const MonomialIdeal& ideal, const FieldSpec& field);

struct ResolutionProfile {
  int reg = 0;
  int deg = 0;
  bool degree_resolution = false;      // reg = deg
  bool linear_resolution = false;      // equigenerated and reg = deg
  bool componentwise_linear = false;   // every squarefree degree component is linear
};

ResolutionProfile resolution_profile(const MonomialIdeal& ideal, const FieldSpec& field);

}  // namespace shk
