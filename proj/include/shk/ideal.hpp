#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shk/complex.hpp"
#include "shk/monomial.hpp"
#include "shk/vertex_set.hpp"

namespace shk {

// A monomial ideal given by its minimal generating set, canonically ordered.
// The zero ideal (no generators) and the unit ideal (single generator 1) are
// representable and distinguished.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal over the empty ring

  // Minimalizes and canonically orders the generators ("build_ideal").
  static MonomialIdeal make(VertexSet ring, std::vector<Monomial> generators);
  static MonomialIdeal zero(VertexSet ring);
  static MonomialIdeal unit(VertexSet ring);

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }
  bool is_principal() const { return gens_.size() == 1; }
  bool is_squarefree() const;

  // Maximum generator degree; throws input_error on the zero and unit ideals.
  int degree() const;
  // Degree with the unit ideal counted as 0 (its generating set is {1});
  // still throws on the zero ideal. Used by the recursive deciders.
  int degree_unit_zero() const;
  int min_degree() const;  // throws on zero/unit

  const VertexSet& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  Face support() const;

  bool contains(const Monomial& m) const;  // some generator divides m

  MonomialIdeal colon_variable(int var) const;           // (I : x), same ring
  MonomialIdeal colon_monomial(const Monomial& f) const;  // (I : f), same ring
  MonomialIdeal restriction_without(int var) const;       // x-free generators, same ring
  // (colon, restriction) re-interned over ring X∖{x}; throws input_error when
  // the colon ideal has a generator still divisible by x.
  std::pair<MonomialIdeal, MonomialIdeal> variable_split(int var) const;
  MonomialIdeal rering_drop(int var) const;

  bool operator==(const MonomialIdeal&) const = default;
  std::string canonical_key() const;

 private:
  VertexSet ring_;
  std::vector<Monomial> gens_;
};

// Public op `ideal_degree`.
inline int ideal_degree(const MonomialIdeal& ideal) { return ideal.degree(); }

struct BridgePair {
  MonomialIdeal stanley_reisner;  // minimal non-faces
  MonomialIdeal alexander_dual;   // facet complements
};
BridgePair stanley_reisner_bridge(const SimplicialComplex& c);

enum class IdealView { stanley_reisner, alexander_dual };
// Inverse of the bridge: the complex whose non-face ideal (resp. facet
// complement ideal) is the given squarefree proper nonzero ideal.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal, IdealView view);

enum class TruncationMode { at_least, exactly };
MonomialIdeal squarefree_truncation(const MonomialIdeal& ideal, int k, TruncationMode mode);

// Expands each variable power into a product of fresh indexed copies
// (x^e -> x~1 ... x~e); variables that never exceed exponent 1 keep their
// names, so squarefree ideals are returned unchanged.
MonomialIdeal polarize(const MonomialIdeal& ideal);

}  // namespace shk
