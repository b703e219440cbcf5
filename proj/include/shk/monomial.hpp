#pragma once

#include <string>
#include <vector>

#include "shk/vertex_set.hpp"

namespace shk {

// A monomial as a dense exponent vector over a fixed variable universe.
// The empty product (all exponents zero) is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars);
  static Monomial from_support(Face support, int nvars);

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  bool is_squarefree() const;
  int exponent(int var) const { return e_[static_cast<std::size_t>(var)]; }
  Face support() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial divide_exact(const Monomial& other) const;  // other must divide this
  // this / gcd(this, f): the generator image in a colon ideal.
  Monomial colon_by(const Monomial& f) const;
  Monomial colon_by_variable(int var) const;
  // Reindex after removing variables in `dropped` (exponents there must be 0).
  Monomial drop_variables(Face dropped) const;

  std::string to_string(const VertexSet& ring) const;

  bool operator==(const Monomial&) const = default;

  // Canonical order: by degree, then word-lexicographically (at the first
  // differing variable, the larger exponent sorts first, so a·a < a·b).
  static bool canon_less(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

}  // namespace shk
