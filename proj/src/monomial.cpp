#include "shk/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "shk/errors.hpp"

namespace shk {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int x : e_) {
    if (x < 0) throw input_error("negative exponent");
    deg_ += x;
  }
}

Monomial Monomial::one(int nvars) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::from_support(Face support, int nvars) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  for (int id : face_ids(support)) e[static_cast<std::size_t>(id)] = 1;
  return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x <= 1; });
}

Face Monomial::support() const {
  Face s = 0;
  for (int v = 0; v < nvars(); ++v)
    if (e_[static_cast<std::size_t>(v)] > 0) s |= face_bit(v);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (int v = 0; v < nvars(); ++v)
    if (e_[static_cast<std::size_t>(v)] > other.e_[static_cast<std::size_t>(v)]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<int> e(e_);
  for (int v = 0; v < nvars(); ++v) e[static_cast<std::size_t>(v)] += other.e_[static_cast<std::size_t>(v)];
  return Monomial(std::move(e));
}

Monomial Monomial::divide_exact(const Monomial& other) const {
  std::vector<int> e(e_);
  for (int v = 0; v < nvars(); ++v) {
    e[static_cast<std::size_t>(v)] -= other.e_[static_cast<std::size_t>(v)];
    if (e[static_cast<std::size_t>(v)] < 0) throw input_error("inexact monomial division");
  }
  return Monomial(std::move(e));
}

Monomial Monomial::colon_by(const Monomial& f) const {
  std::vector<int> e(e_);
  for (int v = 0; v < nvars(); ++v)
    e[static_cast<std::size_t>(v)] = std::max(0, e_[static_cast<std::size_t>(v)] - f.e_[static_cast<std::size_t>(v)]);
  return Monomial(std::move(e));
}

Monomial Monomial::colon_by_variable(int var) const {
  std::vector<int> e(e_);
  if (e[static_cast<std::size_t>(var)] > 0) --e[static_cast<std::size_t>(var)];
  return Monomial(std::move(e));
}

Monomial Monomial::drop_variables(Face dropped) const {
  std::vector<int> e;
  e.reserve(e_.size());
  for (int v = 0; v < nvars(); ++v) {
    if (face_has(dropped, v)) {
      if (e_[static_cast<std::size_t>(v)] != 0)
        throw input_error("cannot drop a variable with nonzero exponent");
    } else {
      e.push_back(e_[static_cast<std::size_t>(v)]);
    }
  }
  return Monomial(std::move(e));
}

std::string Monomial::to_string(const VertexSet& ring) const {
  if (is_one()) return "1";
  std::string out;
  for (int v = 0; v < nvars(); ++v) {
    int e = e_[static_cast<std::size_t>(v)];
    if (e == 0) continue;
    if (!out.empty()) out += " ";
    out += ring.label(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool Monomial::canon_less(const Monomial& a, const Monomial& b) {
  if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
  for (int v = 0; v < a.nvars(); ++v) {
    int ea = a.e_[static_cast<std::size_t>(v)], eb = b.e_[static_cast<std::size_t>(v)];
    if (ea != eb) return ea > eb;
  }
  return false;
}

}  // namespace shk
