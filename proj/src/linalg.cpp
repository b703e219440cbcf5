#include "shk/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "shk/errors.hpp"

namespace shk {

namespace {

using BigInt = boost::multiprecision::cpp_int;

long rank_bareiss(const IntMatrix& m) {
  const int rows = m.rows, cols = m.cols;
  std::vector<BigInt> w(m.a.begin(), m.a.end());
  auto at = [&](int r, int c) -> BigInt& {
    return w[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
  };
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

long long mod_pow(long long base, long long exp, long long p) {
  long long acc = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

long rank_mod_p(const IntMatrix& m, long long p) {
  const int rows = m.rows, cols = m.cols;
  std::vector<long long> w(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    long long v = m.a[i] % p;
    if (v < 0) v += p;
    w[i] = v;
  }
  auto at = [&](int r, int c) -> long long& {
    return w[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
  };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
    long long inv = mod_pow(at(r, c), p - 2, p);
    for (int i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      long long factor = at(i, c) * inv % p;
      for (int j = c; j < cols; ++j) {
        at(i, j) = (at(i, j) - factor * at(r, j)) % p;
        if (at(i, j) < 0) at(i, j) += p;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime(int p) {
  if (p != 2 && p != 3 && p != 32003)
    throw input_error("unsupported field characteristic: " + std::to_string(p));
  return FieldSpec(p);
}

std::optional<FieldSpec> FieldSpec::parse(std::string_view name) {
  if (name == "q" || name == "Q" || name == "rationals") return rationals();
  if (name == "gf2") return prime(2);
  if (name == "gf3") return prime(3);
  if (name == "gf32003") return prime(32003);
  return std::nullopt;
}

std::string FieldSpec::name() const {
  if (is_rationals()) return "q";
  return "gf" + std::to_string(p_);
}

long rank_over(const IntMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.is_rationals()) return rank_bareiss(m);
  return rank_mod_p(m, field.characteristic());
}

}  // namespace shk
