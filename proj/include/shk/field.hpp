#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace shk {

// Coefficient field for homological computations: the rationals or GF(p)
// with p in {2, 3, 32003}.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(int p);  // throws input_error on unsupported p
  static std::optional<FieldSpec> parse(std::string_view name);  // q, gf2, gf3, gf32003

  bool is_rationals() const { return p_ == 0; }
  int characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(int p) : p_(p) {}
  int p_ = 0;
};

}  // namespace shk
