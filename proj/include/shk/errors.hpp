#pragma once

#include <stdexcept>
#include <string>

namespace shk {

// Malformed or out-of-contract input: unknown vertex, bad file syntax,
// precondition violation (void complex, zero ideal, ...).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds the exact-computation limits (vertex count, search width,
// face enumeration work bound).
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace shk
