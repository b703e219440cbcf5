#pragma once

#include <string>

#include "shk/complex.hpp"
#include "shk/decision.hpp"
#include "shk/ideal.hpp"

namespace shk {

struct ReplayResult {
  bool accepted = false;
  std::string reason;  // empty when accepted
};

// Wraps a certificate with its subject (serialized in the module text
// formats) and property name, producing the self-contained object that
// `--replay` consumes.
Json certificate_with_subject(const Certificate& cert, const std::string& property,
                              const SimplicialComplex& subject);
Json certificate_with_subject(const Certificate& cert, const std::string& property,
                              const MonomialIdeal& subject);

// Definition-level validation: no memoization, no search — each node or step
// is checked directly against the property's defining condition.
ReplayResult check_certificate(const Json& cert);

}  // namespace shk
