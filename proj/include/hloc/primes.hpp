#pragma once

#include <cstdint>
#include <string>

#include "hloc/errors.hpp"

namespace hloc {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

inline void require_prime(std::uint64_t p, char const* what) {
  if (!is_prime(p)) {
    throw DomainError(std::string(what) + ": " + std::to_string(p) +
                      " is not a prime");
  }
}

}  // namespace hloc
