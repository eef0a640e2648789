#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hloc/adjunction.hpp"
#include "hloc/presentation.hpp"
#include "hloc/prufer.hpp"
#include "hloc/tower.hpp"

namespace hloc {

struct RelatorCheck {
  std::string relator;
  PruferElement image;
};

// Finite-stage surjection onto Z/p^d from the group obtained by adjoining a
// p^d-th root of x1 to the depth-n truncation of H.
struct NonPerfectReport {
  std::uint32_t level;
  std::uint64_t prime;
  std::uint32_t depth;
  mpz_class quotient_order;  // p^d

  Word root_word;  // image of x1 at level n
  bool root_absent_theorem = false;
  bool root_absent_exhaustive = false;

  AdjunctionGroup group;
  // Adjunction stage as a presentation: the truncation relators plus
  // t^{p^d} x1^-1, with t the last generator.
  Presentation stage;
  std::vector<RelatorCheck> relator_checks;
  // t^{p^d} x^-1 normalizes to the identity in the amalgam.
  bool relation_absorbed = false;

  PruferElement t_image;
  mpz_class t_order;
  AbelianInvariants abelianization;

  bool relators_vanish() const;
  bool verified() const;
};

// Throws DomainError for d = 0 or a non-prime p; LengthLimitExceeded when
// the promoted root word outgrows max_length.
NonPerfectReport witness_nonperfect(TowerLevel n, std::uint64_t p, std::uint32_t d,
                                    std::size_t max_length = kNoLengthLimit);

}  // namespace hloc
