#pragma once

#include <cstdint>
#include <optional>

#include "hloc/word.hpp"

namespace hloc {

// w = root^exponent with root not a proper power and exponent maximal.
struct RootDecomposition {
  Word root;
  std::uint64_t exponent;
};

// Throws IdentityWordError on the identity.
RootDecomposition primitive_root(Word const& w);

// Some v with v^k = w, if it exists. Roots in a free group are unique.
// Every k-th root of the identity is the identity. Throws DomainError on
// k = 0.
std::optional<Word> kth_root(Word const& w, std::int64_t k);

// Generator of the (infinite cyclic) centralizer of w != 1: c commutes
// with w iff c is a power of the returned word.
Word centralizer_generator(Word const& w);

bool commutes(Word const& a, Word const& b);

}  // namespace hloc
