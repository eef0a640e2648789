#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "hloc/word.hpp"

namespace hloc {

// Text syntax: generators `x1`, `x2^-1`, juxtaposed with `*` or
// whitespace; `1` or the empty string is the identity. The parser also
// accepts integer exponents on any factor, parentheses, and commutator
// brackets `[a, b]`, all of which reduce to the plain letter syntax.
struct WordSyntax {
  char prefix = 'x';
  std::size_t max_length = kNoLengthLimit;
  // Position of text[0] in a larger document, for error reporting.
  std::size_t line = 1;
  std::size_t first_column = 1;
};

Word parse_word(std::string_view text, WordSyntax const& syntax = {});

// Canonical printing: runs of a letter are collapsed to `xi^k`, factors
// joined by `*`, identity printed as `1`. parse_word inverts it exactly.
std::string to_string(Word const& w, char prefix = 'x');

}  // namespace hloc
