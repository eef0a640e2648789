#pragma once

// One stage of adjoining p-power roots: for a free group F on a
// contiguous block of generators and a nontrivial x in F,
//
//   G = < F, t | t^{p^d} = x > = F *_<x> <t>,   x <-> t^{p^d}.
//
// Elements are kept in amalgamated normal form
//
//   x^e * s_1 * s_2 * ... * s_m
//
// where the s_i alternate between the two factors, each base syllable is
// the canonical representative of a nontrivial right coset <x> f, and
// each root syllable is t^j with 0 < j < p^d.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hloc/prufer.hpp"
#include "hloc/word.hpp"
#include "hloc/word_io.hpp"

namespace hloc {

struct AdjunctionGroup {
  GeneratorIndex first_generator;
  GeneratorIndex last_generator;
  // Primitive element receiving the root.
  Word root_of;
  // What the caller asked for; requested = root_of^requested_exponent.
  Word requested;
  std::uint64_t requested_exponent;
  std::uint64_t prime;
  std::uint32_t depth;
  // p^depth
  std::int64_t modulus;

  std::optional<std::string> warning() const;
};

// Base free group on x1..x_base_rank. A proper power v^k is rebased onto
// its primitive root v (see AdjunctionGroup::warning). Throws on x = 1,
// d = 0, p not prime, or p^d overflowing 62 bits.
AdjunctionGroup adjoin_root(GeneratorIndex base_rank, Word const& x, std::uint64_t p,
                            std::uint32_t d);
// Base free group on x_first..x_last.
AdjunctionGroup adjoin_root(GeneratorIndex first, GeneratorIndex last, Word const& x,
                            std::uint64_t p, std::uint32_t d);

// A factor of an unnormalized product: a base word or t^exponent.
struct AmalgamFactor {
  static AmalgamFactor base(Word w) { return {false, std::move(w), 0}; }
  static AmalgamFactor root(std::int64_t exponent) { return {true, Word{}, exponent}; }

  bool is_root;
  Word word;
  std::int64_t t_exponent;

  friend bool operator==(AmalgamFactor const&, AmalgamFactor const&) = default;
};

struct AmalgamElement {
  std::int64_t central_exponent = 0;
  std::vector<AmalgamFactor> syllables;

  bool is_identity() const noexcept { return central_exponent == 0 && syllables.empty(); }
  friend bool operator==(AmalgamElement const&, AmalgamElement const&) = default;
};

// f = x^e * r with r the least word of <x> f in (length, lexicographic)
// order.
struct CosetDecomposition {
  std::int64_t exponent;
  Word representative;
};
CosetDecomposition coset_decompose(AdjunctionGroup const& g, Word const& f);

AmalgamElement amalgam_normalize(AdjunctionGroup const& g,
                                 std::span<AmalgamFactor const> expression);
AmalgamElement amalgam_multiply(AdjunctionGroup const& g, AmalgamElement const& a,
                                AmalgamElement const& b);
AmalgamElement amalgam_invert(AdjunctionGroup const& g, AmalgamElement const& a);
// Normal-form syllables as a product expression (the central part first).
std::vector<AmalgamFactor> to_expression(AdjunctionGroup const& g, AmalgamElement const& e);
bool is_normal_form(AdjunctionGroup const& g, AmalgamElement const& e);

// Products of base words and powers of `t`, e.g. `x2 * t^3 * [x1,x2]`.
std::vector<AmalgamFactor> parse_amalgam_expression(std::string_view text,
                                                    WordSyntax const& syntax = {});
// `1`, or syllables joined by ` * ` with the central part as `(x)^e`.
std::string to_string(AdjunctionGroup const& g, AmalgamElement const& e);

// A homomorphism G -> Z_{p^infinity} given by generator images.
struct RootCharacter {
  std::map<GeneratorIndex, PruferElement> base_images;
  PruferElement t_image;
};

PruferElement evaluate(RootCharacter const& chi, Word const& base_word);
PruferElement evaluate(AdjunctionGroup const& g, RootCharacter const& chi,
                       AmalgamElement const& e);

// Base generators to 0 and t to 1/p^d.
RootCharacter prufer_quotient_character(AdjunctionGroup const& g);
PruferElement prufer_quotient_map(AdjunctionGroup const& g, AmalgamElement const& e);

// Extends a homomorphism on the base (given on every base generator,
// checked on the supplied base relators) across the adjunction. When x
// maps to a/p^k, t maps to a/p^{k+d} (or to 1/p^d when k = 0), which has
// order p^{k+d} and p^d-th multiple equal to the image of x. Throws
// DomainError if some relator does not map to 0.
RootCharacter extend_map(AdjunctionGroup const& g,
                         std::map<GeneratorIndex, PruferElement> const& prior_images,
                         std::span<Word const> base_relators = {});

}  // namespace hloc
