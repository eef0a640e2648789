#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hloc/int_matrix.hpp"
#include "hloc/word.hpp"
#include "hloc/word_io.hpp"

namespace hloc {

// < x1, ..., xn | r1, r2, ... >, every relator set equal to the identity.
class Presentation {
 public:
  Presentation(GeneratorIndex generator_count, std::vector<Word> relators = {});

  GeneratorIndex generator_count() const noexcept { return generator_count_; }
  std::vector<Word> const& relators() const noexcept { return relators_; }

  Presentation with_relator(Word relator) const;

 private:
  GeneratorIndex generator_count_;
  std::vector<Word> relators_;
};

// Text format: a `gens: n` line, then one relator per line. A line
// `a = b = c` contributes the relators a b^-1 and b c^-1. `#` starts a
// comment; blank lines are ignored.
Presentation parse_presentation(std::string_view text, std::size_t max_length = kNoLengthLimit);
std::string to_text(Presentation const& p);

// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ..., each di >= 2.
struct AbelianInvariants {
  std::vector<mpz_class> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const noexcept { return torsion.empty() && free_rank == 0; }
  // True when the group maps onto Z/order.
  bool has_cyclic_quotient(mpz_class const& order) const;
  // `Z^2 + Z/2 + Z/6`; `Z` for rank one; `0` for the trivial group.
  std::string to_string() const;

  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

// One row per relator, one column per generator: exponent sums.
IntMatrix relation_matrix(Presentation const& p);
AbelianInvariants abelianization(Presentation const& p);
bool is_perfect(Presentation const& p);

// Whether an exponent-sum vector (one entry per generator) lies in the
// integer row space of the relation matrix, i.e. maps to 0 in G_ab.
bool in_relation_lattice(Presentation const& p, std::vector<mpz_class> const& v);

// G(l, m, n) = < x, y | x^l = y^m = (xy)^n > with x = x1, y = x2.
Presentation triangle_group(std::int64_t l, std::int64_t m, std::int64_t n);
// 1/|l| + 1/|m| + 1/|n| > 1, decided exactly. Zero exponents are rejected.
bool triangle_group_is_finite(std::int64_t l, std::int64_t m, std::int64_t n);

// < x1, ..., x_{2^{n+1}-1} | x_i = [x_{2i}, x_{2i+1}], 1 <= i < 2^n >,
// the depth-n truncation of H, free on its top-level generators.
Presentation h_truncation(std::uint32_t depth);

// A homomorphism G -> Z/p read off the Smith form, as the image of each
// generator in 0..p-1. Empty when Z/p is not a quotient of G_ab.
std::optional<std::vector<std::uint64_t>> cyclic_character(Presentation const& p,
                                                           std::uint64_t prime);

// Certificate that G is not almost perfect: x_j -> g^{chi(x_j)} for a
// character chi : G ->> Z/p and an element g of order p. The composite
// G ->> G_ab ->> Z/p -> G is a homomorphism as soon as g^p = 1, and it
// is nontrivial as soon as g != 1.
struct AlmostPerfectRefutation {
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> character;
  Word element;
  std::vector<Word> images;
  // g maps to a nonzero element of G_ab, hence g != 1 in G.
  bool nontrivial_certified = false;
  // g^p freely reduces to 1 or to a cyclic permutation of a relator or
  // its inverse. Otherwise g^p = 1 is the caller's assumption.
  bool order_certified = false;

  bool refutes() const noexcept { return nontrivial_certified && order_certified; }
};

// Fails (empty) when Z/p is not a quotient of G_ab.
std::optional<AlmostPerfectRefutation> refute_almost_perfect(Presentation const& p,
                                                             std::uint64_t prime,
                                                             Word const& element);

}  // namespace hloc
