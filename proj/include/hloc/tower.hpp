#pragma once

// The perfect group H = < x1, x2, ... | x_i = [x_{2i}, x_{2i+1}] > as the
// colimit F_1 -> F_2 -> F_4 -> ... of free groups. Level n hosts the free
// group on x_{2^n}, ..., x_{2^{n+1}-1} and phi_n sends x_i to
// [x_{2i}, x_{2i+1}].
//
// The single-level map F_m -> F_{2m}, x_j -> [x_{2j-1}, x_{2j}] on
// 1-indexed generators is the same map after the relabelling
// x_i <-> x_{i - 2^n + 1} at level n (see local_index / global_index);
// everything here uses the colimit indices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hloc/word.hpp"

namespace hloc {

struct TowerLevel {
  static constexpr std::uint32_t kMax = 30;

  explicit TowerLevel(std::uint32_t n);

  GeneratorIndex first_generator() const noexcept { return GeneratorIndex{1} << n; }
  GeneratorIndex last_generator() const noexcept {
    return (GeneratorIndex{2} << n) - 1;
  }
  GeneratorIndex generator_count() const noexcept { return GeneratorIndex{1} << n; }
  TowerLevel next() const { return TowerLevel(n + 1); }

  friend bool operator==(TowerLevel, TowerLevel) = default;
  friend auto operator<=>(TowerLevel, TowerLevel) = default;

  std::uint32_t n;
};

bool valid_at(TowerLevel level, Word const& w);
GeneratorIndex local_index(TowerLevel level, GeneratorIndex global);
GeneratorIndex global_index(TowerLevel level, GeneratorIndex local);

// Throws DomainError if w is not a level-n word, LengthLimitExceeded if
// the image would be longer than max_length.
Word phi(TowerLevel n, Word const& w, std::size_t max_length = kNoLengthLimit);

// The unique w with phi_n(w) = u, if u lies in the image.
std::optional<Word> phi_preimage(TowerLevel n, Word const& u);

// v with v^k = w and phi_n(v) = kth_root(phi_n(w), k), obtained by
// pulling the root of phi_n(w) back through phi_n. Empty when phi_n(w)
// has no k-th root (and then neither has w).
std::optional<Word> root_transfer(TowerLevel n, Word const& w, std::int64_t k);

// An element of H represented at some level. Two elements are equal when
// they agree after promotion to a common level; normalize() produces the
// lowest-level representative.
struct TowerElement {
  TowerLevel level;
  Word word;

  friend bool operator==(TowerElement const& a, TowerElement const& b);
};

TowerElement promote(TowerElement const& e, TowerLevel target,
                     std::size_t max_length = kNoLengthLimit);
TowerElement normalize(TowerLevel level, Word const& w);
bool is_canonical(TowerElement const& e);
TowerElement h_multiply(TowerElement const& a, TowerElement const& b,
                        std::size_t max_length = kNoLengthLimit);
TowerElement h_invert(TowerElement const& e);

enum class RootSearch {
  // Decide at the element's own level; root_transfer carries the answer
  // to every higher level.
  Theorem,
  // Test kth_root separately at every level up to max_level.
  Exhaustive,
};

enum class RootVerdict {
  RootFound,
  NoRootProven,
  NoRootThroughLevel,
};

struct RootCertificate {
  RootVerdict verdict;
  RootSearch mode;
  std::uint64_t prime;
  TowerLevel base_level;
  TowerLevel max_level;
  // Level at which the root search failed (theorem mode) or the level of
  // the first root found.
  TowerLevel decisive_level;
  std::optional<TowerElement> witness;
  // Exhaustive mode: root existence at base_level, ..., max_level.
  std::vector<bool> per_level;
};

RootCertificate has_p_root_in_H(TowerElement const& e, std::uint64_t p,
                                TowerLevel max_level,
                                RootSearch mode = RootSearch::Theorem,
                                std::size_t max_length = kNoLengthLimit);

// Both certificates reach the same conclusion, and in exhaustive mode
// every level agrees.
bool certificates_agree(RootCertificate const& theorem,
                        RootCertificate const& exhaustive);

struct CentralizerCheck {
  Word generator;        // generates C(w) at level n
  Word image_generator;  // generates C(phi_n(w)) at level n + 1
  Word phi_of_generator;
  bool compatible;
};

CentralizerCheck centralizer_check(TowerLevel n, Word const& w);
inline bool centralizer_compat(TowerLevel n, Word const& w) {
  return centralizer_check(n, w).compatible;
}

}  // namespace hloc
