#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <set>
#include <span>
#include <vector>

namespace hloc {

using GeneratorIndex = std::uint32_t;

inline constexpr std::size_t kNoLengthLimit = std::numeric_limits<std::size_t>::max();

// One symbol x_i^{+1} or x_i^{-1}. Generators are 1-indexed.
class Letter {
 public:
  Letter(GeneratorIndex index, int sign = 1);

  GeneratorIndex index() const noexcept { return index_; }
  int sign() const noexcept { return sign_; }
  Letter inverse() const noexcept { return Letter(index_, -sign_, Trusted{}); }
  bool cancels(Letter other) const noexcept {
    return index_ == other.index_ && sign_ == -other.sign_;
  }

  // x1 < x1^-1 < x2 < x2^-1 < ...
  std::uint64_t key() const noexcept {
    return 2 * std::uint64_t{index_} + (sign_ < 0 ? 1 : 0);
  }
  friend bool operator==(Letter a, Letter b) noexcept {
    return a.index_ == b.index_ && a.sign_ == b.sign_;
  }
  friend std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
    return a.key() <=> b.key();
  }

 private:
  struct Trusted {};
  Letter(GeneratorIndex index, int sign, Trusted) noexcept
      : index_(index), sign_(static_cast<std::int8_t>(sign)) {}

  GeneratorIndex index_;
  std::int8_t sign_;
};

// Bound on generator indices: words of F_n use x1..xn.
struct Rank {
  explicit Rank(GeneratorIndex n);
  GeneratorIndex n;
};

// A freely reduced word; the empty word is the identity. Values are
// immutable once built.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> raw);

  static Word reduce(std::span<Letter const> raw);
  static Word generator(GeneratorIndex index, int sign = 1);

  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.cbegin(); }
  auto end() const noexcept { return letters_.cend(); }

  // Largest generator index used, 0 for the identity.
  GeneratorIndex max_index() const noexcept;
  bool fits(Rank rank) const noexcept { return max_index() <= rank.n; }

  // Lexicographic by Letter::key; use shortlex_less for the shortlex order.
  friend bool operator==(Word const&, Word const&) = default;
  friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

 private:
  friend class WordBuilder;
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;
};

// Accumulates letters with on-the-fly free cancellation.
class WordBuilder {
 public:
  WordBuilder() = default;
  explicit WordBuilder(Word const& start) : stack_(start.letters_) {}

  void reserve(std::size_t n) { stack_.reserve(n); }
  WordBuilder& push(Letter letter);
  WordBuilder& append(Word const& w);
  WordBuilder& append_inverse(Word const& w);
  std::size_t size() const noexcept { return stack_.size(); }
  Word build() && { return Word(std::move(stack_)); }
  Word build() const& { return Word(stack_); }

 private:
  std::vector<Letter> stack_;
};

bool shortlex_less(Word const& a, Word const& b);

Word multiply(Word const& a, Word const& b);
inline Word operator*(Word const& a, Word const& b) { return multiply(a, b); }
Word invert(Word const& w);
Word power(Word const& w, std::int64_t k);
// [a, b] = a b a^-1 b^-1.
Word commutator(Word const& a, Word const& b);
Word conjugate(Word const& conjugator, Word const& w);  // c w c^-1

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicDecomposition {
  Word conjugator;
  Word core;
};
CyclicDecomposition cyclic_reduce(Word const& w);
bool is_cyclically_reduced(Word const& w);

std::set<GeneratorIndex> support(Word const& w);

// Homomorphic image of w under x_i -> images[i - 1]. Throws DomainError
// when w uses a generator without an image.
Word substitute(Word const& w, std::span<Word const> images);

// Exponent sum of each generator 1..rank (index 0 unused).
std::vector<std::int64_t> exponent_sums(Word const& w, GeneratorIndex rank);

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

}  // namespace hloc
