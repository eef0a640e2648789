#include "hloc/word.hpp"

#include <algorithm>
#include <string>

#include "hloc/errors.hpp"

namespace hloc {

Letter::Letter(GeneratorIndex index, int sign)
    : index_(index), sign_(static_cast<std::int8_t>(sign)) {
  if (index == 0) {
    throw DomainError("generator indices start at 1");
  }
  if (sign != 1 && sign != -1) {
    throw DomainError("letter sign must be +1 or -1, got " +
                      std::to_string(sign));
  }
}

Rank::Rank(GeneratorIndex rank) : n(rank) {
  if (rank == 0) {
    throw DomainError("rank must be positive");
  }
}

WordBuilder& WordBuilder::push(Letter letter) {
  if (!stack_.empty() && stack_.back().cancels(letter)) {
    stack_.pop_back();
  } else {
    stack_.push_back(letter);
  }
  return *this;
}

WordBuilder& WordBuilder::append(Word const& w) {
  for (Letter l : w) {
    push(l);
  }
  return *this;
}

WordBuilder& WordBuilder::append_inverse(Word const& w) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    push(it->inverse());
  }
  return *this;
}

Word::Word(std::initializer_list<Letter> raw)
    : Word(reduce(std::span<Letter const>(raw.begin(), raw.size()))) {}

Word Word::reduce(std::span<Letter const> raw) {
  WordBuilder b;
  b.reserve(raw.size());
  for (Letter l : raw) {
    b.push(l);
  }
  return std::move(b).build();
}

Word Word::generator(GeneratorIndex index, int sign) {
  return Word(std::vector<Letter>{Letter(index, sign)});
}

GeneratorIndex Word::max_index() const noexcept {
  GeneratorIndex m = 0;
  for (Letter l : letters_) {
    m = std::max(m, l.index());
  }
  return m;
}

bool shortlex_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

Word multiply(Word const& a, Word const& b) {
  WordBuilder builder(a);
  builder.append(b);
  return std::move(builder).build();
}

Word invert(Word const& w) {
  WordBuilder b;
  b.reserve(w.size());
  b.append_inverse(w);
  return std::move(b).build();
}

Word conjugate(Word const& c, Word const& w) {
  WordBuilder b(c);
  b.append(w).append_inverse(c);
  return std::move(b).build();
}

Word commutator(Word const& a, Word const& b) {
  WordBuilder builder(a);
  builder.append(b).append_inverse(a).append_inverse(b);
  return std::move(builder).build();
}

CyclicDecomposition cyclic_reduce(Word const& w) {
  auto const letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word::reduce(letters.subspan(0, lo)),
          Word::reduce(letters.subspan(lo, hi - lo))};
}

bool is_cyclically_reduced(Word const& w) {
  return w.size() < 2 || !w.front().cancels(w.back());
}

// For w = r u r^-1 with u cyclically reduced, w^k = r u^k r^-1 and the
// right-hand side is already freely reduced.
Word power(Word const& w, std::int64_t k) {
  if (k == 0 || w.empty()) {
    return Word{};
  }
  auto [r, u] = cyclic_reduce(w);
  if (k < 0) {
    u = invert(u);
    k = -k;
  }
  WordBuilder b(r);
  b.reserve(2 * r.size() + static_cast<std::size_t>(k) * u.size());
  for (std::int64_t i = 0; i < k; ++i) {
    b.append(u);
  }
  b.append_inverse(r);
  return std::move(b).build();
}

std::set<GeneratorIndex> support(Word const& w) {
  std::set<GeneratorIndex> s;
  for (Letter l : w) {
    s.insert(l.index());
  }
  return s;
}

Word substitute(Word const& w, std::span<Word const> images) {
  WordBuilder b;
  for (Letter l : w) {
    if (l.index() > images.size()) {
      throw DomainError("no image given for generator x" +
                        std::to_string(l.index()));
    }
    Word const& image = images[l.index() - 1];
    if (l.sign() > 0) {
      b.append(image);
    } else {
      b.append_inverse(image);
    }
  }
  return std::move(b).build();
}

std::vector<std::int64_t> exponent_sums(Word const& w, GeneratorIndex rank) {
  std::vector<std::int64_t> sums(std::size_t{rank} + 1, 0);
  for (Letter l : w) {
    if (l.index() > rank) {
      throw DomainError("generator x" + std::to_string(l.index()) +
                        " exceeds rank " + std::to_string(rank));
    }
    sums[l.index()] += l.sign();
  }
  return sums;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter l : w) {
    h ^= static_cast<std::size_t>(l.key());
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hloc
