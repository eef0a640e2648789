#include "hloc/roots.hpp"

#include "hloc/errors.hpp"

namespace hloc {
namespace {

// Smallest d dividing |u| with u equal to the (|u|/d)-th power of its
// length-d prefix.
std::size_t smallest_period(Word const& u) {
  std::size_t const n = u.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) {
      continue;
    }
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = u[i] == u[i - d];
    }
    if (periodic) {
      return d;
    }
  }
  return n;
}

}  // namespace

RootDecomposition primitive_root(Word const& w) {
  if (w.empty()) {
    throw IdentityWordError("primitive_root");
  }
  auto [r, u] = cyclic_reduce(w);
  std::size_t const d = smallest_period(u);
  Word s = Word::reduce(u.letters().subspan(0, d));
  return {conjugate(r, s), u.size() / d};
}

std::optional<Word> kth_root(Word const& w, std::int64_t k) {
  if (k == 0) {
    throw DomainError("kth_root: k must be nonzero");
  }
  if (w.empty()) {
    return Word{};
  }
  auto [root, exponent] = primitive_root(w);
  std::uint64_t const magnitude =
      k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  if (exponent % magnitude != 0) {
    return std::nullopt;
  }
  auto const e = static_cast<std::int64_t>(exponent / magnitude);
  return power(root, k < 0 ? -e : e);
}

Word centralizer_generator(Word const& w) {
  if (w.empty()) {
    throw IdentityWordError("centralizer_generator");
  }
  return primitive_root(w).root;
}

bool commutes(Word const& a, Word const& b) {
  return multiply(a, b) == multiply(b, a);
}

}  // namespace hloc
