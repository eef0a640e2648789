#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hloc {

// a / p^k in Z[1/p]/Z, kept canonical: 0 <= a < p^k and p does not
// divide a, or a = k = 0 for zero. The element has order p^k.
class PruferElement {
 public:
  // Zero in Z_{p^infinity}. Throws DomainError unless p is prime.
  explicit PruferElement(std::uint64_t prime);
  // numerator / prime^exponent reduced mod 1; any integer numerator.
  PruferElement(mpz_class numerator, std::uint32_t exponent, std::uint64_t prime);

  static PruferElement unit_fraction(std::uint32_t exponent, std::uint64_t prime) {
    return PruferElement(1, exponent, prime);
  }

  mpz_class const& numerator() const noexcept { return numerator_; }
  std::uint32_t exponent() const noexcept { return exponent_; }
  std::uint64_t prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return exponent_ == 0; }
  // p^exponent
  mpz_class order() const;

  PruferElement operator-() const;
  PruferElement& operator+=(PruferElement const& other);
  friend PruferElement operator+(PruferElement a, PruferElement const& b) { return a += b; }
  friend PruferElement operator-(PruferElement a, PruferElement const& b) { return a += -b; }
  PruferElement times(mpz_class const& k) const;

  // `0` or `a/b` with b = p^k written out in decimal.
  std::string to_string() const;

  friend bool operator==(PruferElement const&, PruferElement const&) = default;

 private:
  void canonicalize();

  mpz_class numerator_;
  std::uint32_t exponent_ = 0;
  std::uint64_t prime_;
};

// Throws DomainError on mismatched primes.
PruferElement prufer_add(PruferElement const& a, PruferElement const& b);

// Accepts `0`, `a/b` (b a power of p, a any integer) and plain integers.
// Throws ParseError.
PruferElement parse_prufer(std::string_view text, std::uint64_t prime);

mpz_class prime_power(std::uint64_t p, std::uint32_t k);

}  // namespace hloc
