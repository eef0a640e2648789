#include "hloc/prufer.hpp"

#include <cctype>

#include "hloc/errors.hpp"
#include "hloc/primes.hpp"

namespace hloc {

mpz_class prime_power(std::uint64_t p, std::uint32_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
  return r;
}

PruferElement::PruferElement(std::uint64_t prime) : numerator_(0), prime_(prime) {
  require_prime(prime, "Prufer group");
}

PruferElement::PruferElement(mpz_class numerator, std::uint32_t exponent, std::uint64_t prime)
    : numerator_(std::move(numerator)), exponent_(exponent), prime_(prime) {
  require_prime(prime, "Prufer group");
  canonicalize();
}

void PruferElement::canonicalize() {
  mpz_class const p(static_cast<unsigned long>(prime_));
  mpz_class const denominator = prime_power(prime_, exponent_);
  mpz_fdiv_r(numerator_.get_mpz_t(), numerator_.get_mpz_t(), denominator.get_mpz_t());
  while (exponent_ > 0 && mpz_divisible_p(numerator_.get_mpz_t(), p.get_mpz_t())) {
    numerator_ /= p;
    --exponent_;
  }
  if (exponent_ == 0) {
    numerator_ = 0;
  }
}

mpz_class PruferElement::order() const { return prime_power(prime_, exponent_); }

PruferElement PruferElement::operator-() const {
  return PruferElement(-numerator_, exponent_, prime_);
}

PruferElement& PruferElement::operator+=(PruferElement const& other) {
  if (other.prime_ != prime_) {
    throw DomainError("Prufer addition: mismatched primes " + std::to_string(prime_) +
                      " and " + std::to_string(other.prime_));
  }
  if (other.exponent_ > exponent_) {
    numerator_ *= prime_power(prime_, other.exponent_ - exponent_);
    exponent_ = other.exponent_;
    numerator_ += other.numerator_;
  } else {
    numerator_ += other.numerator_ * prime_power(prime_, exponent_ - other.exponent_);
  }
  canonicalize();
  return *this;
}

PruferElement PruferElement::times(mpz_class const& k) const {
  return PruferElement(numerator_ * k, exponent_, prime_);
}

std::string PruferElement::to_string() const {
  if (is_zero()) {
    return "0";
  }
  return numerator_.get_str() + "/" + order().get_str();
}

PruferElement prufer_add(PruferElement const& a, PruferElement const& b) { return a + b; }

PruferElement parse_prufer(std::string_view text, std::uint64_t prime) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      s.remove_prefix(1);
    }
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        return false;
      }
    }
    return true;
  };
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer(num)) {
    throw ParseError("expected an integer numerator", 1, 1);
  }
  mpz_class numerator(std::string(num.front() == '+' ? num.substr(1) : num));
  if (slash == std::string_view::npos) {
    return PruferElement(numerator, 0, prime);
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("expected a positive denominator", 1, slash + 2);
  }
  mpz_class denominator{std::string(den)};
  std::uint32_t k = 0;
  mpz_class const p(static_cast<unsigned long>(prime));
  while (denominator > 1 && mpz_divisible_p(denominator.get_mpz_t(), p.get_mpz_t())) {
    denominator /= p;
    ++k;
  }
  if (denominator != 1) {
    throw ParseError("denominator is not a power of " + std::to_string(prime), 1, slash + 2);
  }
  return PruferElement(numerator, k, prime);
}

}  // namespace hloc
