#include "hloc/word_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

#include "hloc/errors.hpp"

namespace hloc {
namespace {

class WordParser {
 public:
  WordParser(std::string_view text, WordSyntax const& syntax)
      : text_(text), syntax_(syntax) {}

  Word parse() {
    skip_space();
    if (at_end()) {
      return Word{};
    }
    Word w = expression();
    skip_space();
    if (!at_end()) {
      fail("unexpected character '" + std::string(1, peek()) + "'");
    }
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::string const& message) const {
    throw ParseError(message, syntax_.line, syntax_.first_column + pos_);
  }

  bool starts_term() const {
    if (at_end()) {
      return false;
    }
    char c = peek();
    return c == syntax_.prefix || c == '1' || c == '(' || c == '[';
  }

  Word expression() {
    Word acc = term();
    for (;;) {
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        acc = checked(multiply(acc, term()));
      } else if (starts_term()) {
        acc = checked(multiply(acc, term()));
      } else {
        return acc;
      }
    }
  }

  Word term() {
    Word base = atom();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      std::int64_t k = integer();
      auto [r, u] = cyclic_reduce(base);
      std::uint64_t magnitude = k < 0 ? 0 - static_cast<std::uint64_t>(k)
                                      : static_cast<std::uint64_t>(k);
      std::size_t const limit = syntax_.max_length;
      std::size_t const fixed = 2 * r.size();
      if (!u.empty() &&
          (fixed > limit || magnitude > (limit - fixed) / u.size())) {
        std::size_t const max = std::numeric_limits<std::size_t>::max();
        std::size_t required =
            magnitude > (max - fixed) / u.size() ? max
                                                 : fixed + magnitude * u.size();
        throw LengthLimitExceeded(required, limit);
      }
      return power(base, k);
    }
    return base;
  }

  Word atom() {
    skip_space();
    if (at_end()) {
      fail("expected a generator, '1', '(' or '['");
    }
    char c = peek();
    if (c == syntax_.prefix) {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail(std::string("expected a generator number after '") +
             syntax_.prefix + "'");
      }
      std::size_t start = pos_;
      std::uint64_t index = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        index = index * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (index > std::numeric_limits<GeneratorIndex>::max()) {
          pos_ = start;
          fail("generator index out of range");
        }
        ++pos_;
      }
      if (index == 0) {
        pos_ = start;
        fail("generator indices start at 1");
      }
      return Word::generator(static_cast<GeneratorIndex>(index));
    }
    if (c == '1') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("only '1' denotes the identity");
      }
      return Word{};
    }
    if (c == '(') {
      ++pos_;
      skip_space();
      Word inner = (!at_end() && peek() == ')') ? Word{} : expression();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word a = expression();
      expect(',');
      Word b = expression();
      expect(']');
      return checked(commutator(a, b));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::int64_t integer() {
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an integer exponent");
    }
    std::size_t start = pos_;
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      int digit = peek() - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("exponent out of range");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Word checked(Word w) const {
    if (w.size() > syntax_.max_length) {
      throw LengthLimitExceeded(w.size(), syntax_.max_length);
    }
    return w;
  }

  std::string_view text_;
  WordSyntax const& syntax_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, WordSyntax const& syntax) {
  Word w = WordParser(text, syntax).parse();
  if (w.size() > syntax.max_length) {
    throw LengthLimitExceeded(w.size(), syntax.max_length);
  }
  return w;
}

std::string to_string(Word const& w, char prefix) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  auto const letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += prefix;
    out += std::to_string(letters[i].index());
    std::int64_t run = static_cast<std::int64_t>(j - i) * letters[i].sign();
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    i = j;
  }
  return out;
}

}  // namespace hloc
