#include "hloc/adjunction.hpp"

#include <cassert>
#include <cctype>
#include <limits>

#include "hloc/errors.hpp"
#include "hloc/primes.hpp"
#include "hloc/roots.hpp"

namespace hloc {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw DomainError("amalgam exponent overflow");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw DomainError("amalgam exponent overflow");
  }
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

bool in_base(AdjunctionGroup const& g, Word const& w) {
  for (Letter l : w) {
    if (l.index() < g.first_generator || l.index() > g.last_generator) {
      return false;
    }
  }
  return true;
}

void require_in_base(AdjunctionGroup const& g, Word const& w) {
  if (!in_base(g, w)) {
    throw DomainError("word uses a generator outside the base x" +
                      std::to_string(g.first_generator) + "..x" +
                      std::to_string(g.last_generator));
  }
}

// Left multiplication of a normal form by one factor.
void left_multiply(AdjunctionGroup const& g, AmalgamFactor const& factor, AmalgamElement& nf) {
  auto& syl = nf.syllables;
  if (factor.is_root) {
    std::int64_t total = checked_add(factor.t_exponent, checked_mul(g.modulus, nf.central_exponent));
    if (!syl.empty() && syl.front().is_root) {
      total = checked_add(total, syl.front().t_exponent);
      syl.erase(syl.begin());
    }
    std::int64_t const q = floor_div(total, g.modulus);
    std::int64_t const rem = total - q * g.modulus;
    nf.central_exponent = q;
    if (rem != 0) {
      syl.insert(syl.begin(), AmalgamFactor::root(rem));
    }
    return;
  }
  WordBuilder h(factor.word);
  h.append(power(g.root_of, nf.central_exponent));
  if (!syl.empty() && !syl.front().is_root) {
    h.append(syl.front().word);
    syl.erase(syl.begin());
  }
  auto [e, rep] = coset_decompose(g, std::move(h).build());
  nf.central_exponent = e;
  if (!rep.empty()) {
    syl.insert(syl.begin(), AmalgamFactor::base(std::move(rep)));
  }
}

bool better(Word const& a, Word const& b) { return shortlex_less(a, b); }

}  // namespace

std::optional<std::string> AdjunctionGroup::warning() const {
  if (requested_exponent == 1) {
    return std::nullopt;
  }
  return "root_of " + to_string(requested) + " is a proper power (exponent " +
         std::to_string(requested_exponent) + ") of " + to_string(root_of) +
         "; adjoining the root to " + to_string(root_of) + " instead";
}

AdjunctionGroup adjoin_root(GeneratorIndex base_rank, Word const& x, std::uint64_t p,
                            std::uint32_t d) {
  if (base_rank == 0) {
    throw DomainError("adjoin_root: base rank must be positive");
  }
  return adjoin_root(1, base_rank, x, p, d);
}

AdjunctionGroup adjoin_root(GeneratorIndex first, GeneratorIndex last, Word const& x,
                            std::uint64_t p, std::uint32_t d) {
  if (first == 0 || last < first) {
    throw DomainError("adjoin_root: empty base generator range");
  }
  if (x.empty()) {
    throw IdentityWordError("adjoin_root");
  }
  if (d == 0) {
    throw DomainError("adjoin_root: depth must be at least 1");
  }
  require_prime(p, "adjoin_root");
  std::int64_t modulus = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (modulus > (std::int64_t{1} << 62) / static_cast<std::int64_t>(p)) {
      throw DomainError("adjoin_root: p^d exceeds 2^62");
    }
    modulus *= static_cast<std::int64_t>(p);
  }
  AdjunctionGroup g{first, last, {}, x, 1, p, d, modulus};
  require_in_base(g, x);
  auto [root, exponent] = primitive_root(x);
  g.root_of = std::move(root);
  g.requested_exponent = exponent;
  return g;
}

CosetDecomposition coset_decompose(AdjunctionGroup const& g, Word const& f) {
  // <x> f = r <u> (r^-1 f) for x = r u r^-1 with u cyclically reduced.
  // Along u^-e f' the length is unimodal in e: it drops by |u| while a
  // whole copy of u cancels, may drop once more on a partial overlap,
  // then increases.
  auto const [r, u] = cyclic_reduce(g.root_of);
  Word const start = multiply(invert(r), f);
  Word const u_inv = invert(u);
  std::int64_t best_e = 0;
  Word best = start;
  std::size_t const max_steps = start.size() / u.size() + 2;
  for (int dir : {+1, -1}) {
    Word cur = start;
    std::int64_t e = 0;
    for (std::size_t step = 0; step < max_steps; ++step) {
      Word next = multiply(dir > 0 ? u_inv : u, cur);
      if (next.size() > cur.size()) {
        break;
      }
      e += dir;
      cur = std::move(next);
      if (better(cur, best)) {
        best = cur;
        best_e = e;
      }
    }
  }
  CosetDecomposition out{best_e, multiply(r, best)};
  assert(multiply(power(g.root_of, out.exponent), out.representative) == f);
  return out;
}

AmalgamElement amalgam_normalize(AdjunctionGroup const& g,
                                 std::span<AmalgamFactor const> expression) {
  AmalgamElement nf;
  for (auto it = expression.rbegin(); it != expression.rend(); ++it) {
    if (!it->is_root) {
      require_in_base(g, it->word);
    }
    left_multiply(g, *it, nf);
  }
  return nf;
}

AmalgamElement amalgam_multiply(AdjunctionGroup const& g, AmalgamElement const& a,
                                AmalgamElement const& b) {
  AmalgamElement nf = b;
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) {
    left_multiply(g, *it, nf);
  }
  if (a.central_exponent != 0) {
    left_multiply(g, AmalgamFactor::base(power(g.root_of, a.central_exponent)), nf);
  }
  return nf;
}

AmalgamElement amalgam_invert(AdjunctionGroup const& g, AmalgamElement const& a) {
  std::vector<AmalgamFactor> expr;
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) {
    expr.push_back(it->is_root ? AmalgamFactor::root(-it->t_exponent)
                               : AmalgamFactor::base(invert(it->word)));
  }
  if (a.central_exponent != 0) {
    expr.push_back(AmalgamFactor::base(power(g.root_of, -a.central_exponent)));
  }
  return amalgam_normalize(g, expr);
}

std::vector<AmalgamFactor> to_expression(AdjunctionGroup const& g, AmalgamElement const& e) {
  std::vector<AmalgamFactor> expr;
  if (e.central_exponent != 0) {
    expr.push_back(AmalgamFactor::base(power(g.root_of, e.central_exponent)));
  }
  expr.insert(expr.end(), e.syllables.begin(), e.syllables.end());
  return expr;
}

bool is_normal_form(AdjunctionGroup const& g, AmalgamElement const& e) {
  for (std::size_t i = 0; i < e.syllables.size(); ++i) {
    auto const& s = e.syllables[i];
    if (i > 0 && e.syllables[i - 1].is_root == s.is_root) {
      return false;
    }
    if (s.is_root) {
      if (s.t_exponent <= 0 || s.t_exponent >= g.modulus) {
        return false;
      }
    } else {
      if (s.word.empty() || !in_base(g, s.word)) {
        return false;
      }
      auto d = coset_decompose(g, s.word);
      if (d.exponent != 0 || d.representative != s.word) {
        return false;
      }
    }
  }
  return true;
}

std::vector<AmalgamFactor> parse_amalgam_expression(std::string_view text,
                                                    WordSyntax const& syntax) {
  std::vector<AmalgamFactor> out;
  std::size_t pos = 0;
  auto fail = [&](std::string const& message, std::size_t at) {
    throw ParseError(message, syntax.line, syntax.first_column + at);
  };
  auto separator = [](char c) { return c == '*' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < text.size()) {
    if (separator(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] == 't') {
      std::size_t start = pos++;
      std::int64_t exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          negative = text[pos] == '-';
          ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
          fail("expected an integer exponent after 't^'", pos);
        }
        std::int64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          int digit = text[pos] - '0';
          if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
            fail("exponent out of range", pos);
          }
          value = value * 10 + digit;
          ++pos;
        }
        exponent = negative ? -value : value;
      }
      if (pos < text.size() && !separator(text[pos])) {
        fail("unexpected character after root generator", pos);
      }
      (void)start;
      out.push_back(AmalgamFactor::root(exponent));
      continue;
    }
    // A base word runs up to the next top-level `t`.
    std::size_t start = pos;
    int depth = 0;
    while (pos < text.size() && !(depth == 0 && text[pos] == 't')) {
      if (text[pos] == '(' || text[pos] == '[') {
        ++depth;
      } else if (text[pos] == ')' || text[pos] == ']') {
        --depth;
      }
      ++pos;
    }
    std::size_t end = pos;
    while (end > start && separator(text[end - 1])) {
      --end;
    }
    WordSyntax sub = syntax;
    sub.first_column = syntax.first_column + start;
    out.push_back(AmalgamFactor::base(parse_word(text.substr(start, end - start), sub)));
  }
  return out;
}

std::string to_string(AdjunctionGroup const& g, AmalgamElement const& e) {
  std::vector<std::string> parts;
  if (e.central_exponent != 0) {
    std::string c = "(" + to_string(g.root_of) + ")";
    if (e.central_exponent != 1) {
      c += "^" + std::to_string(e.central_exponent);
    }
    parts.push_back(std::move(c));
  }
  for (auto const& s : e.syllables) {
    if (s.is_root) {
      parts.push_back(s.t_exponent == 1 ? std::string("t") : "t^" + std::to_string(s.t_exponent));
    } else {
      parts.push_back(to_string(s.word));
    }
  }
  if (parts.empty()) {
    return "1";
  }
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out += " * " + parts[i];
  }
  return out;
}

PruferElement evaluate(RootCharacter const& chi, Word const& base_word) {
  PruferElement sum(chi.t_image.prime());
  for (Letter l : base_word) {
    auto it = chi.base_images.find(l.index());
    if (it == chi.base_images.end()) {
      throw DomainError("no image given for generator x" + std::to_string(l.index()));
    }
    sum += l.sign() > 0 ? it->second : -it->second;
  }
  return sum;
}

PruferElement evaluate(AdjunctionGroup const& g, RootCharacter const& chi,
                       AmalgamElement const& e) {
  PruferElement sum = evaluate(chi, g.root_of).times(e.central_exponent);
  for (auto const& s : e.syllables) {
    sum += s.is_root ? chi.t_image.times(s.t_exponent) : evaluate(chi, s.word);
  }
  return sum;
}

RootCharacter prufer_quotient_character(AdjunctionGroup const& g) {
  RootCharacter chi{{}, PruferElement::unit_fraction(g.depth, g.prime)};
  for (GeneratorIndex i = g.first_generator; i <= g.last_generator; ++i) {
    chi.base_images.emplace(i, PruferElement(g.prime));
  }
  return chi;
}

PruferElement prufer_quotient_map(AdjunctionGroup const& g, AmalgamElement const& e) {
  return evaluate(g, prufer_quotient_character(g), e);
}

RootCharacter extend_map(AdjunctionGroup const& g,
                         std::map<GeneratorIndex, PruferElement> const& prior_images,
                         std::span<Word const> base_relators) {
  RootCharacter chi{{}, PruferElement(g.prime)};
  for (GeneratorIndex i = g.first_generator; i <= g.last_generator; ++i) {
    auto it = prior_images.find(i);
    if (it == prior_images.end()) {
      throw DomainError("extend_map: no prior image for x" + std::to_string(i));
    }
    if (it->second.prime() != g.prime) {
      throw DomainError("extend_map: prior image of x" + std::to_string(i) +
                        " lives in the Prufer group of another prime");
    }
    chi.base_images.emplace(i, it->second);
  }
  for (auto const& r : base_relators) {
    require_in_base(g, r);
    auto image = evaluate(chi, r);
    if (!image.is_zero()) {
      throw DomainError("extend_map: inconsistent prior images, relator " + to_string(r) +
                        " maps to " + image.to_string());
    }
  }
  PruferElement const x_image = evaluate(chi, g.root_of);
  if (x_image.is_zero()) {
    chi.t_image = PruferElement::unit_fraction(g.depth, g.prime);
  } else {
    chi.t_image = PruferElement(x_image.numerator(), x_image.exponent() + g.depth, g.prime);
  }
  return chi;
}

}  // namespace hloc
