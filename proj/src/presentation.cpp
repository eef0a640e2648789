#include "hloc/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hloc/errors.hpp"
#include "hloc/primes.hpp"
#include "hloc/smith.hpp"

namespace hloc {
namespace {

mpz_class diagonal_entry(IntMatrix const& d, std::size_t k) {
  return k < std::min(d.rows(), d.cols()) ? d(k, k) : mpz_class(0);
}

std::vector<Word> rotations(Word const& w) {
  Word core = cyclic_reduce(w).core;
  std::vector<Word> out;
  auto const letters = core.letters();
  std::vector<Letter> buffer(letters.begin(), letters.end());
  for (std::size_t i = 0; i < std::max<std::size_t>(1, buffer.size()); ++i) {
    out.push_back(Word::reduce(buffer));
    if (!buffer.empty()) {
      std::rotate(buffer.begin(), buffer.begin() + 1, buffer.end());
    }
  }
  return out;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Presentation::Presentation(GeneratorIndex generator_count, std::vector<Word> relators)
    : generator_count_(generator_count), relators_(std::move(relators)) {
  if (generator_count == 0) {
    throw DomainError("a presentation needs at least one generator");
  }
  for (auto const& r : relators_) {
    if (r.max_index() > generator_count_) {
      throw DomainError("relator uses x" + std::to_string(r.max_index()) +
                        " but the presentation has " +
                        std::to_string(generator_count_) + " generators");
    }
  }
}

Presentation Presentation::with_relator(Word relator) const {
  auto rels = relators_;
  rels.push_back(std::move(relator));
  return Presentation(generator_count_, std::move(rels));
}

Presentation parse_presentation(std::string_view text, std::size_t max_length) {
  std::optional<GeneratorIndex> gens;
  std::vector<Word> relators;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t column = 1;
    std::string_view content = trim(line, column);
    if (content.empty()) {
      if (text.empty()) {
        break;
      }
      continue;
    }
    if (!gens) {
      constexpr std::string_view kHeader = "gens:";
      if (content.substr(0, kHeader.size()) != kHeader) {
        throw ParseError("expected a 'gens: n' header", line_no, column);
      }
      std::size_t value_column = column + kHeader.size();
      std::string_view value = trim(content.substr(kHeader.size()), value_column);
      std::uint64_t n = 0;
      if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw ParseError("expected a generator count", line_no, value_column);
      }
      for (char c : value) {
        n = n * 10 + static_cast<std::uint64_t>(c - '0');
        if (n > 1'000'000'000) {
          throw ParseError("generator count out of range", line_no, value_column);
        }
      }
      if (n == 0) {
        throw ParseError("generator count must be positive", line_no, value_column);
      }
      gens = static_cast<GeneratorIndex>(n);
      continue;
    }

    std::vector<Word> sides;
    std::size_t start = 0;
    for (;;) {
      std::size_t eq = content.find('=', start);
      std::string_view part = content.substr(start, eq == std::string_view::npos ? eq : eq - start);
      std::size_t part_column = column + start;
      std::string_view body = trim(part, part_column);
      if (body.empty()) {
        throw ParseError("empty side of an equality", line_no, part_column);
      }
      WordSyntax syntax;
      syntax.line = line_no;
      syntax.first_column = part_column;
      syntax.max_length = max_length;
      Word w = parse_word(body, syntax);
      if (w.max_index() > *gens) {
        throw ParseError("generator x" + std::to_string(w.max_index()) +
                             " exceeds 'gens: " + std::to_string(*gens) + "'",
                         line_no, part_column);
      }
      sides.push_back(std::move(w));
      if (eq == std::string_view::npos) {
        break;
      }
      start = eq + 1;
    }
    if (sides.size() == 1) {
      relators.push_back(std::move(sides.front()));
    } else {
      for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
        relators.push_back(multiply(sides[i], invert(sides[i + 1])));
      }
    }
  }
  if (!gens) {
    throw ParseError("missing 'gens: n' header", line_no, 1);
  }
  return Presentation(*gens, std::move(relators));
}

std::string to_text(Presentation const& p) {
  std::string out = "gens: " + std::to_string(p.generator_count()) + "\n";
  for (auto const& r : p.relators()) {
    out += to_string(r);
    out += '\n';
  }
  return out;
}

bool AbelianInvariants::has_cyclic_quotient(mpz_class const& order) const {
  if (order == 1 || free_rank > 0) {
    return true;
  }
  return std::any_of(torsion.begin(), torsion.end(), [&](mpz_class const& d) {
    return mpz_divisible_p(d.get_mpz_t(), order.get_mpz_t()) != 0;
  });
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) {
    parts.push_back("Z");
  } else if (free_rank > 1) {
    parts.push_back("Z^" + std::to_string(free_rank));
  }
  for (auto const& d : torsion) {
    parts.push_back("Z/" + d.get_str());
  }
  if (parts.empty()) {
    return "0";
  }
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out += " + " + parts[i];
  }
  return out;
}

IntMatrix relation_matrix(Presentation const& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    auto sums = exponent_sums(p.relators()[i], p.generator_count());
    for (std::size_t j = 0; j < p.generator_count(); ++j) {
      m(i, j) = static_cast<long>(sums[j + 1]);
    }
  }
  return m;
}

AbelianInvariants abelianization(Presentation const& p) {
  SmithForm s = smith_normal_form(relation_matrix(p));
  AbelianInvariants inv;
  for (std::size_t k = 0; k < p.generator_count(); ++k) {
    mpz_class d = diagonal_entry(s.diagonal, k);
    if (d == 0) {
      ++inv.free_rank;
    } else if (d > 1) {
      inv.torsion.push_back(d);
    }
  }
  return inv;
}

bool is_perfect(Presentation const& p) {
  return abelianization(p).is_trivial();
}

bool in_relation_lattice(Presentation const& p, std::vector<mpz_class> const& v) {
  if (v.size() != p.generator_count()) {
    throw DomainError("exponent vector length does not match the generator count");
  }
  SmithForm s = smith_normal_form(relation_matrix(p));
  // v = a M  <=>  v V = (a U^-1) D.
  for (std::size_t k = 0; k < v.size(); ++k) {
    mpz_class coord = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      coord += v[j] * s.right(j, k);
    }
    mpz_class d = diagonal_entry(s.diagonal, k);
    if (d == 0 ? coord != 0 : !mpz_divisible_p(coord.get_mpz_t(), d.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

Presentation triangle_group(std::int64_t l, std::int64_t m, std::int64_t n) {
  Word const x = Word::generator(1);
  Word const y = Word::generator(2);
  Word const xl = power(x, l);
  Word const ym = power(y, m);
  Word const xyn = power(multiply(x, y), n);
  return Presentation(2, {multiply(xl, invert(ym)), multiply(ym, invert(xyn))});
}

bool triangle_group_is_finite(std::int64_t l, std::int64_t m, std::int64_t n) {
  if (l == 0 || m == 0 || n == 0) {
    throw DomainError("triangle group exponents must be nonzero");
  }
  mpz_class a = l < 0 ? -l : l;
  mpz_class b = m < 0 ? -m : m;
  mpz_class c = n < 0 ? -n : n;
  // 1/a + 1/b + 1/c > 1  <=>  bc + ac + ab > abc
  return b * c + a * c + a * b > a * b * c;
}

Presentation h_truncation(std::uint32_t depth) {
  if (depth > 20) {
    throw DomainError("h_truncation: depth " + std::to_string(depth) + " is too large");
  }
  GeneratorIndex const top = (GeneratorIndex{2} << depth) - 1;
  std::vector<Word> relators;
  for (GeneratorIndex i = 1; i < (GeneratorIndex{1} << depth); ++i) {
    relators.push_back(multiply(
        Word::generator(i),
        invert(commutator(Word::generator(2 * i), Word::generator(2 * i + 1)))));
  }
  return Presentation(top, std::move(relators));
}

std::optional<std::vector<std::uint64_t>> cyclic_character(Presentation const& p,
                                                           std::uint64_t prime) {
  require_prime(prime, "cyclic_character");
  IntMatrix const m = relation_matrix(p);
  SmithForm s = smith_normal_form(m);
  mpz_class const modulus(static_cast<unsigned long>(prime));
  for (std::size_t k = 0; k < p.generator_count(); ++k) {
    mpz_class d = diagonal_entry(s.diagonal, k);
    if (!mpz_divisible_p(d.get_mpz_t(), modulus.get_mpz_t())) {
      continue;
    }
    // chi = V e_k satisfies M chi = U^-1 D e_k = 0 mod p.
    std::vector<std::uint64_t> chi(p.generator_count());
    for (std::size_t j = 0; j < chi.size(); ++j) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), s.right(j, k).get_mpz_t(), modulus.get_mpz_t());
      chi[j] = r.get_ui();
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      mpz_class acc = 0;
      for (std::size_t j = 0; j < chi.size(); ++j) {
        acc += m(i, j) * static_cast<unsigned long>(chi[j]);
      }
      if (!mpz_divisible_p(acc.get_mpz_t(), modulus.get_mpz_t())) {
        throw std::logic_error("cyclic_character: relator does not vanish");
      }
    }
    return chi;
  }
  return std::nullopt;
}

std::optional<AlmostPerfectRefutation> refute_almost_perfect(Presentation const& p,
                                                             std::uint64_t prime,
                                                             Word const& element) {
  if (element.max_index() > p.generator_count()) {
    throw DomainError("refute_almost_perfect: element uses a generator outside the presentation");
  }
  auto chi = cyclic_character(p, prime);
  if (!chi) {
    return std::nullopt;
  }
  AlmostPerfectRefutation cert;
  cert.prime = prime;
  cert.character = *chi;
  cert.element = element;
  for (std::uint64_t c : cert.character) {
    cert.images.push_back(power(element, static_cast<std::int64_t>(c)));
  }

  auto sums = exponent_sums(element, p.generator_count());
  std::vector<mpz_class> v;
  for (std::size_t j = 1; j < sums.size(); ++j) {
    v.emplace_back(static_cast<long>(sums[j]));
  }
  cert.nontrivial_certified = !in_relation_lattice(p, v);

  Word const order_word = power(element, static_cast<std::int64_t>(prime));
  if (order_word.empty()) {
    cert.order_certified = true;
  } else {
    Word const core = cyclic_reduce(order_word).core;
    for (auto const& r : p.relators()) {
      for (auto const& candidate : {r, invert(r)}) {
        auto rots = rotations(candidate);
        if (std::find(rots.begin(), rots.end(), core) != rots.end()) {
          cert.order_certified = true;
        }
      }
    }
  }
  return cert;
}

}  // namespace hloc
