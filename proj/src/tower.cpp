#include "hloc/tower.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "hloc/errors.hpp"
#include "hloc/primes.hpp"
#include "hloc/roots.hpp"
#include "hloc/subgroup_graph.hpp"

namespace hloc {
namespace {

void require_valid(TowerLevel level, Word const& w, char const* what) {
  if (!valid_at(level, w)) {
    throw DomainError(std::string(what) + ": word is not valid at level " +
                      std::to_string(level.n) + " (generators x" +
                      std::to_string(level.first_generator()) + "..x" +
                      std::to_string(level.last_generator()) + ")");
  }
}

// Graph of phi_n(F_{2^n}) = < [x_{2i}, x_{2i+1}] : 2^n <= i < 2^{n+1} >.
// The generators have disjoint supports, so the graph is a bouquet of
// 4-cycles and the generators form a basis.
std::shared_ptr<SubgroupGraph const> image_graph(TowerLevel n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<SubgroupGraph const>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n.n];
  if (!slot) {
    std::vector<Word> gens;
    gens.reserve(n.generator_count());
    for (GeneratorIndex i = n.first_generator(); i <= n.last_generator(); ++i) {
      gens.push_back(commutator(Word::generator(2 * i), Word::generator(2 * i + 1)));
    }
    slot = std::make_shared<SubgroupGraph const>(SubgroupGraph::build(gens));
  }
  return slot;
}

}  // namespace

TowerLevel::TowerLevel(std::uint32_t level) : n(level) {
  if (level > kMax) {
    throw DomainError("tower level " + std::to_string(level) +
                      " exceeds the supported maximum " + std::to_string(kMax));
  }
}

bool valid_at(TowerLevel level, Word const& w) {
  return std::all_of(w.begin(), w.end(), [&](Letter l) {
    return l.index() >= level.first_generator() &&
           l.index() <= level.last_generator();
  });
}

GeneratorIndex local_index(TowerLevel level, GeneratorIndex global) {
  if (global < level.first_generator() || global > level.last_generator()) {
    throw DomainError("generator x" + std::to_string(global) +
                      " does not belong to level " + std::to_string(level.n));
  }
  return global - level.first_generator() + 1;
}

GeneratorIndex global_index(TowerLevel level, GeneratorIndex local) {
  if (local < 1 || local > level.generator_count()) {
    throw DomainError("local generator index out of range");
  }
  return level.first_generator() + local - 1;
}

Word phi(TowerLevel n, Word const& w, std::size_t max_length) {
  require_valid(n, w, "phi");
  if (w.size() > max_length / 4) {
    throw LengthLimitExceeded(w.size() > kNoLengthLimit / 4 ? kNoLengthLimit : 4 * w.size(),
                              max_length);
  }
  // Letter-wise substitution. The result can cancel only at junctions
  // x_i^e x_j^f, and then only partially.
  WordBuilder b;
  b.reserve(4 * w.size());
  for (Letter l : w) {
    Letter a(2 * l.index());
    Letter c(2 * l.index() + 1);
    if (l.sign() > 0) {
      b.push(a).push(c).push(a.inverse()).push(c.inverse());
    } else {
      b.push(c).push(a).push(c.inverse()).push(a.inverse());
    }
  }
  return std::move(b).build();
}

std::optional<Word> phi_preimage(TowerLevel n, Word const& u) {
  if (!valid_at(n.next(), u)) {
    return std::nullopt;
  }
  auto graph = image_graph(n);
  auto witness = graph->express(u);
  if (!witness) {
    return std::nullopt;
  }
  // y_j is the j-th generator image, i.e. phi_n(x_{2^n + j - 1}).
  WordBuilder b;
  for (Letter l : *witness) {
    b.push(Letter(global_index(n, l.index()), l.sign()));
  }
  return std::move(b).build();
}

std::optional<Word> root_transfer(TowerLevel n, Word const& w, std::int64_t k) {
  require_valid(n, w, "root_transfer");
  auto image_root = kth_root(phi(n, w), k);
  if (!image_root) {
    return std::nullopt;
  }
  auto v = phi_preimage(n, *image_root);
  if (!v || power(*v, k) != w) {
    throw std::logic_error("root_transfer: root of phi(w) did not pull back to a root of w");
  }
  return v;
}

bool operator==(TowerElement const& a, TowerElement const& b) {
  TowerLevel const top = std::max(a.level, b.level);
  return promote(a, top).word == promote(b, top).word;
}

TowerElement promote(TowerElement const& e, TowerLevel target, std::size_t max_length) {
  if (target < e.level) {
    throw DomainError("promote: target level " + std::to_string(target.n) +
                      " is below the element's level " + std::to_string(e.level.n));
  }
  require_valid(e.level, e.word, "promote");
  Word w = e.word;
  for (std::uint32_t n = e.level.n; n < target.n; ++n) {
    w = phi(TowerLevel(n), w, max_length);
  }
  return {target, std::move(w)};
}

TowerElement normalize(TowerLevel level, Word const& w) {
  require_valid(level, w, "normalize");
  TowerElement e{level, w};
  while (e.level.n > 0) {
    TowerLevel below(e.level.n - 1);
    auto pre = phi_preimage(below, e.word);
    if (!pre) {
      break;
    }
    e = {below, std::move(*pre)};
  }
  return e;
}

bool is_canonical(TowerElement const& e) {
  return e.level.n == 0 || !phi_preimage(TowerLevel(e.level.n - 1), e.word);
}

TowerElement h_multiply(TowerElement const& a, TowerElement const& b,
                        std::size_t max_length) {
  TowerLevel const top = std::max(a.level, b.level);
  Word product = multiply(promote(a, top, max_length).word, promote(b, top, max_length).word);
  return normalize(top, product);
}

TowerElement h_invert(TowerElement const& e) {
  return normalize(e.level, invert(e.word));
}

RootCertificate has_p_root_in_H(TowerElement const& e, std::uint64_t p,
                                TowerLevel max_level, RootSearch mode,
                                std::size_t max_length) {
  require_prime(p, "has_p_root_in_H");
  if (max_level < e.level) {
    throw DomainError("has_p_root_in_H: max_level is below the element's level");
  }
  require_valid(e.level, e.word, "has_p_root_in_H");
  auto const k = static_cast<std::int64_t>(p);
  RootCertificate cert{RootVerdict::NoRootProven, mode, p, e.level, max_level,
                       e.level, std::nullopt, {}};

  if (mode == RootSearch::Theorem) {
    if (auto root = kth_root(e.word, k)) {
      cert.verdict = RootVerdict::RootFound;
      cert.witness = normalize(e.level, *root);
    }
    return cert;
  }

  cert.verdict = RootVerdict::NoRootThroughLevel;
  Word w = e.word;
  for (std::uint32_t n = e.level.n;; ++n) {
    TowerLevel level(n);
    auto root = kth_root(w, k);
    cert.per_level.push_back(root.has_value());
    if (root && !cert.witness) {
      cert.verdict = RootVerdict::RootFound;
      cert.decisive_level = level;
      cert.witness = normalize(level, *root);
    }
    if (level == max_level) {
      break;
    }
    w = phi(level, w, max_length);
  }
  if (!cert.witness) {
    cert.decisive_level = max_level;
  }
  return cert;
}

bool certificates_agree(RootCertificate const& theorem,
                        RootCertificate const& exhaustive) {
  bool const theorem_found = theorem.verdict == RootVerdict::RootFound;
  bool const exhaustive_found = exhaustive.verdict == RootVerdict::RootFound;
  if (theorem_found != exhaustive_found) {
    return false;
  }
  if (!std::all_of(exhaustive.per_level.begin(), exhaustive.per_level.end(),
                   [&](bool found) { return found == theorem_found; })) {
    return false;
  }
  return !theorem_found || *theorem.witness == *exhaustive.witness;
}

CentralizerCheck centralizer_check(TowerLevel n, Word const& w) {
  if (w.empty()) {
    throw IdentityWordError("centralizer_compat");
  }
  require_valid(n, w, "centralizer_compat");
  CentralizerCheck check;
  check.generator = centralizer_generator(w);
  check.image_generator = centralizer_generator(phi(n, w));
  check.phi_of_generator = phi(n, check.generator);
  check.compatible = check.phi_of_generator == check.image_generator ||
                     check.phi_of_generator == invert(check.image_generator);
  return check;
}

}  // namespace hloc
