#include "hloc/witness.hpp"

#include <algorithm>

#include "hloc/errors.hpp"
#include "hloc/primes.hpp"
#include "hloc/word_io.hpp"

namespace hloc {

bool NonPerfectReport::relators_vanish() const {
  return std::all_of(relator_checks.begin(), relator_checks.end(),
                     [](RelatorCheck const& c) { return c.image.is_zero(); });
}

bool NonPerfectReport::verified() const {
  return root_absent_theorem && root_absent_exhaustive && relators_vanish() &&
         relation_absorbed && t_image == PruferElement::unit_fraction(depth, prime) &&
         t_order == quotient_order && abelianization.has_cyclic_quotient(quotient_order);
}

NonPerfectReport witness_nonperfect(TowerLevel n, std::uint64_t p, std::uint32_t d,
                                    std::size_t max_length) {
  if (d == 0) {
    throw DomainError("witness: depth must be at least 1");
  }
  require_prime(p, "witness");

  TowerElement const x1{TowerLevel(0), Word::generator(1)};
  Word root_word = promote(x1, n, max_length).word;

  auto theorem = has_p_root_in_H(x1, p, n, RootSearch::Theorem, max_length);
  auto exhaustive = has_p_root_in_H(x1, p, n, RootSearch::Exhaustive, max_length);

  AdjunctionGroup group =
      adjoin_root(n.first_generator(), n.last_generator(), root_word, p, d);

  if (static_cast<std::size_t>(group.modulus) > max_length) {
    throw LengthLimitExceeded(static_cast<std::size_t>(group.modulus), max_length);
  }
  Presentation truncation = h_truncation(n.n);
  GeneratorIndex const t_index = truncation.generator_count() + 1;
  std::vector<Word> relators = truncation.relators();
  relators.push_back(
      multiply(power(Word::generator(t_index), group.modulus), Word::generator(1, -1)));

  NonPerfectReport report{
      .level = n.n,
      .prime = p,
      .depth = d,
      .quotient_order = prime_power(p, d),
      .root_word = root_word,
      .root_absent_theorem = theorem.verdict == RootVerdict::NoRootProven,
      .root_absent_exhaustive = exhaustive.verdict == RootVerdict::NoRootThroughLevel &&
                                certificates_agree(theorem, exhaustive),
      .group = group,
      .stage = Presentation(t_index, std::move(relators)),
      .relator_checks = {},
      .relation_absorbed = false,
      .t_image = PruferElement(p),
      .t_order = 0,
      .abelianization = {},
  };

  // x_i -> 0, t -> 1/p^d on the presentation of the stage.
  RootCharacter chi{{}, PruferElement::unit_fraction(d, p)};
  for (GeneratorIndex i = 1; i < t_index; ++i) {
    chi.base_images.emplace(i, PruferElement(p));
  }
  chi.base_images.emplace(t_index, chi.t_image);
  auto const& stage_relators = report.stage.relators();
  for (std::size_t i = 0; i + 1 < stage_relators.size(); ++i) {
    report.relator_checks.push_back({to_string(stage_relators[i]),
                                     evaluate(chi, stage_relators[i])});
  }
  report.relator_checks.push_back({"t^" + std::to_string(group.modulus) + "*x1^-1",
                                   evaluate(chi, stage_relators.back())});

  std::vector<AmalgamFactor> relation{AmalgamFactor::root(group.modulus),
                                      AmalgamFactor::base(invert(group.root_of))};
  report.relation_absorbed = amalgam_normalize(group, relation).is_identity();

  AmalgamElement const t = amalgam_normalize(group, std::vector{AmalgamFactor::root(1)});
  report.t_image = prufer_quotient_map(group, t);
  report.t_order = report.t_image.order();
  report.abelianization = abelianization(report.stage);
  return report;
}

}  // namespace hloc
