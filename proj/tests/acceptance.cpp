// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>

#include "hloc/adjunction.hpp"
#include "hloc/cli.hpp"
#include "hloc/presentation.hpp"
#include "hloc/roots.hpp"
#include "hloc/smith.hpp"
#include "hloc/subgroup_graph.hpp"
#include "hloc/tower.hpp"
#include "hloc/witness.hpp"
#include "hloc/word_io.hpp"
#include "oracles.hpp"

using namespace hloc;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, std::string const& what) {
    expect(ok, [&] { return what; });
  }

  // The description is built only on failure.
  template <class Describe>
    requires std::is_invocable_r_v<std::string, Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) {
      if (failures == 0) {
        first_failure = describe();
      }
      ++failures;
    }
  }
};

int g_failed = 0;

void criterion(int id, std::string const& title, double budget_seconds,
               std::function<void(Outcome&)> const& body) {
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (std::exception const& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  double const seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool const in_time = seconds <= budget_seconds;
  bool const pass = o.failures == 0 && in_time && o.checks > 0;
  char line[512];
  std::snprintf(line, sizeof line, "%s criterion %d: %s | checks=%zu failures=%zu time=%.2fs budget=%.0fs",
                pass ? "PASS" : "FAIL", id, title.c_str(), o.checks, o.failures, seconds,
                budget_seconds);
  std::cout << line;
  if (!o.first_failure.empty()) {
    std::cout << " | first failure: " << o.first_failure;
  } else if (!in_time) {
    std::cout << " | over time budget";
  }
  std::cout << std::endl;
  if (!pass) {
    ++g_failed;
  }
}

std::string cli_output(std::vector<std::string> const& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

Word random_at(std::mt19937_64& rng, TowerLevel level, std::size_t len) {
  return oracle::from_raw(oracle::random_reduced(rng, static_cast<int>(level.first_generator()),
                                                 static_cast<int>(level.last_generator()), len));
}

void triangle_example(Outcome& o) {
  Presentation g = triangle_group(3, 8, 2);
  AbelianInvariants ab = abelianization(g);
  o.expect(ab.torsion == std::vector<mpz_class>{2} && ab.free_rank == 0,
           "G(3,8,2) abelianization is " + ab.to_string());
  o.expect(!triangle_group_is_finite(3, 8, 2), "G(3,8,2) reported finite");
  o.expect(!is_perfect(g), "G(3,8,2) reported perfect");

  auto path = std::filesystem::temp_directory_path() / "hloc_acceptance_triangle.grp";
  std::ofstream(path) << "gens: 2\nx1^3 = x2^8 = (x1 x2)^2\n";
  int code = 0;
  std::string out = cli_output({"abelianize", path.string()}, code);
  o.expect(code == 0 && out == "Z/2\n", "abelianize file printed " + out);
  std::filesystem::remove(path);

  o.expect(triangle_group_is_finite(2, 3, 5), "G(2,3,5) reported infinite");
  Presentation h = triangle_group(2, 3, 5);
  IntMatrix m = relation_matrix(h);
  SmithForm s = smith_normal_form(m);
  o.expect(oracle::naive_product(oracle::naive_product(s.left, m), s.right) == s.diagonal,
           "G(2,3,5) Smith form does not satisfy U M V = D");
  AbelianInvariants hab = abelianization(h);
  mpz_class order = 1;
  for (auto const& d : hab.torsion) {
    order *= d;
  }
  mpz_class const det = abs(oracle::laplace_det(m));
  o.expect(hab.free_rank == 0 && order == det,
           "G(2,3,5) abelianization " + hab.to_string() + " vs |det| " + det.get_str());
}

void support_suite(Outcome& o) {
  for (auto const& raw : oracle::all_reduced_words(3, 8)) {
    Word const w = oracle::from_raw(raw);
    auto const s = support(w);
    for (std::int64_t k = -5; k <= 5; ++k) {
      if (k == 0) {
        continue;
      }
      o.expect(support(power(w, k)) == s, [&] { return to_string(w) + " ^ " + std::to_string(k); });
    }
  }
}

void root_image_suite(Outcome& o) {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::int64_t> kd(2, 5);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  for (int trial = 0; trial < 1200; ++trial) {
    TowerLevel const level(trial % 3);
    std::int64_t const k = kd(rng);
    Word w = random_at(rng, level, len(rng));
    if (trial % 2 == 0) {
      w = power(random_at(rng, level, 1 + len(rng) / 2), k);
    }
    if (w.empty()) {
      continue;
    }
    Word const image = phi(level, w);
    auto const root = kth_root(w, k);
    auto const image_root = kth_root(image, k);
    std::string const tag = "level " + std::to_string(level.n) + " w=" + to_string(w) +
                            " k=" + std::to_string(k);
    o.expect(root.has_value() == image_root.has_value(), "existence differs for " + tag);
    auto const transferred = root_transfer(level, w, k);
    o.expect(transferred.has_value() == image_root.has_value(), "transfer existence for " + tag);
    if (transferred && image_root) {
      o.expect(phi(level, *transferred) == *image_root, "phi(transfer) differs for " + tag);
      o.expect(power(*transferred, k) == w, "transfer is not a root for " + tag);
    }
  }
}

void not_local_suite(Outcome& o) {
  TowerElement const x1{TowerLevel(0), Word::generator(1)};
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint32_t n = 0; n <= 4; ++n) {
      TowerLevel const level(n);
      std::string const tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
      Word const image = promote(x1, level).word;
      o.expect(image.size() == (std::size_t{1} << (2 * n)), "image length at " + tag);
      o.expect(!kth_root(image, static_cast<std::int64_t>(p)).has_value(),
               "direct root found at " + tag);
      auto const theorem = has_p_root_in_H(x1, p, level, RootSearch::Theorem);
      auto const exhaustive = has_p_root_in_H(x1, p, level, RootSearch::Exhaustive);
      o.expect(theorem.verdict == RootVerdict::NoRootProven, "theorem verdict at " + tag);
      o.expect(exhaustive.verdict == RootVerdict::NoRootThroughLevel,
               "exhaustive verdict at " + tag);
      o.expect(certificates_agree(theorem, exhaustive), "certificates disagree at " + tag);
      TowerElement const lifted{level, image};
      auto const lifted_theorem = has_p_root_in_H(lifted, p, level, RootSearch::Theorem);
      auto const lifted_exhaustive = has_p_root_in_H(lifted, p, level, RootSearch::Exhaustive);
      o.expect(lifted_theorem.verdict == RootVerdict::NoRootProven &&
                   certificates_agree(lifted_theorem, lifted_exhaustive),
               "certificate for level-" + std::to_string(n) + " representative at " + tag);
    }
  }
}

void centralizer_suite(Outcome& o) {
  std::mt19937_64 rng(1005);
  std::uniform_int_distribution<std::size_t> len(1, 10);
  int tested = 0;
  while (tested < 600) {
    TowerLevel const level(tested % 3);
    Word const w = random_at(rng, level, len(rng));
    if (w.empty()) {
      continue;
    }
    ++tested;
    std::string const tag = "level " + std::to_string(level.n) + " w=" + to_string(w);
    o.expect(centralizer_compat(level, w), "incompatible at " + tag);
    Word const c = primitive_root(w).root;
    Word const image_c = primitive_root(phi(level, w)).root;
    Word const pushed = phi(level, c);
    o.expect(pushed == image_c || pushed == invert(image_c),
             "phi(C(w)) != C(phi(w)) at " + tag);
  }
}

mpq_class rational_image(Word const& relator, GeneratorIndex t_index, std::uint64_t p,
                         std::uint32_t d) {
  auto const sums = exponent_sums(relator, t_index);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), p, d);
  return oracle::mod_one(mpq_class(mpz_class(static_cast<long>(sums[t_index])), den));
}

void witness_suite(Outcome& o) {
  for (auto [p, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    std::string const tag = "p=" + std::to_string(p) + " d=" + std::to_string(d);
    auto const report = witness_nonperfect(TowerLevel(2), p, d);
    mpz_class const order = oracle::prufer_rational(1, d, p).get_den();
    o.expect(report.verified(), "report not verified for " + tag);
    o.expect(report.t_order == order, "t order " + report.t_order.get_str() + " for " + tag);
    GeneratorIndex const t_index = report.stage.generator_count();
    for (auto const& r : report.stage.relators()) {
      o.expect(rational_image(r, t_index, p, d) == 0,
               "relator " + to_string(r) + " survives for " + tag);
    }
    for (auto const& c : report.relator_checks) {
      o.expect(c.image.is_zero(), "reported relator image " + c.image.to_string());
    }
    o.expect(report.abelianization.has_cyclic_quotient(order), "no Z/p^d quotient for " + tag);
    int code = 0;
    std::string const out = cli_output({"witness", "--level", "2", "--prime", std::to_string(p),
                                        "--depth", std::to_string(d)},
                                       code);
    std::string const expected = "quotient=Z/" + order.get_str() + " verified=true\n";
    o.expect(code == 0 && out.find(expected) != std::string::npos, "cli witness for " + tag);
  }
}

void oracle_suite(Outcome& o) {
  auto const table = oracle::root_table(3, 8);
  for (auto const& raw : oracle::all_reduced_words(3, 8)) {
    if (raw.empty()) {
      continue;
    }
    auto const& [v, k] = table.at(raw);
    auto const r = primitive_root(oracle::from_raw(raw));
    o.expect(oracle::to_raw(r.root) == v && r.exponent == static_cast<std::uint64_t>(k),
             [&] { return "primitive root of " + to_string(oracle::from_raw(raw)); });
  }

  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<oracle::Raw> raw_gens;
    std::vector<Word> gens;
    for (int i = 0; i < 3; ++i) {
      raw_gens.push_back(oracle::random_reduced(rng, 1, 3, len(rng)));
      gens.push_back(oracle::from_raw(raw_gens.back()));
    }
    auto const graph = SubgroupGraph::build(gens);
    auto const products = oracle::product_closure(raw_gens, 4);
    for (auto const& p : products) {
      Word const pw = oracle::from_raw(p);
      auto const witness = graph.express(pw);
      o.expect(graph.contains(pw) && witness && expand(*witness, gens) == pw,
               [&] { return "product " + to_string(pw) + " not recognised"; });
    }
    for (int i = 0; i < 100; ++i) {
      Word const q = oracle::from_raw(oracle::random_reduced(rng, 1, 3, 1 + i % 8));
      auto const witness = graph.express(q);
      if (witness) {
        o.expect(expand(*witness, gens) == q, "bad witness for " + to_string(q));
      } else {
        o.expect(products.count(oracle::to_raw(q)) == 0,
                 "missed member " + to_string(q));
      }
    }
  }

  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix const m = oracle::random_matrix(rng, dim(rng), dim(rng), trial % 3 == 0 ? 1000 : 6);
    SmithForm const s = smith_normal_form(m);
    bool ok = oracle::naive_product(oracle::naive_product(s.left, m), s.right) == s.diagonal;
    ok = ok && abs(oracle::laplace_det(s.left)) == 1 && abs(oracle::laplace_det(s.right)) == 1;
    ok = ok && s.diagonal.is_diagonal();
    std::size_t const r = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; ok && i < r; ++i) {
      mpz_class const& a = s.diagonal(i, i);
      ok = a >= 0;
      if (ok && i + 1 < r) {
        mpz_class const& b = s.diagonal(i + 1, i + 1);
        ok = a == 0 ? b == 0 : mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
      }
    }
    o.expect(ok, [&] { return "Smith form invalid for " + m.to_string(); });
  }
}

// <x1, x2, t | t^2 = x1> -> F(t, x2), with t written as x1 in the target.
Word to_free(AmalgamElement const& e) {
  std::vector<Word> const images{power(Word::generator(1), 2), Word::generator(2)};
  Word out = power(images[0], e.central_exponent);
  for (auto const& s : e.syllables) {
    out = out * (s.is_root ? power(Word::generator(1), s.t_exponent)
                           : substitute(s.word, images));
  }
  return out;
}

void amalgam_suite(Outcome& o) {
  AdjunctionGroup const g = adjoin_root(2, Word::generator(1), 2, 1);
  std::set<Word> reps;
  for (auto const& raw : oracle::all_reduced_words(2, 3)) {
    Word const r = coset_decompose(g, oracle::from_raw(raw)).representative;
    if (!r.empty()) {
      reps.insert(r);
    }
  }
  std::set<Word> images;
  std::size_t forms = 0;
  auto record = [&](AmalgamElement const& e) {
    ++forms;
    bool const normal = is_normal_form(g, e);
    bool const stable = amalgam_normalize(g, to_expression(g, e)) == e;
    bool const fresh = images.insert(to_free(e)).second;
    o.expect(normal && stable && fresh, [&] { return "collision or non-normal form " + to_string(g, e); });
  };
  std::function<void(AmalgamElement&, bool, int)> grow = [&](AmalgamElement& e, bool next_root,
                                                             int left) {
    record(e);
    if (left == 0) {
      return;
    }
    if (next_root) {
      e.syllables.push_back(AmalgamFactor::root(1));
      grow(e, false, left - 1);
      e.syllables.pop_back();
      return;
    }
    for (auto const& r : reps) {
      e.syllables.push_back(AmalgamFactor::base(r));
      grow(e, true, left - 1);
      e.syllables.pop_back();
    }
  };
  for (std::int64_t c = -1; c <= 1; ++c) {
    AmalgamElement e{c, {}};
    record(e);
    e.syllables = {AmalgamFactor::root(1)};
    grow(e, false, 5);
    for (auto const& r : reps) {
      e.syllables = {AmalgamFactor::base(r)};
      grow(e, true, 5);
    }
  }
  o.expect(images.size() == forms, "image count differs from form count");
}

}  // namespace

int main() {
  criterion(1, "triangle groups: G(3,8,2) has abelianization Z/2, G(2,3,5) finite", 1.0,
            triangle_example);
  criterion(2, "support(w^k) = support(w), |w| <= 8 over 3 generators, 0 < |k| <= 5", 120.0,
            support_suite);
  criterion(3, "k-th roots of w and phi(w) coincide and transfer, levels 0-2", 60.0,
            root_image_suite);
  criterion(4, "x1 has no p-th root at levels n <= 4, theorem and exhaustive agree", 300.0,
            not_local_suite);
  criterion(5, "centralizer compatibility on random words at levels <= 2", 60.0,
            centralizer_suite);
  criterion(6, "level-2 witnesses surject onto Z/p^d", 60.0, witness_suite);
  criterion(7, "roots, membership and Smith forms agree with brute-force oracles", 300.0,
            oracle_suite);
  criterion(8, "amalgam normal forms with <= 6 syllables embed injectively in F(t, x2)", 120.0,
            amalgam_suite);
  std::cout << (g_failed == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return g_failed == 0 ? 0 : 1;
}
