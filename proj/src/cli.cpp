#include "hloc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hloc/adjunction.hpp"
#include "hloc/errors.hpp"
#include "hloc/presentation.hpp"
#include "hloc/prufer.hpp"
#include "hloc/roots.hpp"
#include "hloc/smith.hpp"
#include "hloc/subgroup_graph.hpp"
#include "hloc/tower.hpp"
#include "hloc/witness.hpp"
#include "hloc/word_io.hpp"

namespace hloc::cli {
namespace {

using Json = nlohmann::ordered_json;

// A finished report: structured form for --json, text form otherwise.
struct Report {
  Json json;
  std::string text;
  std::string warning;
  bool failed = false;
};

struct Globals {
  bool json = false;
  std::size_t max_length = 1'000'000;
};

Word read_word(std::string const& text, Globals const& g) {
  WordSyntax syntax;
  syntax.max_length = g.max_length;
  return parse_word(text, syntax);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Json support_json(Word const& w) {
  Json s = Json::array();
  for (auto i : support(w)) {
    s.push_back(i);
  }
  return s;
}

// ---------------------------------------------------------------------------

struct ReduceOptions {
  std::string word;
  bool cyclic = false;
};

Report reduce_command(ReduceOptions const& o, Globals const& g) {
  Word w = read_word(o.word, g);
  Report r;
  r.json = {{"command", "reduce"}, {"word", to_string(w)}, {"length", w.size()},
            {"support", support_json(w)}};
  r.text = "word=" + to_string(w) + " length=" + std::to_string(w.size()) + "\n";
  if (o.cyclic) {
    auto [c, core] = cyclic_reduce(w);
    r.json["conjugator"] = to_string(c);
    r.json["core"] = to_string(core);
    r.text += "conjugator=" + to_string(c) + " core=" + to_string(core) + "\n";
  }
  return r;
}

struct RootOptions {
  std::string word;
  std::optional<std::int64_t> k;
};

Report root_command(RootOptions const& o, Globals const& g) {
  Word w = read_word(o.word, g);
  Report r;
  r.json = {{"command", "root"}, {"word", to_string(w)}};
  if (o.k) {
    auto root = kth_root(w, *o.k);
    r.json["k"] = *o.k;
    r.json["kth_root"] = root ? Json(to_string(*root)) : Json(nullptr);
    r.text = "kth_root=" + (root ? to_string(*root) : std::string("none")) +
             " k=" + std::to_string(*o.k) + "\n";
    return r;
  }
  auto [root, exponent] = primitive_root(w);
  r.json["root"] = to_string(root);
  r.json["exponent"] = exponent;
  r.text = "root=" + to_string(root) + " exponent=" + std::to_string(exponent) + "\n";
  return r;
}

struct CentralizerOptions {
  std::string word;
  std::optional<std::string> with;
};

Report centralizer_command(CentralizerOptions const& o, Globals const& g) {
  Word w = read_word(o.word, g);
  Word c = centralizer_generator(w);
  Report r;
  r.json = {{"command", "centralizer"}, {"word", to_string(w)}, {"generator", to_string(c)}};
  r.text = "generator=" + to_string(c);
  if (o.with) {
    Word other = read_word(*o.with, g);
    bool const commuting = commutes(w, other);
    r.json["with"] = to_string(other);
    r.json["commutes"] = commuting;
    r.text += " commutes=" + bool_text(commuting);
  }
  r.text += "\n";
  return r;
}

struct SubgroupOptions {
  std::vector<std::string> generators;
  std::optional<std::string> query;
  bool graph = false;
};

Report subgroup_command(SubgroupOptions const& o, Globals const& g) {
  std::vector<Word> gens;
  for (auto const& s : o.generators) {
    gens.push_back(read_word(s, g));
  }
  SubgroupGraph graph = SubgroupGraph::build(gens);
  Report r;
  Json gen_json = Json::array();
  for (auto const& w : gens) {
    gen_json.push_back(to_string(w));
  }
  r.json = {{"command", "subgroup"}, {"generators", gen_json}, {"rank", graph.rank()},
            {"vertices", graph.vertex_count()}, {"edges", graph.edge_count()}};
  r.text = "rank=" + std::to_string(graph.rank()) + " vertices=" +
           std::to_string(graph.vertex_count()) + " edges=" +
           std::to_string(graph.edge_count()) + "\n";
  if (o.query) {
    Word w = read_word(*o.query, g);
    auto witness = graph.express(w);
    r.json["query"] = to_string(w);
    r.json["member"] = witness.has_value();
    r.json["witness"] = witness ? Json(to_string(*witness, 'y')) : Json(nullptr);
    r.text += "member=" + bool_text(witness.has_value());
    if (witness) {
      r.text += " witness=" + to_string(*witness, 'y');
    }
    r.text += "\n";
  }
  if (o.graph) {
    Json edges = Json::array();
    for (auto const& e : graph.edges()) {
      edges.push_back(Json::array({e.from, e.to, e.label}));
    }
    r.json["graph"] = edges;
    r.text += graph.dump();
  }
  return r;
}

// ---------------------------------------------------------------------------

struct TowerOptions {
  std::string word;
  std::uint32_t level = 0;
  std::uint32_t target = 0;
  std::uint64_t prime = 2;
  std::optional<std::uint32_t> max_level;
  std::string mode = "both";
};

Json element_json(TowerElement const& e) {
  return {{"level", e.level.n}, {"word", to_string(e.word)}};
}

std::string verdict_name(RootVerdict v) {
  switch (v) {
    case RootVerdict::RootFound:
      return "ROOT_FOUND";
    case RootVerdict::NoRootProven:
      return "NO_ROOT_PROVEN";
    case RootVerdict::NoRootThroughLevel:
      return "NO_ROOT_THROUGH_LEVEL";
  }
  return "UNKNOWN";
}

Json certificate_json(RootCertificate const& c) {
  Json j = {{"mode", c.mode == RootSearch::Theorem ? "theorem" : "exhaustive"},
            {"verdict", verdict_name(c.verdict)},
            {"prime", c.prime},
            {"level", c.base_level.n},
            {"max_level", c.max_level.n},
            {"decisive_level", c.decisive_level.n}};
  if (c.mode == RootSearch::Theorem && c.verdict == RootVerdict::NoRootProven) {
    j["induction"] = "root_transfer";
  }
  if (c.mode == RootSearch::Exhaustive) {
    Json levels = Json::array();
    for (bool b : c.per_level) {
      levels.push_back(b);
    }
    j["per_level"] = levels;
  }
  j["witness"] = c.witness ? element_json(*c.witness) : Json(nullptr);
  return j;
}

std::string certificate_text(RootCertificate const& c) {
  std::string s = "mode=" + std::string(c.mode == RootSearch::Theorem ? "theorem" : "exhaustive") +
                  " verdict=" + verdict_name(c.verdict) + " prime=" + std::to_string(c.prime) +
                  " level=" + std::to_string(c.base_level.n);
  if (c.mode == RootSearch::Theorem) {
    if (c.verdict == RootVerdict::NoRootProven) {
      s += " failure_level=" + std::to_string(c.decisive_level.n) + " induction=root_transfer";
    }
  } else {
    s += " max_level=" + std::to_string(c.max_level.n) + " per_level=";
    for (std::size_t i = 0; i < c.per_level.size(); ++i) {
      s += (i ? "," : "") + std::string(c.per_level[i] ? "1" : "0");
    }
  }
  if (c.witness) {
    s += " witness_level=" + std::to_string(c.witness->level.n) +
         " witness=" + to_string(c.witness->word);
  }
  return s + "\n";
}

Report tower_phi(TowerOptions const& o, Globals const& g) {
  TowerLevel level(o.level);
  Word w = read_word(o.word, g);
  Word image = phi(level, w, g.max_length);
  Report r;
  r.json = {{"command", "tower phi"}, {"level", level.n}, {"word", to_string(w)},
            {"image_level", level.n + 1}, {"image", to_string(image)}};
  r.text = "level=" + std::to_string(level.n + 1) + " word=" + to_string(image) + "\n";
  return r;
}

Report tower_normalize(TowerOptions const& o, Globals const& g) {
  TowerLevel level(o.level);
  TowerElement e = normalize(level, read_word(o.word, g));
  Report r;
  r.json = {{"command", "tower normalize"}, {"input_level", level.n}, {"level", e.level.n},
            {"word", to_string(e.word)}};
  r.text = "level=" + std::to_string(e.level.n) + " word=" + to_string(e.word) + "\n";
  return r;
}

Report tower_promote(TowerOptions const& o, Globals const& g) {
  TowerElement e{TowerLevel(o.level), read_word(o.word, g)};
  TowerElement up = promote(e, TowerLevel(o.target), g.max_length);
  Report r;
  r.json = {{"command", "tower promote"}, {"input_level", o.level}, {"level", up.level.n},
            {"word", to_string(up.word)}, {"length", up.word.size()}};
  r.text = "level=" + std::to_string(up.level.n) + " word=" + to_string(up.word) + "\n";
  return r;
}

Report tower_root(TowerOptions const& o, Globals const& g) {
  if (o.mode != "theorem" && o.mode != "exhaustive" && o.mode != "both") {
    throw DomainError("--mode must be theorem, exhaustive or both");
  }
  TowerElement e{TowerLevel(o.level), read_word(o.word, g)};
  TowerLevel max_level(o.max_level.value_or(o.level));
  Report r;
  r.json = {{"command", "tower root"}, {"element", element_json(e)}};
  Json certs = Json::array();
  std::optional<RootCertificate> theorem;
  std::optional<RootCertificate> exhaustive;
  if (o.mode != "exhaustive") {
    theorem = has_p_root_in_H(e, o.prime, max_level, RootSearch::Theorem, g.max_length);
    certs.push_back(certificate_json(*theorem));
    r.text += certificate_text(*theorem);
  }
  if (o.mode != "theorem") {
    exhaustive = has_p_root_in_H(e, o.prime, max_level, RootSearch::Exhaustive, g.max_length);
    certs.push_back(certificate_json(*exhaustive));
    r.text += certificate_text(*exhaustive);
  }
  r.json["certificates"] = certs;
  if (theorem && exhaustive) {
    bool const agree = certificates_agree(*theorem, *exhaustive);
    r.json["agree"] = agree;
    r.text += "agree=" + bool_text(agree) + "\n";
    r.failed = !agree;
  }
  return r;
}

Report tower_centralizer(TowerOptions const& o, Globals const& g) {
  TowerLevel level(o.level);
  Word w = read_word(o.word, g);
  CentralizerCheck c = centralizer_check(level, w);
  Report r;
  r.json = {{"command", "tower centralizer-check"}, {"level", level.n},
            {"word", to_string(w)}, {"generator", to_string(c.generator)},
            {"image_generator", to_string(c.image_generator)},
            {"phi_generator", to_string(c.phi_of_generator)}, {"compatible", c.compatible}};
  r.text = "generator=" + to_string(c.generator) + " image_generator=" +
           to_string(c.image_generator) + " phi_generator=" + to_string(c.phi_of_generator) +
           " compatible=" + bool_text(c.compatible) + "\n";
  return r;
}

// ---------------------------------------------------------------------------

struct AbelianizeOptions {
  std::optional<std::string> file;
  std::vector<std::int64_t> triangle;
  std::optional<std::uint32_t> h_depth;
  bool details = false;
};

Report abelianize_command(AbelianizeOptions const& o, Globals const& g) {
  int const sources = (o.file ? 1 : 0) + (o.triangle.empty() ? 0 : 1) + (o.h_depth ? 1 : 0);
  if (sources != 1) {
    throw DomainError("abelianize needs exactly one of FILE, --triangle, --h-depth");
  }
  std::optional<Presentation> pres;
  std::optional<bool> finite;
  if (o.file) {
    std::string text;
    if (*o.file == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(*o.file);
      if (!in) {
        throw DomainError("cannot read presentation file " + *o.file);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    pres = parse_presentation(text, g.max_length);
  } else if (!o.triangle.empty()) {
    auto const& t = o.triangle;
    finite = triangle_group_is_finite(t[0], t[1], t[2]);
    pres = triangle_group(t[0], t[1], t[2]);
  } else {
    pres = h_truncation(*o.h_depth);
  }
  AbelianInvariants inv = abelianization(*pres);
  Report r;
  Json torsion = Json::array();
  for (auto const& d : inv.torsion) {
    torsion.push_back(d.get_str());
  }
  r.json = {{"command", "abelianize"}, {"invariants", inv.to_string()},
            {"free_rank", inv.free_rank}, {"torsion", torsion},
            {"perfect", inv.is_trivial()}};
  r.text = inv.to_string() + "\n";
  if (finite) {
    r.json["finite"] = *finite;
    r.text += "finite=" + bool_text(*finite) + "\n";
  }
  if (o.details) {
    IntMatrix m = relation_matrix(*pres);
    SmithForm s = smith_normal_form(m);
    r.json["relation_matrix"] = m.to_string();
    r.json["smith_diagonal"] = s.diagonal.to_string();
    r.text += "perfect=" + bool_text(inv.is_trivial()) + "\n";
    r.text += "relation_matrix=" + m.to_string() + "\n";
    r.text += "smith_diagonal=" + s.diagonal.to_string() + "\n";
  }
  return r;
}

// ---------------------------------------------------------------------------

struct AdjoinOptions {
  GeneratorIndex base_rank = 1;
  std::string root_of;
  std::uint64_t prime = 2;
  std::uint32_t depth = 1;
  std::vector<std::string> elements;
};

Report adjoin_command(AdjoinOptions const& o, Globals const& g) {
  AdjunctionGroup group = adjoin_root(o.base_rank, read_word(o.root_of, g), o.prime, o.depth);
  Report r;
  std::string const presentation = "<x1..x" + std::to_string(o.base_rank) + ", t | t^" +
                                   std::to_string(group.modulus) + " = " +
                                   to_string(group.root_of) + ">";
  r.json = {{"command", "adjoin"}, {"base_rank", o.base_rank},
            {"root_of", to_string(group.root_of)}, {"requested", to_string(group.requested)},
            {"prime", o.prime}, {"depth", o.depth}, {"modulus", group.modulus},
            {"presentation", presentation}};
  r.text = "group=" + presentation + " modulus=" + std::to_string(group.modulus) + "\n";
  if (auto w = group.warning()) {
    r.json["warning"] = *w;
    r.warning = *w;
  } else {
    r.json["warning"] = nullptr;
  }
  Json elements = Json::array();
  for (auto const& text : o.elements) {
    WordSyntax syntax;
    syntax.max_length = g.max_length;
    auto expr = parse_amalgam_expression(text, syntax);
    AmalgamElement nf = amalgam_normalize(group, expr);
    PruferElement image = prufer_quotient_map(group, nf);
    elements.push_back({{"input", text},
                        {"normal_form", to_string(group, nf)},
                        {"central_exponent", nf.central_exponent},
                        {"syllables", nf.syllables.size()},
                        {"prufer_image", image.to_string()}});
    r.text += "normal_form=" + to_string(group, nf) + " prufer_image=" + image.to_string() + "\n";
  }
  r.json["elements"] = elements;
  return r;
}

struct WitnessOptions {
  std::uint32_t level = 0;
  std::uint64_t prime = 2;
  std::uint32_t depth = 1;
};

Report witness_command(WitnessOptions const& o, Globals const& g) {
  NonPerfectReport rep = witness_nonperfect(TowerLevel(o.level), o.prime, o.depth, g.max_length);
  std::string const quotient = "Z/" + rep.quotient_order.get_str();
  Report r;
  Json checks = Json::array();
  std::string check_text;
  for (auto const& c : rep.relator_checks) {
    checks.push_back({{"relator", c.relator}, {"image", c.image.to_string()}});
    check_text += "relator=" + c.relator + " image=" + c.image.to_string() + "\n";
  }
  r.json = {{"command", "witness"},
            {"level", rep.level},
            {"prime", rep.prime},
            {"depth", rep.depth},
            {"root_word", to_string(rep.root_word)},
            {"root_absent", {{"theorem", rep.root_absent_theorem},
                             {"exhaustive", rep.root_absent_exhaustive}}},
            {"relator_checks", checks},
            {"relators_vanish", rep.relators_vanish()},
            {"relation_absorbed", rep.relation_absorbed},
            {"witness_generator", "t"},
            {"witness_image", rep.t_image.to_string()},
            {"witness_order", rep.t_order.get_str()},
            {"abelianization", rep.abelianization.to_string()},
            {"quotient", quotient},
            {"verified", rep.verified()}};
  r.text = "level=" + std::to_string(rep.level) + " prime=" + std::to_string(rep.prime) +
           " depth=" + std::to_string(rep.depth) + "\n";
  r.text += "root_word=" + to_string(rep.root_word) + "\n";
  r.text += "root_absent theorem=" + bool_text(rep.root_absent_theorem) +
            " exhaustive=" + bool_text(rep.root_absent_exhaustive) + "\n";
  r.text += check_text;
  r.text += "relators_vanish=" + bool_text(rep.relators_vanish()) +
            " relation_absorbed=" + bool_text(rep.relation_absorbed) + "\n";
  r.text += "witness=t image=" + rep.t_image.to_string() + " order=" + rep.t_order.get_str() + "\n";
  r.text += "abelianization=" + rep.abelianization.to_string() + "\n";
  r.text += "quotient=" + quotient + " verified=" + bool_text(rep.verified()) + "\n";
  r.failed = !rep.verified();
  return r;
}

struct PruferOptions {
  std::uint64_t prime = 2;
  std::vector<std::string> elements;
  std::optional<std::string> times;
};

Report prufer_command(PruferOptions const& o, Globals const&) {
  PruferElement sum(o.prime);
  Json inputs = Json::array();
  for (auto const& s : o.elements) {
    PruferElement e = parse_prufer(s, o.prime);
    inputs.push_back(e.to_string());
    sum += e;
  }
  if (o.times) {
    mpz_class k;
    if (k.set_str(*o.times, 10) != 0) {
      throw ParseError("expected an integer multiplier", 1, 1);
    }
    sum = sum.times(k);
  }
  Report r;
  r.json = {{"command", "prufer"}, {"prime", o.prime}, {"inputs", inputs},
            {"result", sum.to_string()}, {"order", sum.order().get_str()}};
  r.text = "result=" + sum.to_string() + " order=" + sum.order().get_str() + "\n";
  return r;
}

}  // namespace

int run(std::span<std::string const> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in free groups, the perfect group H and its root adjunctions",
               "hloc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_flag("--json", globals.json, "Emit a JSON report");
  app.add_option("--max-length", globals.max_length, "Abort when a word would exceed this length")
      ->capture_default_str();

  std::function<Report()> action;

  ReduceOptions reduce_opts;
  auto* reduce = app.add_subcommand("reduce", "Free reduction of a word");
  reduce->add_option("word", reduce_opts.word, "Word")->required();
  reduce->add_flag("--cyclic", reduce_opts.cyclic, "Also print the cyclic decomposition");
  reduce->callback([&] { action = [&] { return reduce_command(reduce_opts, globals); }; });

  RootOptions root_opts;
  auto* root = app.add_subcommand("root", "Primitive root, or a k-th root with --k");
  root->add_option("word", root_opts.word, "Word")->required();
  root->add_option("--k", root_opts.k, "Extract a k-th root");
  root->callback([&] { action = [&] { return root_command(root_opts, globals); }; });

  CentralizerOptions cent_opts;
  auto* cent = app.add_subcommand("centralizer", "Generator of the centralizer of a word");
  cent->add_option("word", cent_opts.word, "Word")->required();
  cent->add_option("--with", cent_opts.with, "Also test whether this word commutes with it");
  cent->callback([&] { action = [&] { return centralizer_command(cent_opts, globals); }; });

  SubgroupOptions sub_opts;
  auto* sub = app.add_subcommand("subgroup", "Membership in a finitely generated subgroup");
  sub->add_option("--gen", sub_opts.generators, "Generating word (repeatable)")
      ->required()
      ->allow_extra_args(false);
  sub->add_option("query", sub_opts.query, "Word to test");
  sub->add_flag("--graph", sub_opts.graph, "Print the folded graph as `v1 v2 label` lines");
  sub->callback([&] { action = [&] { return subgroup_command(sub_opts, globals); }; });

  TowerOptions tower_opts;
  auto* tower = app.add_subcommand("tower", "The commutator tower defining H");
  tower->require_subcommand(1);
  auto add_level = [&](CLI::App* c) {
    c->add_option("--level", tower_opts.level, "Level of the input word")->capture_default_str();
    c->add_option("word", tower_opts.word, "Word")->required();
  };
  auto* t_phi = tower->add_subcommand("phi", "Apply phi_n");
  add_level(t_phi);
  t_phi->callback([&] { action = [&] { return tower_phi(tower_opts, globals); }; });
  auto* t_norm = tower->add_subcommand("normalize", "Lowest-level representative");
  add_level(t_norm);
  t_norm->callback([&] { action = [&] { return tower_normalize(tower_opts, globals); }; });
  auto* t_prom = tower->add_subcommand("promote", "Push a word up the tower");
  add_level(t_prom);
  t_prom->add_option("--target", tower_opts.target, "Target level")->required();
  t_prom->callback([&] { action = [&] { return tower_promote(tower_opts, globals); }; });
  auto* t_root = tower->add_subcommand("root", "Certificate for p-th roots in H");
  add_level(t_root);
  t_root->add_option("--prime", tower_opts.prime, "Prime p")->required();
  t_root->add_option("--max-level", tower_opts.max_level, "Highest level for the exhaustive scan");
  t_root->add_option("--mode", tower_opts.mode, "theorem, exhaustive or both")
      ->capture_default_str();
  t_root->callback([&] { action = [&] { return tower_root(tower_opts, globals); }; });
  auto* t_cent = tower->add_subcommand("centralizer-check", "Compare C(w) with C(phi_n(w))");
  add_level(t_cent);
  t_cent->callback([&] { action = [&] { return tower_centralizer(tower_opts, globals); }; });

  AbelianizeOptions ab_opts;
  auto* ab = app.add_subcommand("abelianize", "Abelian invariants of a presentation");
  ab->add_option("file", ab_opts.file, "Presentation file (`-` for stdin)");
  ab->add_option("--triangle", ab_opts.triangle, "G(l,m,n) = <x,y | x^l = y^m = (xy)^n>")
      ->expected(3);
  ab->add_option("--h-depth", ab_opts.h_depth, "Depth-n truncation of H");
  ab->add_flag("--details", ab_opts.details, "Print the relation matrix and its Smith form");
  ab->callback([&] { action = [&] { return abelianize_command(ab_opts, globals); }; });

  AdjoinOptions adj_opts;
  auto* adj = app.add_subcommand("adjoin", "Adjoin a p^d-th root to an element of a free group");
  adj->add_option("--base-rank", adj_opts.base_rank, "Rank of the base free group")->required();
  adj->add_option("--root-of", adj_opts.root_of, "Element receiving the root")->required();
  adj->add_option("--prime", adj_opts.prime, "Prime p")->required();
  adj->add_option("--depth", adj_opts.depth, "Depth d >= 1")->required();
  adj->add_option("--element", adj_opts.elements, "Expression to normalize (repeatable)")
      ->allow_extra_args(false);
  adj->callback([&] { action = [&] { return adjoin_command(adj_opts, globals); }; });

  WitnessOptions wit_opts;
  auto* wit = app.add_subcommand("witness", "Surjection of a root-adjunction stage onto Z/p^d");
  wit->add_option("--level", wit_opts.level, "Truncation level of H")->required();
  wit->add_option("--prime", wit_opts.prime, "Prime p")->required();
  wit->add_option("--depth", wit_opts.depth, "Depth d >= 1")->required();
  wit->callback([&] { action = [&] { return witness_command(wit_opts, globals); }; });

  PruferOptions pr_opts;
  auto* pr = app.add_subcommand("prufer", "Arithmetic in the Prufer group Z[1/p]/Z");
  pr->add_option("--prime", pr_opts.prime, "Prime p")->required();
  pr->add_option("elements", pr_opts.elements, "Elements a/p^k to add");
  pr->add_option("--times", pr_opts.times, "Multiply the sum by an integer");
  pr->callback([&] { action = [&] { return prufer_command(pr_opts, globals); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    Report r = action();
    if (!r.warning.empty()) {
      err << "warning: " << r.warning << "\n";
    }
    if (globals.json) {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    if (r.failed) {
      err << "error: verification failed\n";
      return kExitDomainError;
    }
    return kExitOk;
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (DomainError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace hloc::cli
