#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hloc/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hloc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  auto r = run(args);
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
  return j;
}

std::filesystem::path write_temp(std::string const& name, std::string const& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("root") {
    auto r = run({"root", "x1*x2*x1*x2"});
    CHECK(r.code == 0);
    CHECK(r.out == "root=x1*x2 exponent=2\n");
    CHECK(run({"root", "x1^6", "--k", "3"}).out == "kth_root=x1^2 k=3\n");
    CHECK(run({"root", "x1", "--k", "2"}).out == "kth_root=none k=2\n");
    auto j = run_json({"root", "x1 x2 x1 x2"});
    CHECK(j["command"] == "root");
    CHECK(j["root"] == "x1*x2");
    CHECK(j["exponent"] == 2);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"root", "1"}).code == hloc::cli::kExitDomainError);
    CHECK(run({"root", "x1 (x2"}).code == hloc::cli::kExitParseError);
    CHECK(run({"frobnicate"}).code == hloc::cli::kExitParseError);
    CHECK(run({}).code == hloc::cli::kExitParseError);
    CHECK(run({"root", "x1", "--k", "0"}).code == hloc::cli::kExitDomainError);
    CHECK(run({"witness", "--level", "2", "--prime", "4", "--depth", "1"}).code ==
          hloc::cli::kExitDomainError);
    CHECK(run({"--help"}).code == hloc::cli::kExitOk);
    auto parse = run({"root", "x1 x2^"});
    CHECK(parse.err.find("line 1, column") != std::string::npos);
  }

  TEST_CASE("length guard") {
    auto r = run({"--max-length", "1000", "tower", "promote", "--level", "0", "--target", "6",
                  "x1"});
    CHECK(r.code == hloc::cli::kExitDomainError);
    CHECK(r.err.find("limit 1000") != std::string::npos);
    auto after = run({"tower", "promote", "--level", "0", "--target", "6", "x1", "--max-length",
                      "1000"});
    CHECK(after.code == hloc::cli::kExitDomainError);
    CHECK(run({"tower", "promote", "--level", "0", "--target", "4", "x1"}).code == 0);
  }

  TEST_CASE("reduce and centralizer") {
    CHECK(run({"reduce", "x1 x2 x2^-1 x3"}).out == "word=x1*x3 length=2\n");
    auto j = run_json({"reduce", "--cyclic", "x1 x2 x3 x2^-1 x1^-1"});
    CHECK(j["conjugator"] == "x1*x2");
    CHECK(j["core"] == "x3");
    auto c = run_json({"centralizer", "x1 x2 x1 x2", "--with", "x1 x2"});
    CHECK(c["generator"] == "x1*x2");
    CHECK(c["commutes"] == true);
  }

  TEST_CASE("subgroup") {
    auto r = run({"subgroup", "--gen", "x1 x2", "--gen", "x2^-1 x3", "x1 x3", "--graph"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "rank=2 vertices=2 edges=3\n"
          "member=true witness=y1*y2\n"
          "0 1 1\n1 0 2\n1 0 3\n");
    auto j = run_json({"subgroup", "--gen", "[x1,x2]", "x1"});
    CHECK(j["member"] == false);
    CHECK(j["witness"].is_null());
  }

  TEST_CASE("tower") {
    CHECK(run({"tower", "phi", "--level", "0", "x1"}).out == "level=1 word=x2*x3*x2^-1*x3^-1\n");
    CHECK(run({"tower", "normalize", "--level", "1", "[x2,x3]"}).out == "level=0 word=x1\n");
    auto j = run_json({"tower", "root", "--level", "0", "--prime", "2", "--max-level", "4", "x1"});
    REQUIRE(j["certificates"].size() == 2);
    CHECK(j["certificates"][0]["verdict"] == "NO_ROOT_PROVEN");
    CHECK(j["certificates"][1]["verdict"] == "NO_ROOT_THROUGH_LEVEL");
    CHECK(j["agree"] == true);
    auto found = run_json({"tower", "root", "--prime", "2", "--mode", "theorem", "x1^2"});
    CHECK(found["certificates"][0]["verdict"] == "ROOT_FOUND");
    CHECK(found["certificates"][0]["witness"]["word"] == "x1");
    auto cc = run_json({"tower", "centralizer-check", "--level", "1", "x2^3"});
    CHECK(cc["generator"] == "x2");
    CHECK(cc["compatible"] == true);
    CHECK(run({"tower", "root", "--prime", "2", "--mode", "sideways", "x1"}).code ==
          hloc::cli::kExitDomainError);
  }

  TEST_CASE("abelianize") {
    auto path = write_temp("hloc_triangle_382.grp",
                           "# G(3,8,2)\ngens: 2\nx1^3 = x2^8 = (x1*x2)^2\n");
    auto r = run({"abelianize", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "Z/2\n");
    CHECK(run({"abelianize", "--triangle", "3", "8", "2"}).out == "Z/2\nfinite=false\n");
    auto j = run_json({"abelianize", "--triangle", "2", "3", "5"});
    CHECK(j["finite"] == true);
    CHECK(run_json({"abelianize", "--h-depth", "3"})["invariants"] == "Z^8");
    auto bad = write_temp("hloc_bad.grp", "gens: 2\nx1 x2\nx1 (x2\n");
    auto e = run({"abelianize", bad.string()});
    CHECK(e.code == hloc::cli::kExitParseError);
    CHECK(e.err.find("line 3, column 7") != std::string::npos);
    CHECK(run({"abelianize"}).code == hloc::cli::kExitDomainError);
    CHECK(run({"abelianize", "/nonexistent/file.grp"}).code == hloc::cli::kExitDomainError);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
  }

  TEST_CASE("adjoin") {
    auto r = run({"adjoin", "--base-rank", "2", "--root-of", "x1^2", "--prime", "2", "--depth",
                  "1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    auto j = run_json({"adjoin", "--base-rank", "2", "--root-of", "x1", "--prime", "2",
                       "--depth", "1", "--element", "x2 t x2^-1 t^-1", "--element", "t^2 x1^-1"});
    CHECK(j["warning"].is_null());
    CHECK(j["elements"][0]["syllables"] == 4);
    CHECK(j["elements"][1]["normal_form"] == "1");
  }

  TEST_CASE("witness") {
    auto r = run({"witness", "--level", "2", "--prime", "2", "--depth", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quotient=Z/2 verified=true\n") != std::string::npos);
    auto j = run_json({"witness", "--level", "2", "--prime", "3", "--depth", "2"});
    CHECK(j["quotient"] == "Z/9");
    CHECK(j["verified"] == true);
    CHECK(j["witness_order"] == "9");
    for (auto const& c : j["relator_checks"]) {
      CHECK(c["image"] == "0");
    }
  }

  TEST_CASE("prufer") {
    CHECK(run({"prufer", "--prime", "2", "1/2", "1/2"}).out == "result=0 order=1\n");
    CHECK(run({"prufer", "--prime", "2", "1/4", "1/4"}).out == "result=1/2 order=2\n");
    CHECK(run({"prufer", "--prime", "2", "1/3"}).code == hloc::cli::kExitParseError);
  }

  TEST_CASE("reports are reproducible") {
    std::vector<std::vector<std::string>> commands{
        {"witness", "--level", "2", "--prime", "3", "--depth", "1"},
        {"subgroup", "--gen", "x1^2", "--gen", "x2 x1 x2^-1", "--graph", "x1^4"},
        {"tower", "root", "--level", "1", "--prime", "3", "--max-level", "3", "x2 x3"},
    };
    for (auto const& c : commands) {
      CHECK(run(c).out == run(c).out);
    }
  }
}
