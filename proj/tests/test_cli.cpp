#include "../tools/cli.hpp"
#include "sondow/search.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sondow::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "sondow_cli_tests";
  fs::create_directories(dir);
  auto p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

const std::string k97 =
    "4200017949707747062038711509670656632404195753751630609228764416142557211582098432545190323474818";

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run({"check", "30", "--mu", "-1"}).code == 0);
  CHECK(run({"check", "30", "--mu", "1"}).code == 1);
  CHECK(run({"check", "1806", "--mu", "1", "--json"}).code == 0);
  CHECK(run({"check", "1", "--mu", "0"}).code == 0);
  CHECK(run({"check", "abc", "--mu", "1"}).code == 2);
  CHECK(run({"check", "0", "--mu", "1"}).code == 2);
  CHECK(run({"check", "30"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("check --json reports flags and canonical mu") {
  const auto r = run({"check", "858", "--mu", "-1", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"canonical_mu\":\"857\"") != std::string::npos);
  CHECK(r.out.find("\"member\":true") != std::string::npos);
  CHECK(r.out.find("\"consistent\":true") != std::string::npos);
  CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("factor hints on the command line") {
  CHECK(run({"check", "30", "--mu", "-1", "--factors", "2,3,5"}).code == 0);
  const auto bad = run({"check", "30", "--mu", "-1", "--factors", "2,3,7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("invalid-hint") != std::string::npos);
  CHECK(run({"check", "30", "--mu", "-1", "--factors", "2,15"}).code == 2);

  // The 97-digit Giuga number: hinted it checks; unhinted it exhausts the budget.
  CHECK(run({"check", k97, "--mu", "-1", "--factors",
             "2,3,11,23,31,47059,2217342227,1729101023519,8491659218261819498490029296021,"
             "58254480569119734123541298976556403"})
            .code == 0);
  const auto unhinted = run({"check", k97, "--mu", "-1"});
  CHECK(unhinted.code == 3);
  CHECK_FALSE(unhinted.err.empty());
}

TEST_CASE("mu-of and derive") {
  CHECK(run({"mu-of", "30"}).out == "29\n");
  CHECK(run({"mu-of", "1806"}).out == "1\n");
  CHECK(run({"mu-of", "1"}).out == "0\n");
  CHECK(run({"derive", "30"}).out == "31\n");
  CHECK(run({"derive", "1"}).out == "0\n");
  CHECK(run({"derive", "8"}).out == "12\n");
  CHECK(run({"derive", "-3"}).code == 2);
}

TEST_CASE("search output re-checks through check --factors") {
  const auto r = run({"search", "--mu", "-1", "--from", "2", "--to", "100000", "--composite-only"});
  REQUIRE(r.code == 0);
  const auto records = lines(r.out);
  REQUIRE(records.size() == 4);
  for (const auto& line : records) {
    const auto rec = sondow::parse_jsonl_record(line);
    std::string spec;
    for (const auto& [p, e] : rec.factorization.factors()) {
      if (!spec.empty()) spec += ",";
      spec += p.get_str() + "^" + std::to_string(e);
    }
    CHECK(run({"check", std::to_string(rec.n), "--mu", "-1", "--factors", spec}).code == 0);
  }
  CHECK(run({"search", "--mu", "1", "--from", "10", "--to", "5"}).code == 2);
  CHECK(run({"search", "--mu", "1", "--from", "1", "--to", "5"}).code == 2);
}

TEST_CASE("interrupted and resumed search matches an uninterrupted one") {
  const auto whole = scratch("whole.jsonl");
  REQUIRE(run({"search", "--mu", "1", "--from", "2", "--to", "300000", "--jsonl", whole.string(),
               "--segment-size", "40000"})
              .code == 0);

  const auto cp = scratch("cp.json");
  const auto part = scratch("part.jsonl");
  const std::vector<std::string> base{"search", "--mu", "1", "--from", "2", "--to", "300000",
                                      "--segment-size", "40000", "--checkpoint", cp.string(),
                                      "--jsonl", part.string(), "--jobs", "3"};
  auto first = base;
  first.insert(first.end(), {"--max-segments", "1"});
  CHECK(run(first).code == 0);
  CHECK(fs::exists(cp));
  CHECK(slurp(part) != slurp(whole));
  auto second = base;
  second.insert(second.end(), {"--max-segments", "2"});
  CHECK(run(second).code == 0);
  CHECK(run(base).code == 0);
  CHECK(slurp(part) == slurp(whole));

  // A checkpoint for a different mu is refused.
  auto other = base;
  other[2] = "-1";
  CHECK(run(other).code == 2);

  std::ofstream(cp) << "{ garbage";
  CHECK(run(base).code == 2);
}

TEST_CASE("conjecture commands") {
  const auto c1 = run({"conjecture1", "--mu-range", "2..20"});
  CHECK(c1.code == 0);
  CHECK(c1.out.find("exhausted: 2 4 16") != std::string::npos);
  // |mu| < 2 is outside the conjecture and skipped.
  const auto small = run({"conjecture1", "--mu-range", "-1..3"});
  CHECK(small.code == 0);
  CHECK(lines(small.out).size() == 3);
  CHECK(run({"conjecture1", "--mu-range", "3..2"}).code == 2);
  CHECK(run({"conjecture1", "--mu-range", "5"}).code == 2);

  const auto c2 = run({"conjecture2", "--mu", "2", "--bound", "1000"});
  CHECK(c2.code == 0);
  CHECK(c2.out.find("witness 3") != std::string::npos);
  const auto none = run({"conjecture2", "--mu", "673", "--bound", "10000"});
  CHECK(none.out.find("exhausted") != std::string::npos);
  CHECK(run({"conjecture2", "--mu", "5", "--bound", "5"}).code == 2);
}

TEST_CASE("residues") {
  const auto r = run({"residues", "--mod", "288", "--input", testing::data_path("giuga_first12.txt")});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"30", "282", "282", "246", "210", "210", "174",
                                                 "174", "174", "138", "138", "138"});
  const auto ppp = run({"residues", "--mod", "288", "--input", testing::data_path("ppp_r2to8.txt")});
  CHECK(lines(ppp.out) == std::vector<std::string>{"6", "42", "78", "114", "150", "186", "222"});
  CHECK(run({"residues", "--mod", "0", "--input", testing::data_path("ppp_r2to8.txt")}).code == 2);
  CHECK(run({"residues", "--input", "/nonexistent/file"}).code == 2);
}

TEST_CASE("xcheck") {
  const auto giuga = testing::data_path("a007850.txt");
  const auto hinted =
      run({"xcheck", "--bfile", giuga, "--predicate", "giuga", "--hints", testing::data_path("giuga_hints.jsonl")});
  CHECK(hinted.code == 0);
  CHECK(hinted.out.find("13/13 pass") != std::string::npos);

  const auto wrong = run({"xcheck", "--bfile", testing::data_path("a054377.txt"), "--predicate", "giuga"});
  CHECK(wrong.code == 1);
  CHECK(run({"xcheck", "--bfile", giuga, "--predicate", "nonsense"}).code == 2);
}
