#include "monocheck/cli/cache.hpp"
#include "monocheck/cli/commands.hpp"
#include "monocheck/cli/parse.hpp"
#include "monocheck/cli/report.hpp"
#include "monocheck/families.hpp"
#include "../support/oracles.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

using namespace monocheck;
using namespace monocheck::cli;
namespace oracle = monocheck::testing;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "monocheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string work_file(const std::string& name) {
  const std::string path = std::string(MONOCHECK_WORK_DIR) + "/" + name;
  std::remove(path.c_str());
  return path;
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_poly("x^3 - 71*x^2 - 74*x - 1").coeffs(), ints({-1, -74, -71, 1}));
  EXPECT_EQ(parse_poly("x^2-x-1").coeffs(), ints({-1, -1, 1}));
  EXPECT_EQ(parse_poly("(x+1)^2").coeffs(), ints({1, 2, 1}));
}

TEST(Parse, Grammar) {
  EXPECT_EQ(parse_poly("  3 * x^2 "), IntPoly({Integer(0), Integer(0), Integer(3)}));
  EXPECT_EQ(parse_poly("-(x-2)*(x+2)"), (IntPoly{4, 0, -1}));
  EXPECT_EQ(parse_poly("x*x*x + 0"), (IntPoly{0, 0, 0, 1}));
  EXPECT_EQ(parse_poly("123456789012345678901234567890").constant_term(), Integer("123456789012345678901234567890"));
  EXPECT_EQ(parse_poly("2^10"), (IntPoly{1024}));
  EXPECT_EQ(parse_poly("--x"), (IntPoly{0, 1}));
}

TEST(Parse, RoundTripsPrintedForm) {
  std::mt19937_64 rng(91);
  for (int i = 0; i < 300; ++i) {
    const IntPoly f = oracle::random_poly(rng, static_cast<int>(rng() % 8), 1000);
    ASSERT_EQ(parse_poly(f.to_string()), f) << f.to_string();
  }
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "x^", "x^^2", "x/2", "1.5*x", "2e3", "y+1", "x^-1", "(x+1", "x+1)", "x^0", "x^1048576", "3 4"}) {
    EXPECT_THROW(parse_poly(bad), ParseError) << bad;
  }
  try {
    parse_poly("x^2 + y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
    EXPECT_NE(std::string(e.what()).find("position 6"), std::string::npos);
  }
}

TEST(Parse, Ranges) {
  EXPECT_EQ(parse_int_range("-2..2"), ints({-2, -1, 0, 1, 2}));
  EXPECT_EQ(parse_int_range("7"), ints({7}));
  EXPECT_EQ(parse_int_range("1,3..4,-1"), ints({1, 3, 4, -1}));
  EXPECT_THROW(parse_int_range("3..1"), ParseError);
  EXPECT_THROW(parse_int_range("1..x"), ParseError);
  EXPECT_THROW(parse_int_range("0..100000000"), ParseError);
}

TEST(Factorization, FormatAndParse) {
  const auto f = factor(Integer(720));
  EXPECT_EQ(format_factorization(f), "2^4*3^2*5");
  auto back = parse_factorization(720, "2^4*3^2*5");
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->factors, f.factors);
  EXPECT_FALSE(parse_factorization(720, "2^4*9*5").has_value());    // 9 is not prime
  EXPECT_FALSE(parse_factorization(720, "2^4*3^2*7").has_value());  // wrong product
  EXPECT_FALSE(parse_factorization(720, "2^^4").has_value());
}

TEST(Cache, PersistsAndSkipsCorruptLines) {
  const std::string path = work_file("unit_cache.tsv");
  const Integer big = Integer("1000000007") * Integer("998244353");
  {
    FileFactorCache cache(path);
    FactorOptions opts;
    opts.cache = &cache;
    factor(big, opts);
    factor(Integer(720), opts);  // below the storage threshold
    EXPECT_EQ(cache.entries(), 1u);
  }
  {
    std::ofstream app(path, std::ios::app);
    app << "garbage line\n" << big + 2 << "\t3*5\n" << "\n";
  }
  std::ostringstream warnings;
  FileFactorCache cache(path, &warnings);
  EXPECT_EQ(cache.entries(), 1u);
  EXPECT_EQ(cache.skipped_lines(), 2u);
  EXPECT_NE(warnings.str().find("skipping corrupt cache line"), std::string::npos);
  auto hit = cache.lookup(big);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->factors.size(), 2u);
  EXPECT_FALSE(cache.lookup(big + 2).has_value());
}

TEST(Report, JsonSchema) {
  const auto r = analyze_power_composition(IntPoly{-1, -74, -71, 1}, 13);
  const auto j = report_json(r, "x^3 - 71*x^2 - 74*x - 1", 13);
  for (const char* key : {"input", "k", "verdict", "witness", "reasons", "conditions", "certificates", "timings"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["witness"], 13);
  EXPECT_EQ(j["verdict"], "NotMonogenic");
  EXPECT_EQ(j["reasons"][0], "PrimePowerObstruction");
  EXPECT_EQ(j["conditions"]["prime_checks"]["13"], "fail");
  EXPECT_EQ(witness_text(r), "13");
  EXPECT_EQ(reason_text(r), "PrimePowerObstruction");
}

TEST(Report, FamilyRows) {
  const auto row = family_row("m=71", 13, simplest_cubic(71, 13));
  EXPECT_EQ(row.verdict, "HypothesisViolated");
  EXPECT_EQ(row_tsv(row).substr(0, 8), "m=71\t13\t");
  const auto ok = family_row("A=2", 2, FamilyOutcome{pure_binomial(2, 2)});
  EXPECT_EQ(row_tsv(ok), "A=2\t2\tMonogenic\t-\t-");
  EXPECT_EQ(row_json(ok)["verdict"], "Monogenic");
}

TEST(Commands, AnalyzeExitCodes) {
  EXPECT_EQ(run_args({"analyze", "x^2-x-1", "--k", "6"}).code, kExitMonogenic);
  auto cubic = run_args({"analyze", "x^3-71*x^2-74*x-1", "--k", "13"});
  EXPECT_EQ(cubic.code, kExitNotMonogenic);
  EXPECT_NE(cubic.out.find("13"), std::string::npos);
  auto twelve = run_args({"analyze", "x-12", "--k", "2"});
  EXPECT_EQ(twelve.code, kExitNotMonogenic);
  EXPECT_NE(twelve.out.find("ConstantTermNotSquarefree"), std::string::npos);
  EXPECT_EQ(run_args({"analyze", "x^2 - 1000000000000000012000000000000000027", "--k", "2", "--budget", "10"}).code,
            kExitInconclusive);
}

TEST(Commands, UsageErrors) {
  EXPECT_EQ(run_args({"analyze", "x^^2"}).code, kExitUsage);
  EXPECT_EQ(run_args({"analyze", "x-2", "--k", "0"}).code, kExitUsage);
  EXPECT_EQ(run_args({"analyze", "2*x-2"}).code, kExitUsage);
  EXPECT_EQ(run_args({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_args({}).code, kExitUsage);
  EXPECT_EQ(run_args({"analyze", "x-2", "--format", "xml"}).code, kExitUsage);
  auto e = run_args({"analyze", "x+y"});
  EXPECT_NE(e.err.find("position"), std::string::npos);
}

TEST(Commands, GoldenReports) {
  struct Case {
    std::vector<std::string> args;
    const char* file;
  } cases[] = {
      {{"analyze", "x^2-x-1", "--k", "6", "--format", "json"}, "analyze_fib_k6.json"},
      {{"analyze", "x^3 - 71*x^2 - 74*x - 1", "--k", "13", "--format", "json"}, "analyze_cubic71_k13.json"},
      {{"analyze", "x-12", "--k", "2", "--format", "json"}, "analyze_x_minus_12_k2.json"},
  };
  for (const auto& c : cases) {
    const auto r = run_args(c.args);
    EXPECT_EQ(r.out, slurp(std::string(MONOCHECK_GOLDEN_DIR) + "/" + c.file)) << c.file;
  }
}

TEST(Commands, OracleDiscDedekindScan) {
  auto o = run_args({"oracle", "x^2+x+4", "--k", "3"});
  EXPECT_EQ(o.code, kExitNotMonogenic);
  EXPECT_NE(o.out.find("2"), std::string::npos);

  auto s = run_args({"scan", "x^2-x-1", "--bound", "1000"});
  EXPECT_EQ(s.code, 0);
  auto js = run_args({"scan", "x^2-x-1", "--bound", "1000", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(js.out)["primes"], nlohmann::json::array());
  EXPECT_EQ(run_args({"scan", "x-2", "--bound", "4000"}).code, 1);

  auto d = run_args({"disc", "x^2-x-1", "--compose", "2", "--format", "json"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(nlohmann::json::parse(d.out)["magnitude"], "400");

  EXPECT_EQ(run_args({"dedekind", "x^2+25", "--p", "5"}).code, 1);
  EXPECT_EQ(run_args({"dedekind", "x^2-2", "--p", "2"}).code, 0);
  EXPECT_EQ(run_args({"dedekind", "x^2-2", "--p", "4"}).code, kExitUsage);
}

TEST(Commands, FamilySweepMatchesOracle) {
  auto r = run_args({"family", "cubic", "--m", "-20..20", "--k", "3"});
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "params\tk\tverdict\twitness\treason");
  int rows = 0, checked = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const auto tab = line.find('\t');
    const long m = std::stol(line.substr(2, tab - 2));
    const auto v0 = line.find('\t', tab + 1) + 1;
    const std::string verdict = line.substr(v0, line.find('\t', v0) - v0);
    if (verdict == "HypothesisViolated" || verdict == "Inconclusive") continue;
    const auto o = slow_path_oracle(simplest_cubic_poly(m), 3);
    if (o.verdict == Verdict::Inconclusive) continue;
    ++checked;
    EXPECT_EQ(verdict, verdict_name(o.verdict)) << line;
  }
  EXPECT_EQ(rows, 41);
  EXPECT_GT(checked, 5);
  // TSV and JSON-lines carry the same rows.
  auto j = run_args({"family", "pure", "--A", "2..6", "--k", "2", "--format", "json"});
  std::istringstream jl(j.out);
  int jrows = 0;
  while (std::getline(jl, line)) {
    auto obj = nlohmann::json::parse(line);
    EXPECT_TRUE(obj.contains("verdict"));
    ++jrows;
  }
  EXPECT_EQ(jrows, 5);
}

TEST(Commands, WarmCacheRerunIsByteIdentical) {
  const std::string path = work_file("cli_cache.tsv");
  const std::vector<std::string> args = {"analyze", "x^3 + 1000003*x + 998244353", "--k", "2", "--format", "json", "--cache", path};
  const auto cold = run_args(args);
  const std::string stored = slurp(path);
  EXPECT_FALSE(stored.empty());
  const auto warm = run_args(args);
  EXPECT_EQ(cold.code, warm.code);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(slurp(path), stored);  // nothing new to store on the warm run
}

TEST(Commands, JobsDoNotChangeOutput) {
  const auto one = run_args({"family", "pure", "--A", "-30..30", "--k", "2..6", "--jobs", "1"});
  const auto many = run_args({"family", "pure", "--A", "-30..30", "--k", "2..6", "--jobs", "4"});
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(one.code, many.code);
}
