#include "monocheck/cli/commands.hpp"

#include "monocheck/cli/cache.hpp"
#include "monocheck/cli/parse.hpp"
#include "monocheck/cli/report.hpp"
#include "monocheck/families.hpp"
#include "monocheck/idealtest.hpp"
#include "monocheck/monogenity.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

namespace monocheck::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t budget = kDefaultFactorBudget;
  bool assume_irreducible = false;
  std::uint64_t witness_bound = kDefaultWitnessBound;
  std::string format = "text";
  std::string cache_path;
  bool timings = false;
  unsigned jobs = 1;
};

struct Session {
  Config cfg;
  std::unique_ptr<FileFactorCache> cache;
  AnalysisOptions opts;

  Session(const Config& c, std::ostream& err) : cfg(c) {
    if (!cfg.cache_path.empty()) cache = std::make_unique<FileFactorCache>(cfg.cache_path, &err);
    opts.factor.budget = cfg.budget;
    opts.factor.cache = cache.get();
    opts.policy = cfg.assume_irreducible ? IrreducibilityPolicy::Assume : IrreducibilityPolicy::RequireCertificate;
    opts.witness_bound = cfg.witness_bound;
  }
};

std::uint64_t env_budget() {
  const char* v = std::getenv("MONOCHECK_FACTOR_BUDGET");
  if (!v || !*v) return kDefaultFactorBudget;
  try {
    std::size_t used = 0;
    const unsigned long long b = std::stoull(v, &used);
    if (used != std::string(v).size() || b == 0) throw std::invalid_argument("bad");
    return b;
  } catch (const std::exception&) {
    throw UsageError(std::string("MONOCHECK_FACTOR_BUDGET must be a positive integer, got '") + v + "'");
  }
}

IntPoly read_poly(const std::string& text, bool need_monic = true) {
  IntPoly f = parse_poly(text);
  if (need_monic && (f.degree() < 1 || !f.is_monic())) throw UsageError("polynomial must be monic of degree >= 1: " + f.to_string());
  return f;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Monogenic: return kExitMonogenic;
    case Verdict::NotMonogenic: return kExitNotMonogenic;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInternal;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void print_report(std::ostream& out, const Config& cfg, const MonogenityReport& r, const std::string& input, std::uint64_t k,
                  const Timings& t) {
  if (cfg.format == "json")
    out << report_json(r, input, k, t).dump(2) << "\n";
  else if (cfg.format == "tsv")
    out << row_tsv({input, k, verdict_name(r.verdict), witness_text(r), reason_text(r)}) << "\n";
  else
    out << report_text(r, input, k, t);
}

int cmd_verdict(const Session& s, const std::string& text, std::uint64_t k, bool oracle, std::ostream& out) {
  const IntPoly f = read_poly(text);
  if (k == 0) throw UsageError("--k must be positive");
  const auto start = std::chrono::steady_clock::now();
  const MonogenityReport r = oracle ? slow_path_oracle(f, k, s.opts) : analyze_power_composition(f, k, s.opts);
  Timings t;
  if (s.cfg.timings) t.emplace_back("total_ms", elapsed_ms(start));
  print_report(out, s.cfg, r, f.to_string(), k, t);
  return verdict_exit(r.verdict);
}

int cmd_disc(const Session& s, const std::string& text, std::uint64_t ell, std::ostream& out) {
  const IntPoly f = read_poly(text);
  if (ell == 0) throw UsageError("--compose must be positive");
  const Integer d = discriminant(f);
  nlohmann::json j{{"input", f.to_string()}, {"discriminant", d.get_str()}};
  bool agree = true;
  if (ell > 1) {
    if (f.constant_term() == 0) throw UsageError("--compose needs f(0) != 0");
    const CompositionDiscriminant cd = disc_power_composition(f, ell);
    const Integer direct = discriminant(compose_power(f, ell));
    agree = abs(direct) == cd.magnitude;
    j["compose"] = ell;
    j["magnitude"] = cd.magnitude.get_str();
    j["direct"] = direct.get_str();
    j["agree"] = agree;
  }
  if (s.cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "D(f) = " << d << "\n";
    if (ell > 1) {
      out << "|D(f(x^" << ell << "))| by formula = " << j["magnitude"].get<std::string>() << "\n";
      out << "D(f(x^" << ell << ")) direct     = " << j["direct"].get<std::string>() << "\n";
      out << (agree ? "agree" : "MISMATCH") << "\n";
    }
  }
  return agree ? 0 : kExitInternal;
}

int cmd_dedekind(const Session& s, const std::string& text, std::uint64_t p, std::ostream& out) {
  const IntPoly f = read_poly(text);
  if (p >= kMaxModulus || !is_prime_u64(p)) throw UsageError("--p must be a prime below 2^62");
  const IndexTest t = divides_index(f, p);
  const DedekindDetails m = dedekind_M_form(f, p);
  if (t.divides != m.divides) throw std::logic_error("Dedekind formulations disagree");
  if (s.cfg.format == "json") {
    nlohmann::json j{{"input", f.to_string()}, {"p", p}, {"divides_index", t.divides}};
    j["witness"] = t.witness ? nlohmann::json(t.witness->to_string()) : nlohmann::json(nullptr);
    j["m_bar"] = m.m_bar.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << p << (t.divides ? " divides" : " does not divide") << " the index of " << f.to_string() << "\n";
    if (t.witness) out << "witness factor: " << t.witness->to_string() << "\n";
    out << "M(x) mod p = " << m.m_bar.to_string() << "\n";
  }
  return t.divides ? 1 : 0;
}

int cmd_scan(const Session& s, const std::string& text, std::uint64_t bound, std::ostream& out) {
  const IntPoly f = read_poly(text);
  const auto hits = wss_scan(f, bound, s.cfg.jobs);
  if (s.cfg.format == "json") {
    out << nlohmann::json{{"input", f.to_string()}, {"bound", bound}, {"primes", hits}}.dump(2) << "\n";
  } else {
    if (hits.empty()) out << "none";
    for (std::size_t i = 0; i < hits.size(); ++i) out << (i ? " " : "") << hits[i];
    out << "\n";
  }
  return hits.empty() ? 0 : 1;
}

struct Instance {
  std::string params;
  std::uint64_t k;
  std::function<FamilyOutcome()> run;
};

// Runs instances on up to `jobs` workers and writes rows in input order as they become available.
int run_sweep(const Session& s, std::vector<Instance> instances, std::ostream& out, std::ostream& err) {
  const bool json = s.cfg.format == "json";
  if (!json) out << "params\tk\tverdict\twitness\treason\n";
  std::vector<std::optional<FamilyRow>> rows(instances.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      FamilyRow row;
      try {
        row = family_row(instances[i].params, instances[i].k, instances[i].run());
      } catch (const std::domain_error& e) {
        row = {instances[i].params, instances[i].k, "HypothesisViolated", "-", e.what()};
      }
      std::lock_guard<std::mutex> lock(mu);
      rows[i] = std::move(row);
      cv.notify_all();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(s.cfg.jobs, static_cast<unsigned>(instances.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < n; ++j) pool.emplace_back(worker);

  std::size_t monogenic = 0, nonmono = 0, inconclusive = 0, violated = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    FamilyRow row;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return rows[i].has_value(); });
      row = *rows[i];
    }
    if (row.verdict == "Monogenic") ++monogenic;
    else if (row.verdict == "NotMonogenic") ++nonmono;
    else if (row.verdict == "Inconclusive") ++inconclusive;
    else ++violated;
    out << (json ? row_json(row).dump() : row_tsv(row)) << "\n";
    out.flush();
  }
  for (auto& t : pool) t.join();
  err << rows.size() << " instances: " << monogenic << " monogenic, " << nonmono << " not monogenic, " << inconclusive
      << " inconclusive, " << violated << " hypothesis violated\n";
  return inconclusive ? kExitInconclusive : 0;
}

std::vector<std::uint64_t> k_values(const std::string& text) {
  std::vector<std::uint64_t> ks;
  for (const auto& v : parse_int_range(text)) {
    if (v < 1 || !fits_u64(v)) throw UsageError("k values must be positive");
    ks.push_back(to_u64(v));
  }
  return ks;
}

unsigned small_unsigned(const Integer& v, const char* name) {
  if (v < 1 || v > 1000) throw UsageError(std::string(name) + " values must lie in 1..1000");
  return static_cast<unsigned>(v.get_ui());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide monogenity of power-compositional polynomials f(x^k)", "monocheck"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("--budget", budget_flag, "Pollard-rho iteration cap (overrides MONOCHECK_FACTOR_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--assume-irreducible", cfg.assume_irreducible, "Accept f(x^k) as irreducible when no certificate is found");
  app.add_option("--witness-bound", cfg.witness_bound, "Largest prime tried for mod-p irreducibility witnesses")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
  app.add_option("--cache", cfg.cache_path, "Factorization cache file");
  app.add_flag("--timings", cfg.timings, "Include timings in the report");
  app.add_option("--jobs", cfg.jobs, "Worker threads for scans and sweeps")->check(CLI::Range(1u, 1024u));

  std::string poly;
  std::uint64_t k = 1, ell = 1, p = 0, bound = 0;

  auto* analyze = app.add_subcommand("analyze", "Decide monogenity of f(x^k) from conditions on f");
  analyze->add_option("poly", poly, "Monic integer polynomial in x")->required();
  analyze->add_option("--k", k, "Exponent k");

  auto* oracle = app.add_subcommand("oracle", "Decide monogenity of f(x^k) by a direct Dedekind test");
  oracle->add_option("poly", poly)->required();
  oracle->add_option("--k", k, "Exponent k");

  auto* disc = app.add_subcommand("disc", "Discriminant of f, or of f(x^l) by formula and directly");
  disc->add_option("poly", poly)->required();
  disc->add_option("--compose", ell, "Exponent l");

  auto* dedekind = app.add_subcommand("dedekind", "Whether p divides the index of f");
  dedekind->add_option("poly", poly)->required();
  dedekind->add_option("--p", p, "Prime")->required();

  auto* scan = app.add_subcommand("scan", "Primes p <= bound dividing the index of f(x^p)");
  scan->add_option("poly", poly)->required();
  scan->add_option("--bound", bound, "Largest prime scanned")->required();

  auto* family = app.add_subcommand("family", "Sweep a parametric family");
  family->require_subcommand(1);
  std::string ks = "2", as, bs, ds, ms;
  auto* pure = family->add_subcommand("pure", "x^k - A");
  pure->add_option("--A", as, "Range a..b")->required();
  pure->add_option("--k", ks, "Range of k");
  auto* cubic = family->add_subcommand("cubic", "x^3 - m x^2 - (m+3) x - 1 composed with x^k");
  cubic->add_option("--m", ms, "Range a..b")->required();
  cubic->add_option("--k", ks, "Range of k");
  auto* binom = family->add_subcommand("binom", "x^d + A (Bx + 1)^m composed with x^k");
  binom->add_option("--A", as)->required();
  binom->add_option("--B", bs)->required();
  binom->add_option("--d", ds)->required();
  binom->add_option("--m", ms)->required();
  binom->add_option("--k", ks, "Range of k");
  auto* split = family->add_subcommand("split", "f splitting completely modulo every prime of k");
  split->add_option("poly", poly)->required();
  split->add_option("--k", ks, "Range of k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.budget = budget_flag ? *budget_flag : env_budget();
    Session s(cfg, err);
    if (analyze->parsed()) return cmd_verdict(s, poly, k, false, out);
    if (oracle->parsed()) return cmd_verdict(s, poly, k, true, out);
    if (disc->parsed()) return cmd_disc(s, poly, ell, out);
    if (dedekind->parsed()) return cmd_dedekind(s, poly, p, out);
    if (scan->parsed()) return cmd_scan(s, poly, bound, out);

    std::vector<Instance> inst;
    const auto kv = k_values(ks);
    const AnalysisOptions& o = s.opts;
    if (pure->parsed()) {
      for (const auto& a : parse_int_range(as))
        for (auto kk : kv)
          inst.push_back({"A=" + a.get_str(), kk, [a, kk, &o] { return FamilyOutcome(pure_binomial(a, kk, o)); }});
    } else if (cubic->parsed()) {
      for (const auto& m : parse_int_range(ms))
        for (auto kk : kv) inst.push_back({"m=" + m.get_str(), kk, [m, kk, &o] { return simplest_cubic(m, kk, o); }});
    } else if (binom->parsed()) {
      const auto A = parse_int_range(as), B = parse_int_range(bs), D = parse_int_range(ds), M = parse_int_range(ms);
      for (const auto& a : A)
        for (const auto& b : B)
          for (const auto& dv : D)
            for (const auto& mv : M) {
              const unsigned d = small_unsigned(dv, "--d"), m = small_unsigned(mv, "--m");
              const std::string params =
                  "A=" + a.get_str() + ",B=" + b.get_str() + ",d=" + std::to_string(d) + ",m=" + std::to_string(m);
              for (auto kk : kv)
                inst.push_back({params, kk, [a, b, d, m, kk, &o] { return FamilyOutcome(binomial_h_family(a, b, d, m, kk, o)); }});
            }
    } else if (split->parsed()) {
      const IntPoly f = read_poly(poly);
      for (auto kk : kv) inst.push_back({f.to_string(), kk, [f, kk, &o] { return split_family(f, kk, o); }});
    }
    return run_sweep(s, std::move(inst), out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace monocheck::cli
