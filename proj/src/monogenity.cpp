#include "monocheck/monogenity.hpp"

#include "monocheck/idealtest.hpp"
#include "monocheck/modpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace monocheck {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Monogenic: return "Monogenic";
    case Verdict::NotMonogenic: return "NotMonogenic";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* reason_name(ReasonCode r) {
  switch (r) {
    case ReasonCode::BaseNotMonogenic: return "BaseNotMonogenic";
    case ReasonCode::PrimePowerObstruction: return "PrimePowerObstruction";
    case ReasonCode::ConstantTermNotSquarefree: return "ConstantTermNotSquarefree";
    case ReasonCode::Reducible: return "Reducible";
  }
  return "?";
}

const char* check_name(Check c) {
  switch (c) {
    case Check::Pass: return "pass";
    case Check::Fail: return "fail";
    case Check::Unknown: return "unknown";
    case Check::NotEvaluated: return "not-evaluated";
  }
  return "?";
}

namespace {

void require_monic(const IntPoly& f, const char* what) {
  if (f.degree() < 1 || !f.is_monic()) throw std::domain_error(std::string(what) + ": f must be monic of degree >= 1");
}

Check from_tri_pass_if_yes(Tri t) { return t == Tri::Yes ? Check::Pass : t == Tri::No ? Check::Fail : Check::Unknown; }

void fail(MonogenityReport& r, std::optional<Integer> witness, ReasonCode reason) {
  r.verdict = Verdict::NotMonogenic;
  r.witness = std::move(witness);
  r.reason = reason;
}

// Records the irreducibility outcome; returns true when the report is already final.
bool record_irreducibility(MonogenityReport& r, const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts) {
  IrreducibilityResult irr = certify_irreducible(f, k, opts.irreducibility());
  r.irreducibility = irr.status;
  if (irr.certificate) r.certificates.push_back(*irr.certificate);
  if (irr.status == IrreducibilityStatus::Reducible) {
    r.reducible_witness = irr.witness;
    fail(r, std::nullopt, ReasonCode::Reducible);
    return true;
  }
  return false;
}

// Verdict once no condition has failed.
void settle(MonogenityReport& r, const std::vector<std::string>& unknowns) {
  if (r.verdict == Verdict::NotMonogenic) return;
  if (!unknowns.empty()) {
    r.verdict = Verdict::Inconclusive;
    r.cause = unknowns.front();
    return;
  }
  if (r.irreducibility == IrreducibilityStatus::Unknown) {
    r.verdict = Verdict::Inconclusive;
    r.cause = "irreducibility of f(x^k) not certified";
    return;
  }
  r.verdict = Verdict::Monogenic;
}

bool is_prime_power(std::uint64_t k) { return k > 1 && prime_divisors_u64(k).size() == 1; }

void run_base(MonogenityReport& r, const IntPoly& f, const AnalysisOptions& opts, std::vector<std::string>& unknowns) {
  BaseMonogenity base = is_monogenic(f, opts.factor);
  r.monogenic_base = from_tri_pass_if_yes(base.value);
  if (base.value == Tri::No) fail(r, base.witness, ReasonCode::BaseNotMonogenic);
  if (base.value == Tri::Unknown) unknowns.push_back(base.cause);
}

// Each coefficient divided by p (all must be divisible), as residues mod p.
ModPoly exact_div_p(const ModPoly& a, std::uint64_t p) {
  std::vector<std::uint64_t> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (a.coeffs()[i] % p != 0) throw std::logic_error("coprimality test: expression not divisible by p");
    v[i] = a.coeffs()[i] / p;
  }
  return ModPoly(p, std::move(v));
}

struct Shape {
  unsigned d;
  IntPoly ah;  // A*h(x) = f - x^d
};

Shape eisenstein_shape(const IntPoly& f) {
  require_monic(f, "analyze_eisenstein_family");
  if (f.degree() < 2) throw std::domain_error("analyze_eisenstein_family: need deg f > 1");
  const Integer a = f.constant_term();
  if (a == 0) throw std::domain_error("analyze_eisenstein_family: f(0) must be nonzero");
  IntPoly ah = f - IntPoly::monomial(1, static_cast<std::size_t>(f.degree()));
  for (const auto& c : ah.coeffs())
    if (!mpz_divisible_p(c.get_mpz_t(), a.get_mpz_t()))
      throw std::domain_error("analyze_eisenstein_family: f is not of the form x^d + A*h(x) with |h(0)| = 1");
  return {static_cast<unsigned>(f.degree()), std::move(ah)};
}

}  // namespace

BaseMonogenity is_monogenic(const IntPoly& f, const FactorOptions& opts) {
  require_monic(f, "is_monogenic");
  if (f.degree() == 1) return {Tri::Yes, std::nullopt, ""};
  const Integer disc = discriminant(f);
  const FactoredInt fd = factor(disc, opts);
  BaseMonogenity out{Tri::Yes, std::nullopt, ""};
  for (const auto& [p, e] : fd.factors) {
    if (e < 2) continue;
    if (!fits_u64(p) || to_u64(p) >= kMaxModulus) {
      if (out.cause.empty()) out.cause = "prime " + p.get_str() + " too large for residue arithmetic";
      out.value = Tri::Unknown;
      continue;
    }
    if (divides_index(f, to_u64(p)).divides) return {Tri::No, p, ""};
  }
  if (!fd.complete()) return {Tri::Unknown, std::nullopt, "discriminant cofactor " + fd.cofactor.get_str() + " not factored"};
  return out;
}

bool crit_prime_power(const IntPoly& f, std::uint64_t p) {
  require_monic(f, "crit_prime_power");
  if (p >= kMaxModulus || !is_prime_u64(p)) throw std::domain_error("crit_prime_power: p must be a prime below 2^62");
  const ModPoly defect = frobenius_defect_rem(f, p);
  return !gcd_mod_p(defect, ModPoly::from_int(f, p)).is_one();
}

bool eisenstein_condition_fails(const IntPoly& f, std::uint64_t p) {
  const Shape shape = eisenstein_shape(f);
  if (p >= kMaxModulus || !is_prime_u64(p)) throw std::domain_error("eisenstein_condition_fails: p must be a prime below 2^62");
  // Beyond word-size p^2 the expression agrees with the generic defect modulo f.
  if (p >= (std::uint64_t{1} << 31)) return crit_prime_power(f, p);
  const std::uint64_t p2 = p * p;
  const ModPoly fm = ModPoly::from_int(f, p2);
  const ModPoly ah = ModPoly::from_int(shape.ah, p2);
  const ModPoly xp = powmod(ModPoly::x(p2), from_u64(p), fm);
  ModPoly ah_xp(p2);  // A*h(x^p) mod f
  for (int i = ah.degree(); i >= 0; --i)
    ah_xp = rem(ah_xp * xp + ModPoly::constant(p2, ah.coeff(static_cast<std::size_t>(i))), fm);
  const ModPoly neg_pow = powmod(ModPoly(p2) - ah, from_u64(p), fm);
  const ModPoly expr = exact_div_p(ah_xp + neg_pow, p);
  return !gcd_mod_p(expr, ModPoly::from_int(f, p)).is_one();
}

MonogenityReport analyze_power_composition(const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts) {
  require_monic(f, "analyze_power_composition");
  if (k == 0) throw std::domain_error("analyze_power_composition: k must be positive");
  MonogenityReport r;
  if (record_irreducibility(r, f, k, opts)) return r;
  std::vector<std::string> unknowns;

  if (k == 1) {
    run_base(r, f, opts, unknowns);
    settle(r, unknowns);
    return r;
  }

  const SquarefreeResult sq = is_squarefree(f.constant_term(), opts.factor);
  r.f0_squarefree = from_tri_pass_if_yes(sq.value);
  if (sq.value == Tri::No) {
    fail(r, sq.witness, ReasonCode::ConstantTermNotSquarefree);
    return r;
  }
  if (sq.value == Tri::Unknown) unknowns.push_back("squarefreeness of f(0) undetermined");

  const auto ps = prime_divisors_u64(k);
  for (auto p : ps) r.prime_checks[p] = Check::NotEvaluated;
  for (auto p : ps) {
    if (p >= kMaxModulus) {
      r.prime_checks[p] = Check::Unknown;
      unknowns.push_back("prime " + std::to_string(p) + " too large for residue arithmetic");
      continue;
    }
    if (crit_prime_power(f, p)) {
      r.prime_checks[p] = Check::Fail;
      fail(r, from_u64(p), ReasonCode::PrimePowerObstruction);
      return r;
    }
    r.prime_checks[p] = Check::Pass;
  }

  run_base(r, f, opts, unknowns);
  if (r.verdict == Verdict::NotMonogenic) return r;
  if (is_prime_power(k) && r.monogenic_base == Check::Pass && r.f0_squarefree == Check::Pass)
    r.notes.push_back("index of f(x^k) is a power of " + std::to_string(ps.front()));
  settle(r, unknowns);
  return r;
}

MonogenityReport analyze_eisenstein_family(const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts) {
  const Shape shape = eisenstein_shape(f);
  if (k == 0) throw std::domain_error("analyze_eisenstein_family: k must be positive");
  MonogenityReport r;
  if (record_irreducibility(r, f, k, opts)) return r;
  std::vector<std::string> unknowns;

  const Integer a = abs(f.constant_term());
  const auto ps = prime_divisors_u64(k);
  const bool covered = std::all_of(ps.begin(), ps.end(), [&](std::uint64_t p) { return mpz_divisible_ui_p(a.get_mpz_t(), p) != 0; });
  if (covered && k > 1) {
    r.notes.push_back("rad(k) divides rad(A): monogenic iff f is");
  } else {
    for (auto p : ps) r.prime_checks[p] = Check::NotEvaluated;
    for (auto p : ps) {
      if (p >= kMaxModulus) {
        r.prime_checks[p] = Check::Unknown;
        unknowns.push_back("prime " + std::to_string(p) + " too large for residue arithmetic");
        continue;
      }
      if (eisenstein_condition_fails(f, p)) {
        r.prime_checks[p] = Check::Fail;
        fail(r, from_u64(p), ReasonCode::PrimePowerObstruction);
        return r;
      }
      r.prime_checks[p] = Check::Pass;
    }
  }
  run_base(r, f, opts, unknowns);
  settle(r, unknowns);
  return r;
}

PrimeCandidates index_prime_candidates(const IntPoly& f, std::uint64_t k, const FactorOptions& opts) {
  require_monic(f, "index_prime_candidates");
  if (f.constant_term() == 0) throw std::domain_error("index_prime_candidates: f(0) must be nonzero");
  if (k == 0) throw std::domain_error("index_prime_candidates: k must be positive");
  std::set<Integer> primes;
  PrimeCandidates out;
  for (const Integer& n : {discriminant(f), Integer(f.constant_term())}) {
    if (abs(n) < 2) continue;
    const FactoredInt fi = factor(n, opts);
    for (const auto& [p, e] : fi.factors) primes.insert(p);
    for (const auto& piece : fi.unfactored) out.unfactored.push_back(piece);
  }
  for (auto p : prime_divisors_u64(k)) primes.insert(from_u64(p));
  out.primes.assign(primes.begin(), primes.end());
  return out;
}

MonogenityReport slow_path_oracle(const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts) {
  require_monic(f, "slow_path_oracle");
  if (k == 0) throw std::domain_error("slow_path_oracle: k must be positive");
  MonogenityReport r;
  if (record_irreducibility(r, f, k, opts)) return r;
  std::vector<std::string> unknowns;
  const IntPoly F = compose_power(f, k);
  const PrimeCandidates cand = index_prime_candidates(f, k, opts.factor);
  for (const auto& piece : cand.unfactored) unknowns.push_back("candidate piece " + piece.get_str() + " not factored");
  const Integer f0 = abs(f.constant_term());
  for (const auto& p : cand.primes) {
    if (!fits_u64(p) || to_u64(p) >= kMaxModulus) {
      unknowns.push_back("prime " + p.get_str() + " too large for residue arithmetic");
      continue;
    }
    const std::uint64_t pu = to_u64(p);
    if (!divides_index(F, pu).divides) continue;
    ReasonCode reason = ReasonCode::BaseNotMonogenic;
    if (k > 1 && mpz_divisible_p(f0.get_mpz_t(), Integer(p * p).get_mpz_t()))
      reason = ReasonCode::ConstantTermNotSquarefree;
    else if (k % pu == 0)
      reason = ReasonCode::PrimePowerObstruction;
    fail(r, p, reason);
    return r;
  }
  r.notes.push_back("direct test of f(x^k) at " + std::to_string(cand.primes.size()) + " candidate primes");
  settle(r, unknowns);
  return r;
}

std::vector<std::uint64_t> wss_scan(const IntPoly& f, std::uint64_t bound, unsigned jobs) {
  require_monic(f, "wss_scan");
  const std::vector<std::uint64_t> primes = primes_up_to(std::min(bound, kMaxModulus - 1));
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
  std::vector<std::vector<std::uint64_t>> hits(jobs);
  auto work = [&](unsigned j) {
    for (std::size_t i = j; i < primes.size(); i += jobs)
      if (crit_prime_power(f, primes[i])) hits[j].push_back(primes[i]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> out;
  for (auto& h : hits) out.insert(out.end(), h.begin(), h.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monocheck
