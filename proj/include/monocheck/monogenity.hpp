#pragma once

#include "monocheck/intfactor.hpp"
#include "monocheck/irreducibility.hpp"
#include "monocheck/zpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace monocheck {

enum class Verdict { Monogenic, NotMonogenic, Inconclusive };
enum class ReasonCode { BaseNotMonogenic, PrimePowerObstruction, ConstantTermNotSquarefree, Reducible };
enum class Check { Pass, Fail, Unknown, NotEvaluated };

const char* verdict_name(Verdict v);
const char* reason_name(ReasonCode r);
const char* check_name(Check c);

struct MonogenityReport {
  Verdict verdict = Verdict::Inconclusive;
  /// Prime dividing the index (NotMonogenic), when one is known.
  std::optional<Integer> witness;
  std::optional<ReasonCode> reason;
  /// Why the verdict is Inconclusive.
  std::string cause;

  Check monogenic_base = Check::NotEvaluated;
  /// Per prime p | k: Pass when p does not divide the index of f(x^p).
  std::map<std::uint64_t, Check> prime_checks;
  Check f0_squarefree = Check::NotEvaluated;

  IrreducibilityStatus irreducibility = IrreducibilityStatus::Unknown;
  std::vector<Certificate> certificates;
  std::optional<ReducibleWitness> reducible_witness;
  std::vector<std::string> notes;
};

struct AnalysisOptions {
  FactorOptions factor;
  IrreducibilityPolicy policy = IrreducibilityPolicy::RequireCertificate;
  std::uint64_t witness_bound = kDefaultWitnessBound;

  IrreducibilityOptions irreducibility() const { return {policy, witness_bound, factor}; }
};

struct BaseMonogenity {
  Tri value = Tri::Unknown;
  /// Smallest prime found dividing the index.
  std::optional<Integer> witness;
  std::string cause;
};

/// Monogenity of monic f assuming f irreducible: every prime with p^2 | D(f)
/// is tested with divides_index. Throws std::domain_error for deg f < 1 or non-monic f.
BaseMonogenity is_monogenic(const IntPoly& f, const FactorOptions& opts = {});

/// Whether p divides the index of f(x^p), via the Frobenius defect.
/// Throws std::domain_error for non-monic f or p not a prime below 2^62.
bool crit_prime_power(const IntPoly& f, std::uint64_t p);

/// Monogenity of f(x^k) from the conditions on f, without touching D(f(x^k)).
MonogenityReport analyze_power_composition(const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts = {});

/// Same question for f = x^d + A*h(x) with |h(0)| = 1, deg h < d, using the
/// specialized coprimality test. Throws std::domain_error on a shape violation.
MonogenityReport analyze_eisenstein_family(const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts = {});

/// For f = x^d + A*h: (A*h(x^p) + (-A*h(x))^p)/p shares a factor with f mod p.
bool eisenstein_condition_fails(const IntPoly& f, std::uint64_t p);

struct PrimeCandidates {
  std::vector<Integer> primes;  // ascending
  /// Pieces of D(f) or f(0) that could not be split.
  std::vector<Integer> unfactored;
  bool complete() const { return unfactored.empty(); }
};

/// Primes dividing D(f), k or f(0): a superset of the primes dividing the index of f(x^k).
PrimeCandidates index_prime_candidates(const IntPoly& f, std::uint64_t k, const FactorOptions& opts = {});

/// Direct Dedekind test on f(x^k) at every candidate prime.
MonogenityReport slow_path_oracle(const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts = {});

/// Primes p <= bound for which p divides the index of f(x^p), ascending.
/// `jobs` > 1 splits the range across threads.
std::vector<std::uint64_t> wss_scan(const IntPoly& f, std::uint64_t bound, unsigned jobs = 1);

}  // namespace monocheck
