#include "monocheck/families.hpp"

#include "monocheck/modpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace monocheck {

namespace {

Check pass_if_yes(Tri t) { return t == Tri::Yes ? Check::Pass : t == Tri::No ? Check::Fail : Check::Unknown; }

void fail(MonogenityReport& r, std::optional<Integer> witness, ReasonCode reason) {
  r.verdict = Verdict::NotMonogenic;
  r.witness = std::move(witness);
  r.reason = reason;
}

bool take_irreducibility(MonogenityReport& r, const IrreducibilityResult& irr) {
  r.irreducibility = irr.status;
  if (irr.certificate) r.certificates.push_back(*irr.certificate);
  if (irr.status != IrreducibilityStatus::Reducible) return false;
  r.reducible_witness = irr.witness;
  fail(r, std::nullopt, ReasonCode::Reducible);
  return true;
}

void settle(MonogenityReport& r, const std::vector<std::string>& unknowns) {
  if (r.verdict == Verdict::NotMonogenic) return;
  r.verdict = Verdict::Inconclusive;
  if (!unknowns.empty())
    r.cause = unknowns.front();
  else if (r.irreducibility == IrreducibilityStatus::Unknown)
    r.cause = "irreducibility of f(x^k) not certified";
  else
    r.verdict = Verdict::Monogenic;
}

void check_squarefree(MonogenityReport& r, Check& slot, const Integer& n, ReasonCode reason, const AnalysisOptions& opts,
                      std::vector<std::string>& unknowns, const char* label) {
  const SquarefreeResult sq = is_squarefree(n, opts.factor);
  slot = pass_if_yes(sq.value);
  if (sq.value == Tri::No) fail(r, sq.witness, reason);
  if (sq.value == Tri::Unknown) unknowns.push_back(std::string("squarefreeness of ") + label + " undetermined");
}

void run_base(MonogenityReport& r, const IntPoly& f, const AnalysisOptions& opts, std::vector<std::string>& unknowns) {
  const BaseMonogenity base = is_monogenic(f, opts.factor);
  r.monogenic_base = pass_if_yes(base.value);
  if (base.value == Tri::No) fail(r, base.witness, ReasonCode::BaseNotMonogenic);
  if (base.value == Tri::Unknown) unknowns.push_back(base.cause);
}

Integer mod_p2(const Integer& v, std::uint64_t p) {
  const Integer p2 = from_u64(p) * from_u64(p);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p2.get_mpz_t());
  return r;
}

void require_small_prime(std::uint64_t p, const char* what) {
  if (p >= kMaxModulus || !is_prime_u64(p)) throw std::domain_error(std::string(what) + ": p must be a prime below 2^62");
}

}  // namespace

MonogenityReport pure_binomial(const Integer& a, std::uint64_t k, const AnalysisOptions& opts) {
  if (k < 2) throw std::domain_error("pure_binomial: k must be >= 2");
  const IntPoly f({Integer(-a), Integer(1)});
  MonogenityReport r;
  if (take_irreducibility(r, certify_irreducible(f, k, opts.irreducibility()))) return r;
  std::vector<std::string> unknowns;
  r.monogenic_base = Check::Pass;

  check_squarefree(r, r.f0_squarefree, a, ReasonCode::ConstantTermNotSquarefree, opts, unknowns, "A");
  if (r.verdict == Verdict::NotMonogenic) return r;

  const auto ps = prime_divisors_u64(k);
  for (auto p : ps) r.prime_checks[p] = Check::NotEvaluated;
  for (auto p : ps) {
    const Integer pz = from_u64(p);
    const Integer p2 = pz * pz;
    // p^2 | A^p - A, evaluated modulo p^2
    const bool obstructed = (modpow(a, pz, p2) - mod_p2(a, p)) % p2 == 0;
    r.prime_checks[p] = obstructed ? Check::Fail : Check::Pass;
    if (obstructed) {
      fail(r, pz, ReasonCode::PrimePowerObstruction);
      return r;
    }
  }
  settle(r, unknowns);
  return r;
}

bool split_obstruction(const IntPoly& f, std::uint64_t p) {
  require_small_prime(p, "split_obstruction");
  const Integer pz = from_u64(p), p2 = pz * pz;
  for (const auto& root : roots_mod_p(ModPoly::from_int(f, p)))
    if (eval_mod(f, modpow(from_u64(root.root), pz, p2), p2) == 0) return true;
  return false;
}

bool split_obstruction_all_residues(const IntPoly& f, std::uint64_t p) {
  require_small_prime(p, "split_obstruction_all_residues");
  const Integer pz = from_u64(p), p2 = pz * pz;
  for (std::uint64_t r = 0; r < p; ++r)
    if (eval_mod(f, modpow(from_u64(r), pz, p2), p2) == 0) return true;
  return false;
}

FamilyOutcome split_family(const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts) {
  if (f.degree() < 1 || !f.is_monic()) throw std::domain_error("split_family: f must be monic of degree >= 1");
  if (k == 0) throw std::domain_error("split_family: k must be positive");
  const auto ps = prime_divisors_u64(k);
  for (auto p : ps) {
    require_small_prime(p, "split_family");
    if (!splits_completely(ModPoly::from_int(f, p)))
      return HypothesisViolated{"f does not split completely modulo " + std::to_string(p)};
  }
  MonogenityReport r;
  if (take_irreducibility(r, certify_irreducible(f, k, opts.irreducibility()))) return r;
  std::vector<std::string> unknowns;
  if (k > 1) {
    check_squarefree(r, r.f0_squarefree, f.constant_term(), ReasonCode::ConstantTermNotSquarefree, opts, unknowns, "f(0)");
    if (r.verdict == Verdict::NotMonogenic) return r;
  }
  for (auto p : ps) r.prime_checks[p] = Check::NotEvaluated;
  for (auto p : ps) {
    const bool obstructed = split_obstruction(f, p);
    r.prime_checks[p] = obstructed ? Check::Fail : Check::Pass;
    if (obstructed) {
      fail(r, from_u64(p), ReasonCode::PrimePowerObstruction);
      return r;
    }
  }
  run_base(r, f, opts, unknowns);
  settle(r, unknowns);
  return r;
}

IntPoly simplest_cubic_poly(const Integer& m) {
  return IntPoly({Integer(-1), Integer(-(m + 3)), Integer(-m), Integer(1)});
}

namespace {

// m == (r^3p - 3 r^p - 1) / (r^p (r^p + 1)) mod p^2 for some r in 1..p-2.
bool cubic_congruence_hits(const Integer& m, std::uint64_t p) {
  const Integer pz = from_u64(p), p2 = pz * pz;
  const Integer mm = mod_p2(m, p);
  for (std::uint64_t r = 1; r + 2 <= p; ++r) {
    const Integer s = modpow(from_u64(r), pz, p2);
    Integer num = (s * s * s - 3 * s - 1) % p2;
    Integer den = (s * (s + 1)) % p2, inv;
    if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p2.get_mpz_t()))
      throw std::logic_error("simplest cubic: denominator not invertible");
    Integer q = (num * inv) % p2;
    if (q < 0) q += p2;
    if (q == mm) return true;
  }
  return false;
}

}  // namespace

SimplestCubicConditions simplest_cubic_conditions(const Integer& m, std::uint64_t k, const AnalysisOptions& opts) {
  if (k == 0) throw std::domain_error("simplest_cubic: k must be positive");
  SimplestCubicConditions out;
  const BaseMonogenity base = is_monogenic(simplest_cubic_poly(m), opts.factor);
  out.base = pass_if_yes(base.value);
  for (auto p : prime_divisors_u64(k)) {
    if (p == 2) continue;
    require_small_prime(p, "simplest_cubic");
    out.congruence[p] = cubic_congruence_hits(m, p) ? Check::Fail : Check::Pass;
  }
  return out;
}

FamilyOutcome simplest_cubic(const Integer& m, std::uint64_t k, const AnalysisOptions& opts) {
  if (k == 0) throw std::domain_error("simplest_cubic: k must be positive");
  const IntPoly f = simplest_cubic_poly(m);
  const auto ps = prime_divisors_u64(k);
  for (auto p : ps) {
    if (p == 2) continue;
    require_small_prime(p, "simplest_cubic");
    if (is_irreducible_mod_p(ModPoly::from_int(f, p)))
      return HypothesisViolated{"f is irreducible modulo " + std::to_string(p)};
  }

  MonogenityReport r;
  IrreducibilityOptions strict = opts.irreducibility();
  strict.policy = IrreducibilityPolicy::RequireCertificate;
  if (k > 1) {
    const IrreducibilityResult base_irr = certify_irreducible(f, 1, strict);
    if (base_irr.certificate) r.certificates.push_back(*base_irr.certificate);
  }
  IrreducibilityResult irr = certify_irreducible(f, k, strict);
  if (irr.status == IrreducibilityStatus::Unknown) {
    // Every composition in this family is known to be irreducible; no certificate is needed.
    irr.status = IrreducibilityStatus::Certified;
    irr.certificate = Certificate{CertificateKind::Assumed, CertificateTarget::Composition, std::nullopt, {}};
    r.notes.push_back("irreducibility of f(x^k) for the simplest cubic family taken from the literature");
  }
  if (take_irreducibility(r, irr)) return r;

  std::vector<std::string> unknowns;
  for (auto p : ps) r.prime_checks[p] = p == 2 ? Check::Pass : Check::NotEvaluated;
  if (std::find(ps.begin(), ps.end(), 2) != ps.end()) r.notes.push_back("p = 2 never divides the index for this family");
  for (auto p : ps) {
    if (p == 2) continue;
    const bool hit = cubic_congruence_hits(m, p);
    r.prime_checks[p] = hit ? Check::Fail : Check::Pass;
    if (hit) {
      fail(r, from_u64(p), ReasonCode::PrimePowerObstruction);
      return r;
    }
  }
  run_base(r, f, opts, unknowns);
  settle(r, unknowns);
  return r;
}

IntPoly binomial_h_poly(const Integer& a, const Integer& b, unsigned d, unsigned m) {
  const IntPoly h = IntPoly({Integer(1), b}).pow(m);
  IntPoly f = h;
  f *= a;
  return f + IntPoly::monomial(1, d);
}

Integer binomial_h_quantity(const Integer& a, const Integer& b, unsigned d, unsigned m) {
  const Integer term = ipow(b, d) * ipow(Integer(m), m) * ipow(Integer(d - m), d - m) * a;
  return ipow(Integer(d), d) + ((d + m) % 2 == 0 ? term : Integer(-term));
}

MonogenityReport binomial_h_family(const Integer& a, const Integer& b, unsigned d, unsigned m, std::uint64_t k,
                                   const AnalysisOptions& opts) {
  if (!(d > m && m >= 1)) throw std::domain_error("binomial_h_family: need d > m >= 1");
  if (gcd(Integer(d), Integer(m * b)) != 1) throw std::domain_error("binomial_h_family: need gcd(d, mB) = 1");
  if (a == 0) throw std::domain_error("binomial_h_family: A must be nonzero");
  if (k == 0) throw std::domain_error("binomial_h_family: k must be positive");
  const IntPoly f = binomial_h_poly(a, b, d, m);
  MonogenityReport r;
  if (take_irreducibility(r, certify_irreducible(f, k, opts.irreducibility()))) return r;
  std::vector<std::string> unknowns;

  check_squarefree(r, r.f0_squarefree, a,
                   k > 1 ? ReasonCode::ConstantTermNotSquarefree : ReasonCode::BaseNotMonogenic, opts, unknowns, "A");
  if (r.verdict == Verdict::NotMonogenic) {
    r.monogenic_base = Check::Fail;
    return r;
  }
  Check q_check = Check::NotEvaluated;
  check_squarefree(r, q_check, binomial_h_quantity(a, b, d, m), ReasonCode::BaseNotMonogenic, opts, unknowns,
                   "d^d + (-1)^(d+m) B^d m^m (d-m)^(d-m) A");
  r.monogenic_base = r.f0_squarefree == Check::Pass ? q_check : (q_check == Check::Fail ? Check::Fail : Check::Unknown);
  if (r.verdict == Verdict::NotMonogenic) return r;

  const auto ps = prime_divisors_u64(k);
  const Integer abs_a = abs(a);
  const bool covered =
      std::all_of(ps.begin(), ps.end(), [&](std::uint64_t p) { return mpz_divisible_ui_p(abs_a.get_mpz_t(), p) != 0; });
  if (covered && k > 1) {
    r.notes.push_back("rad(k) divides rad(A): monogenic iff both squarefreeness conditions hold");
  } else {
    for (auto p : ps) r.prime_checks[p] = Check::NotEvaluated;
    for (auto p : ps) {
      require_small_prime(p, "binomial_h_family");
      const bool hit = eisenstein_condition_fails(f, p);
      r.prime_checks[p] = hit ? Check::Fail : Check::Pass;
      if (hit) {
        fail(r, from_u64(p), ReasonCode::PrimePowerObstruction);
        return r;
      }
    }
  }
  settle(r, unknowns);
  return r;
}

}  // namespace monocheck
