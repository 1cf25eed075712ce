#include "monocheck/irreducibility.hpp"

#include "monocheck/idealtest.hpp"
#include "monocheck/modpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monocheck {

const char* kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::IntegerRootComplete: return "integer-root-complete";
    case CertificateKind::EisensteinWitness: return "eisenstein";
    case CertificateKind::ModPWitness: return "mod-p";
    case CertificateKind::DegreePattern: return "degree-pattern";
    case CertificateKind::BinomialCriterion: return "binomial";
    case CertificateKind::PowerResidue: return "power-residue";
    case CertificateKind::LowDegreeComplete: return "low-degree";
    case CertificateKind::Assumed: return "assumed";
  }
  return "?";
}

std::string Certificate::describe() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (prime) os << "(p=" << *prime << ")";
  if (!primes.empty()) {
    os << "(p=";
    for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
    os << ")";
  }
  os << (target == CertificateTarget::Base ? " on f" : " on f(x^k)");
  return os.str();
}

std::string ReducibleWitness::describe() const {
  if (root) return "root " + root->get_str();
  return "factor " + factor.to_string();
}

namespace {

// Every positive divisor of the fully factored part, times the cofactor when present.
std::vector<Integer> divisor_candidates(const FactoredInt& fi) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : fi.factors) {
    const std::size_t n = divs.size();
    Integer pw = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < n; ++j) divs.push_back(divs[j] * pw);
    }
  }
  if (!fi.complete()) {
    const std::size_t n = divs.size();
    for (std::size_t j = 0; j < n; ++j) divs.push_back(divs[j] * fi.cofactor);
  }
  return divs;
}

// Exact k-th roots r of a (r^k == a).
std::vector<Integer> kth_roots(const Integer& a, std::uint64_t k) {
  if (k == 1 || a == 0) return {a};
  if (sgn(a) < 0 && k % 2 == 0) return {};
  Integer r;
  Integer mag = abs(a);
  if (!mpz_root(r.get_mpz_t(), mag.get_mpz_t(), k)) return {};
  if (sgn(a) < 0) return {Integer(-r)};
  if (k % 2 == 0) return {r, Integer(-r)};  // positive root first
  return {r};
}

IntPoly x_minus(const Integer& a, std::uint64_t power) {
  std::vector<Integer> v(power + 1);
  v[0] = -a;
  v[power] = 1;
  return IntPoly(std::move(v));
}

// Classical criterion for x^n - a: reducible iff a is a q-th power for a
// prime q | n, or 4 | n and a = -4 b^4. Returns a proper factor when reducible.
std::optional<IntPoly> binomial_factor(const Integer& a, std::uint64_t n) {
  for (auto q : prime_divisors_u64(n)) {
    for (const auto& b : kth_roots(a, q)) return x_minus(b, n / q);
  }
  if (n % 4 == 0 && sgn(a) < 0 && mpz_divisible_ui_p(a.get_mpz_t(), 4)) {
    Integer t = -a / 4, b;
    if (mpz_root(b.get_mpz_t(), t.get_mpz_t(), 4)) {
      // y^4 + 4b^4 = (y^2 - 2by + 2b^2)(y^2 + 2by + 2b^2) with y = x^(n/4)
      const std::uint64_t s = n / 4;
      std::vector<Integer> v(2 * s + 1);
      v[0] = 2 * b * b;
      v[s] = -2 * b;
      v[2 * s] = 1;
      return IntPoly(std::move(v));
    }
  }
  return std::nullopt;
}

// Degrees d for which f mod p has a monic factor of degree d.
std::vector<bool> factor_degrees(const std::vector<ModFactor>& factors, int n) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (const auto& fac : factors) {
    for (unsigned e = 0; e < fac.exponent; ++e) {
      const int d = fac.factor.degree();
      for (int s = n; s >= d; --s)
        if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
    }
  }
  return reach;
}

// Capelli: with f irreducible and f(t) = 0, f(x^k) is irreducible iff t is not
// a q-th power in Q(t) for each prime q | k, and t is not in -4 Q(t)^4 when
// 4 | k. If t = b^q then b is integral at every p not dividing D(f) f(0), so
// each root r of f mod p is a q-th power residue. One prime p = 1 mod q with a
// non-residue root therefore rules the case out. Returns one prime per case.
std::optional<std::vector<std::uint64_t>> power_residue_primes(const IntPoly& f, std::uint64_t k, std::uint64_t bound) {
  struct Case {
    std::uint64_t q;
    bool minus_four;  // test -r/4 for a fourth power instead of r for a q-th power
    std::uint64_t prime = 0;
  };
  std::vector<Case> cases;
  for (auto q : prime_divisors_u64(k)) cases.push_back({q, false});
  if (k % 4 == 0) cases.push_back({4, true});
  const Integer bad = discriminant(f) * f.constant_term();
  std::size_t open = cases.size();
  for (auto p : primes_up_to(bound)) {
    if (p == 2 || mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
    std::optional<std::vector<RootMultiplicity>> roots;
    for (auto& c : cases) {
      if (c.prime || (p - 1) % c.q != 0) continue;
      if (!roots) roots = roots_mod_p(ModPoly::from_int(f, p));
      for (const auto& root : *roots) {
        std::uint64_t v = root.root;
        if (c.minus_four) v = mulmod_u64(p - v, invmod_u64(4, p), p);
        if (powmod_u64(v, (p - 1) / c.q, p) != 1) {
          c.prime = p;
          --open;
          break;
        }
      }
    }
    if (open == 0) break;
  }
  if (open) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (const auto& c : cases) out.push_back(c.prime);
  return out;
}

IrreducibilityResult certified(CertificateKind kind, CertificateTarget target) {
  IrreducibilityResult r;
  r.status = IrreducibilityStatus::Certified;
  r.certificate = Certificate{kind, target, std::nullopt, {}};
  return r;
}

IrreducibilityResult reducible(IntPoly factor, std::optional<Integer> root = std::nullopt) {
  IrreducibilityResult r;
  r.status = IrreducibilityStatus::Reducible;
  r.witness = ReducibleWitness{std::move(factor), std::move(root)};
  return r;
}

}  // namespace

IntegerRoots integer_roots(const IntPoly& f, const FactorOptions& opts) {
  if (f.is_zero()) throw std::domain_error("integer_roots: zero polynomial");
  if (!f.is_monic()) throw std::domain_error("integer_roots: polynomial must be monic");
  IntegerRoots out;
  if (f.degree() < 1) return out;
  std::size_t shift = 0;
  while (f.coeff(shift) == 0) ++shift;
  if (shift > 0) out.roots.push_back(0);
  std::vector<Integer> tail(f.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), f.coeffs().end());
  IntPoly g(std::move(tail));
  if (g.degree() >= 1) {
    Integer bound = 0;  // Cauchy: |r| <= 1 + max |a_i|
    for (int i = 0; i < g.degree(); ++i) bound = std::max(bound, Integer(abs(g.coeff(static_cast<std::size_t>(i)))));
    bound += 1;
    const FactoredInt fi = factor(g.constant_term(), opts);
    out.complete = fi.complete();
    for (const auto& d : divisor_candidates(fi)) {
      if (d > bound) continue;
      for (const Integer& r : {Integer(d), Integer(-d)})
        if (eval(g, r) == 0) out.roots.push_back(r);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

std::optional<Integer> eisenstein_witness(const IntPoly& f, const FactorOptions& opts) {
  if (!f.is_monic() || f.degree() < 1) throw std::domain_error("eisenstein_witness: f must be monic of degree >= 1");
  Integer g = 0;
  for (int i = 0; i < f.degree(); ++i) {
    const Integer& c = f.coeff(static_cast<std::size_t>(i));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g < 2) return std::nullopt;
  const FactoredInt fi = factor(g, opts);
  for (const auto& [p, e] : fi.factors)
    if (is_eisenstein_at(f, p)) return p;
  return std::nullopt;
}

IrreducibilityResult certify_irreducible(const IntPoly& f, std::uint64_t k, const IrreducibilityOptions& opts) {
  if (!f.is_monic() || f.degree() < 1) throw std::domain_error("certify_irreducible: f must be monic of degree >= 1");
  if (k == 0) throw std::domain_error("certify_irreducible: k must be positive");
  const auto target = k == 1 ? CertificateTarget::Base : CertificateTarget::Composition;
  const std::uint64_t n = static_cast<std::uint64_t>(f.degree()) * k;
  if (n == 1) return certified(CertificateKind::LowDegreeComplete, target);
  if (f.constant_term() == 0) return reducible(IntPoly{0, 1}, Integer(0));

  // An integer root a of f gives the factor x^k - a of f(x^k); a k-th root of a is a root outright.
  const IntegerRoots roots = integer_roots(f, opts.factor);
  for (const auto& a : roots.roots) {
    auto rs = kth_roots(a, k);
    if (!rs.empty()) return reducible(x_minus(rs.front(), 1), rs.front());
    if (f.degree() > 1) return reducible(x_minus(a, k));
  }

  if (auto p = eisenstein_witness(f, opts.factor)) {
    IrreducibilityResult r = certified(CertificateKind::EisensteinWitness, target);
    r.certificate->prime = *p;
    return r;
  }
  if (f.degree() == 1) {
    if (auto fac = binomial_factor(-f.constant_term(), k)) return reducible(std::move(*fac));
    return certified(CertificateKind::BinomialCriterion, target);
  }
  if (n <= 3 && roots.complete) return certified(CertificateKind::IntegerRootComplete, target);

  const IntPoly F = compose_power(f, k);
  const int deg = static_cast<int>(n);
  std::vector<bool> possible(static_cast<std::size_t>(deg) + 1, true);
  std::vector<std::uint64_t> used;
  std::optional<std::vector<std::uint64_t>> pattern;
  for (auto p : primes_up_to(opts.witness_bound)) {
    const auto factors = factor_mod_p(ModPoly::from_int(F, p));
    if (factors.size() == 1 && factors[0].exponent == 1) {
      IrreducibilityResult r = certified(CertificateKind::ModPWitness, target);
      r.certificate->prime = from_u64(p);
      return r;
    }
    const auto reach = factor_degrees(factors, deg);
    bool narrowed = false;
    for (int d = 1; d < deg; ++d) {
      const auto i = static_cast<std::size_t>(d);
      if (possible[i] && !reach[i]) {
        possible[i] = false;
        narrowed = true;
      }
    }
    if (narrowed) used.push_back(p);
    if (std::none_of(possible.begin() + 1, possible.end() - 1, [](bool b) { return b; })) {
      pattern = used;
      break;
    }
  }
  if (pattern) {
    IrreducibilityResult r = certified(CertificateKind::DegreePattern, target);
    r.certificate->primes = *pattern;
    return r;
  }
  if (k > 1) {
    IrreducibilityOptions strict = opts;
    strict.policy = IrreducibilityPolicy::RequireCertificate;
    const IrreducibilityResult base = certify_irreducible(f, 1, strict);
    if (base.status == IrreducibilityStatus::Reducible) return reducible(compose_power(base.witness->factor, k));
    if (base.status == IrreducibilityStatus::Certified) {
      if (auto primes = power_residue_primes(f, k, 100 * std::max<std::uint64_t>(opts.witness_bound, 2))) {
        IrreducibilityResult r = certified(CertificateKind::PowerResidue, target);
        r.certificate->primes = std::move(*primes);
        return r;
      }
    }
  }
  if (opts.policy == IrreducibilityPolicy::Assume) return certified(CertificateKind::Assumed, target);
  return {};
}

}  // namespace monocheck
