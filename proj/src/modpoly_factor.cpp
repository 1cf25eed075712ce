// Factorization over Z/p: squarefree decomposition, distinct-degree
// factorization, then Cantor-Zassenhaus equal-degree splitting (trace map
// when p = 2). Random choices come from a generator seeded by the input.

#include "monocheck/intfactor.hpp"
#include "monocheck/modpoly.hpp"
#include "modpoly_internal.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace monocheck {

namespace {

using detail::gcd_unchecked;

void require_prime(std::uint64_t m, const char* what) {
  if (!is_prime_u64(m)) throw std::domain_error(std::string(what) + ": modulus must be prime");
}

std::uint64_t seed_of(const ModPoly& f) {
  std::uint64_t h = 1469598103934665603ULL ^ f.modulus();
  for (auto c : f.coeffs()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ModPoly exact_quotient(const ModPoly& a, const ModPoly& b) { return divrem(a, b).quotient; }

// c(x) = sum a_{ip} x^{ip}  ->  sum a_{ip} x^i; Frobenius is the identity on Z/p.
ModPoly pth_root(const ModPoly& c) {
  const std::uint64_t p = c.modulus();
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < c.coeffs().size(); i += p) v.push_back(c.coeffs()[i]);
  return ModPoly(p, std::move(v));
}

void squarefree_rec(const ModPoly& f, unsigned mult, std::vector<ModFactor>& out) {
  if (f.degree() < 1) return;
  const std::uint64_t p = f.modulus();
  ModPoly df = derivative(f);
  if (df.is_zero()) {
    squarefree_rec(pth_root(f), mult * static_cast<unsigned>(p), out);
    return;
  }
  ModPoly c = gcd_unchecked(f, df);
  ModPoly w = exact_quotient(f, c);
  unsigned i = 1;
  while (w.degree() >= 1) {
    ModPoly y = gcd_unchecked(w, c);
    ModPoly fac = exact_quotient(w, y);
    if (fac.degree() >= 1) out.push_back({fac.monic(), i * mult});
    w = std::move(y);
    c = exact_quotient(c, w);
    ++i;
  }
  if (c.degree() >= 1) squarefree_rec(pth_root(c), mult * static_cast<unsigned>(p), out);
}

// x^(p^i) mod h for successive i.
class FrobeniusPowers {
 public:
  explicit FrobeniusPowers(const ModPoly& h)
      : h_(h), p_(from_u64(h.modulus())), current_(rem(ModPoly::x(h.modulus()), h)) {}
  const ModPoly& next() {
    current_ = powmod(current_, p_, h_);
    return current_;
  }

 private:
  ModPoly h_;
  Integer p_;
  ModPoly current_;
};

struct DegreeGroup {
  ModPoly product;  // product of all irreducible factors of this degree
  unsigned degree;
};

std::vector<DegreeGroup> distinct_degree(ModPoly h) {
  std::vector<DegreeGroup> out;
  const std::uint64_t p = h.modulus();
  const Integer pz = from_u64(p);
  ModPoly xq = rem(ModPoly::x(p), h);
  for (unsigned d = 1; h.degree() >= 2 * static_cast<int>(d); ++d) {
    xq = powmod(xq, pz, h);  // x^(p^d) mod h
    ModPoly g = gcd_unchecked(h, xq - ModPoly::x(p));
    if (g.degree() >= 1) {
      out.push_back({g, d});
      h = exact_quotient(h, g);
      // h shrank to a divisor, so the running power stays valid after reduction.
      xq = rem(xq, h);
    }
  }
  if (h.degree() >= 1) out.push_back({h, static_cast<unsigned>(h.degree())});
  return out;
}

ModPoly random_poly(std::mt19937_64& rng, std::uint64_t p, int degree_below) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<std::uint64_t> v(static_cast<std::size_t>(degree_below));
  for (auto& c : v) c = dist(rng);
  return ModPoly(p, std::move(v));
}

void equal_degree(const ModPoly& h, unsigned d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (h.degree() == static_cast<int>(d)) {
    out.push_back(h.monic());
    return;
  }
  const std::uint64_t p = h.modulus();
  const Integer pd = ipow(from_u64(p), d);
  const Integer half = (pd - 1) / 2;
  while (true) {
    ModPoly a = random_poly(rng, p, h.degree());
    if (a.degree() < 1) continue;
    ModPoly b(p);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) mod h.
      ModPoly t = rem(a, h);
      b = t;
      for (unsigned i = 1; i < d; ++i) {
        t = rem(t * t, h);
        b += t;
      }
    } else {
      b = powmod(a, half, h) - ModPoly::constant(p, 1);
    }
    ModPoly g = gcd_unchecked(h, b);
    if (g.degree() >= 1 && g.degree() < h.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_quotient(h, g), d, rng, out);
      return;
    }
  }
}

bool factor_less(const ModFactor& a, const ModFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  if (a.factor.coeffs() != b.factor.coeffs()) return a.factor.coeffs() < b.factor.coeffs();
  return a.exponent < b.exponent;
}

}  // namespace

std::vector<ModFactor> squarefree_decomposition(const ModPoly& f) {
  require_prime(f.modulus(), "squarefree_decomposition");
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<ModFactor> out;
  squarefree_rec(f.monic(), 1, out);
  return out;
}

std::vector<ModFactor> factor_mod_p(const ModPoly& f) {
  require_prime(f.modulus(), "factor_mod_p");
  if (f.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
  std::vector<ModFactor> out;
  std::mt19937_64 rng(seed_of(f));
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& group : distinct_degree(part.factor)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(group.product, group.degree, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), part.exponent});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool is_irreducible_mod_p(const ModPoly& f) {
  require_prime(f.modulus(), "is_irreducible_mod_p");
  if (f.degree() < 1) throw std::domain_error("is_irreducible_mod_p: degree must be >= 1");
  const int n = f.degree();
  if (n == 1) return true;
  // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
  const ModPoly h = f.monic();
  const std::uint64_t p = h.modulus();
  const ModPoly x = rem(ModPoly::x(p), h);
  std::vector<std::uint64_t> qs = prime_divisors_u64(static_cast<std::uint64_t>(n));
  std::vector<int> checkpoints;
  for (auto q : qs) checkpoints.push_back(n / static_cast<int>(q));
  FrobeniusPowers frob(h);
  for (int i = 1; i <= n; ++i) {
    const ModPoly& xi = frob.next();
    if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
      if (gcd_unchecked(h, xi - x).degree() >= 1) return false;
    }
    if (i == n) return xi == x;
  }
  return false;
}

std::vector<RootMultiplicity> roots_mod_p(const ModPoly& f) {
  std::vector<RootMultiplicity> out;
  const std::uint64_t p = f.modulus();
  for (const auto& fac : factor_mod_p(f))
    if (fac.factor.degree() == 1) out.push_back({(p - fac.factor.coeff(0)) % p, fac.exponent});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

bool splits_completely(const ModPoly& f) {
  require_prime(f.modulus(), "splits_completely");
  if (f.is_zero()) throw std::domain_error("splits_completely: zero polynomial");
  if (f.degree() < 1) return true;
  // The squarefree part divides x^p - x iff x^p = x modulo it.
  const std::uint64_t p = f.modulus();
  ModPoly radical = ModPoly::constant(p, 1);
  for (const auto& part : squarefree_decomposition(f)) radical = radical * part.factor;
  ModPoly x = rem(ModPoly::x(p), radical);
  if (radical.degree() < 1) return true;
  return powmod(ModPoly::x(p), from_u64(p), radical) == x;
}

}  // namespace monocheck
