#include "monocheck/intfactor.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace monocheck {

namespace {

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialDivisionBound);
  return primes;
}

constexpr unsigned long kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
// Beyond 3.3e24 no small deterministic base set is known; the extra bases
// make a false positive implausible at desk scale.
constexpr unsigned long kExtraBases[] = {43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, unsigned long base) {
  Integer a = base;
  Integer nm1 = n - 1;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's cycle-finding variant with batched gcds. Returns a nontrivial
// divisor of the odd composite n, or nullopt when the iteration budget runs out.
std::optional<Integer> brent_rho(const Integer& n, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  for (unsigned long c = 1; budget > 0; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1, t;
    std::uint64_t r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        std::uint64_t lim = std::min({kBatch, r - k, budget});
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          t = x - y;
          q = q * abs(t);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        budget -= lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot; replay one step at a time from the saved point.
      do {
        step(ys);
        t = x - ys;
        t = abs(t);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
    if (g == 1) break;  // budget exhausted mid-cycle
  }
  return std::nullopt;
}

// Smallest-exponent perfect-power decomposition: n = b^e with e >= 2 maximal
// tried from large exponents down so b is as small as possible.
std::optional<std::pair<Integer, unsigned long>> perfect_power(const Integer& n) {
  if (!mpz_perfect_power_p(n.get_mpz_t()) || n < 4) return std::nullopt;
  unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = bits; e >= 2; --e) {
    Integer b;
    if (mpz_root(b.get_mpz_t(), n.get_mpz_t(), e) != 0 && b > 1) return std::make_pair(b, e);
  }
  return std::nullopt;
}

}  // namespace

Integer FactoredInt::reassemble() const {
  Integer r = cofactor;
  for (const auto& [p, e] : factors) r *= ipow(p, e);
  return sign < 0 ? Integer(-r) : r;
}

std::vector<Integer> FactoredInt::primes() const {
  std::vector<Integer> out;
  out.reserve(factors.size());
  for (const auto& kv : factors) out.push_back(kv.first);
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long b : kMillerRabinBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long b : kMillerRabinBases)
    if (!miller_rabin_round(n, d, s, b)) return false;
  static const Integer kDeterministicLimit("3317044064679887385961981");
  if (n >= kDeterministicLimit)
    for (unsigned long b : kExtraBases)
      if (!miller_rabin_round(n, d, s, b)) return false;
  return true;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("invmod_u64: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t b : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t b : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FactoredInt factor(const Integer& n, const FactorOptions& opts) {
  if (n == 0) throw std::domain_error("factor: zero has no factorization");
  FactoredInt out;
  out.value = n;
  out.sign = sgn(n) < 0 ? -1 : 1;
  Integer rest = abs(n);

  if (opts.cache && rest > 1) {
    if (auto hit = opts.cache->lookup(rest); hit && hit->complete() && hit->reassemble() == rest) {
      hit->sign = out.sign;
      hit->value = n;
      return *hit;
    }
  }
  const Integer abs_n = rest;

  for (std::uint64_t p : small_primes()) {
    if (rest == 1) break;
    Integer pp = from_u64(p);
    if (pp * pp > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pp.get_mpz_t()));
      out.factors[pp] = e;
    }
  }

  const Integer bound = from_u64(kTrialDivisionBound);
  if (rest > 1 && rest <= bound * bound) {
    out.factors[rest] += 1;
    rest = 1;
  }

  std::uint64_t budget = opts.budget;
  std::vector<Integer> pending;
  std::vector<Integer> failed;
  if (rest > 1) pending.push_back(rest);

  auto take_prime = [&](const Integer& p) {
    unsigned e = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
    if (e == 0) return;
    out.factors[p] += e;
    for (auto& c : pending) mpz_remove(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    for (auto& c : failed) mpz_remove(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  };

  while (!pending.empty()) {
    Integer c = pending.back();
    pending.pop_back();
    if (c == 1) continue;
    if (is_prime(c)) {
      take_prime(c);
      continue;
    }
    if (auto pw = perfect_power(c)) {
      pending.push_back(pw->first);
      continue;
    }
    if (auto d = brent_rho(c, budget)) {
      pending.push_back(*d);
      pending.push_back(c / *d);
      continue;
    }
    failed.push_back(c);
  }

  std::sort(failed.begin(), failed.end());
  failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
  failed.erase(std::remove(failed.begin(), failed.end(), Integer(1)), failed.end());
  out.cofactor = rest;
  out.unfactored = rest == 1 ? std::vector<Integer>{} : failed;

  if (opts.cache && out.complete() && abs_n > 1) {
    FactoredInt stored = out;
    stored.sign = 1;
    stored.value = abs_n;
    opts.cache->store(stored);
  }
  return out;
}

SquarefreeResult is_squarefree(const FactoredInt& f) {
  for (const auto& [p, e] : f.factors)
    if (e >= 2) return {Tri::No, p};
  if (f.complete()) return {Tri::Yes, std::nullopt};

  const Integer& c = f.cofactor;
  if (auto pw = perfect_power(c)) return {Tri::No, pw->first};
  for (const auto& piece : f.unfactored) {
    if (mpz_divisible_p(c.get_mpz_t(), Integer(piece * piece).get_mpz_t())) return {Tri::No, piece};
    if (auto pw = perfect_power(piece)) return {Tri::No, pw->first};
  }
  for (std::size_t i = 0; i < f.unfactored.size(); ++i)
    for (std::size_t j = i + 1; j < f.unfactored.size(); ++j) {
      Integer g = gcd(f.unfactored[i], f.unfactored[j]);
      if (g > 1) return {Tri::No, g};
    }
  return {Tri::Unknown, std::nullopt};
}

SquarefreeResult is_squarefree(const Integer& n, const FactorOptions& opts) {
  if (n == 0) throw std::domain_error("is_squarefree: zero input");
  if (abs(n) == 1) return {Tri::Yes, std::nullopt};
  return is_squarefree(factor(n, opts));
}

std::optional<Integer> radical(const Integer& n, const FactorOptions& opts) {
  if (n == 0) throw std::domain_error("radical: zero input");
  FactoredInt f = factor(n, opts);
  if (!f.complete()) return std::nullopt;
  Integer r = 1;
  for (const auto& kv : f.factors) r *= kv.first;
  return r;
}

Integer modpow(const Integer& base, const Integer& exp, const Integer& modulus) {
  if (modulus < 2) throw std::domain_error("modpow: modulus must be >= 2");
  if (sgn(exp) < 0) throw std::domain_error("modpow: negative exponent");
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace monocheck
