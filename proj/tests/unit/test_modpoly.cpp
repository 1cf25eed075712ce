#include "monocheck/intfactor.hpp"
#include "monocheck/modpoly.hpp"
#include "../support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace monocheck;
namespace oracle = monocheck::testing;

namespace {

ModPoly mp(std::uint64_t p, std::initializer_list<long> c) { return ModPoly::from_int(IntPoly(c), p); }

std::vector<std::pair<std::vector<std::uint64_t>, unsigned>> flat(const std::vector<ModFactor>& fs) {
  std::vector<std::pair<std::vector<std::uint64_t>, unsigned>> out;
  for (const auto& f : fs) out.emplace_back(f.factor.coeffs(), f.exponent);
  return out;
}

ModPoly product(const std::vector<ModFactor>& fs, std::uint64_t p) {
  ModPoly r = ModPoly::constant(p, 1);
  for (const auto& f : fs) r = r * pow(f.factor, f.exponent);
  return r;
}

ModPoly random_mod(std::mt19937_64& rng, std::uint64_t p, int degree) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = rng() % p;
  c.back() = 1;
  return ModPoly(p, c);
}

}  // namespace

TEST(ModPoly, Construction) {
  EXPECT_EQ(mp(5, {-1, 7, 5}).coeffs(), (std::vector<std::uint64_t>{4, 2}));
  EXPECT_THROW(ModPoly{1}, std::domain_error);
  EXPECT_THROW(ModPoly{kMaxModulus}, std::domain_error);
  EXPECT_EQ(mp(7, {3, 0, 2}).lift(), (IntPoly{3, 0, 2}));
  EXPECT_EQ(mp(7, {3, 0, 2}).monic(), mp(7, {5, 0, 1}));
  EXPECT_THROW(ModPoly(5) + ModPoly(7), std::domain_error);
}

TEST(ModPoly, ArithmeticMatchesIntegerReduction) {
  std::mt19937_64 rng(41);
  for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 1000000007ULL, 2305843009213693951ULL}) {
    for (int i = 0; i < 40; ++i) {
      const IntPoly a = oracle::random_poly(rng, static_cast<int>(rng() % 10), 1000000);
      const IntPoly b = oracle::random_poly(rng, static_cast<int>(rng() % 10), 1000000);
      const ModPoly A = ModPoly::from_int(a, p), B = ModPoly::from_int(b, p);
      ASSERT_EQ(A * B, ModPoly::from_int(a * b, p));
      ASSERT_EQ(A + B, ModPoly::from_int(a + b, p));
      ASSERT_EQ(A - B, ModPoly::from_int(a - b, p));
      ASSERT_EQ(A * B, mul_reference(A, B));
    }
  }
}

TEST(ModPoly, DivRemAndPowmod) {
  std::mt19937_64 rng(42);
  for (std::uint64_t p : {2ULL, 13ULL, 65537ULL}) {
    for (int i = 0; i < 50; ++i) {
      const ModPoly f = random_mod(rng, p, static_cast<int>(rng() % 12));
      const ModPoly g = random_mod(rng, p, 1 + static_cast<int>(rng() % 5));
      auto [q, r] = divrem(f, g);
      ASSERT_EQ(q * g + r, f);
      ASSERT_LT(r.degree(), g.degree());
      const std::uint64_t e = rng() % 40;
      ASSERT_EQ(powmod(f, from_u64(e), g), rem(pow(f, e), g));
    }
  }
  EXPECT_THROW(divrem(mp(6, {1, 1}), mp(6, {1, 2})), std::domain_error);
  EXPECT_THROW(divrem(mp(5, {1, 1}), ModPoly(5)), std::domain_error);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd_mod_p(mp(5, {-1, 0, 1}), mp(5, {-1, 1})), mp(5, {4, 1}));
  EXPECT_EQ(gcd_mod_p(mp(5, {-1, -1, 1}), mp(5, {-1, 2})), mp(5, {2, 1}));
  EXPECT_TRUE(gcd_mod_p(mp(3, {1, 0, 1}), mp(3, {0, 1})).is_one());
  EXPECT_THROW(gcd_mod_p(mp(4, {1, 1}), mp(4, {1})), std::domain_error);
  EXPECT_THROW(gcd_mod_p(ModPoly(5), ModPoly(5)), std::domain_error);
}

TEST(Factor, Examples) {
  using F = std::vector<std::pair<std::vector<std::uint64_t>, unsigned>>;
  EXPECT_EQ(flat(factor_mod_p(mp(2, {1, 0, 1}))), (F{{{1, 1}, 2}}));
  EXPECT_EQ(flat(factor_mod_p(mp(3, {0, -1, 0, 1}))), (F{{{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}));
  EXPECT_EQ(flat(factor_mod_p(mp(5, {-1, -1, 1}))), (F{{{2, 1}, 2}}));
  EXPECT_THROW(factor_mod_p(mp(9, {1, 1})), std::domain_error);
  EXPECT_THROW(factor_mod_p(ModPoly(5)), std::domain_error);
}

TEST(Factor, ReassemblesIntoIrreducibles) {
  std::mt19937_64 rng(43);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101, 65537, 1000000007};
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t p = primes[rng() % 9];
    ModPoly f = random_mod(rng, p, 1 + static_cast<int>(rng() % 10));
    if (i % 3 == 0) f = f * f * random_mod(rng, p, static_cast<int>(rng() % 3));  // repeated factors
    if (i % 7 == 0 && p < 20) f = compose_power(f, p);  // inseparable parts
    const auto fs = factor_mod_p(f);
    ASSERT_EQ(product(fs, p), f.monic()) << f.to_string();
    for (std::size_t j = 0; j < fs.size(); ++j) {
      ASSERT_TRUE(is_irreducible_mod_p(fs[j].factor)) << fs[j].factor.to_string();
      ASSERT_EQ(fs[j].factor.leading(), 1u);
      if (j) {
        ASSERT_FALSE(fs[j].factor == fs[j - 1].factor);
      }
    }
  }
}

TEST(Factor, DeterministicAcrossCalls) {
  const ModPoly f = mp(1000003, {7, 0, 3, 1, 0, 0, 5, 0, 1}) * mp(1000003, {1, 1, 0, 1, 0, 0, 1});
  EXPECT_EQ(flat(factor_mod_p(f)), flat(factor_mod_p(f)));
}

TEST(Squarefree, PartsAreCoprimeAndReassemble) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t p = i % 2 ? 3 : 2;
    const ModPoly a = random_mod(rng, p, 1 + static_cast<int>(rng() % 3));
    const ModPoly b = random_mod(rng, p, 1 + static_cast<int>(rng() % 3));
    const ModPoly f = a * pow(b, 2) * compose_power(a, p);
    const auto parts = squarefree_decomposition(f);
    ASSERT_EQ(product(parts, p), f.monic());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      ASSERT_TRUE(gcd_mod_p(parts[j].factor, derivative(parts[j].factor)).is_one());
      for (std::size_t l = j + 1; l < parts.size(); ++l) ASSERT_TRUE(gcd_mod_p(parts[j].factor, parts[l].factor).is_one());
    }
  }
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible_mod_p(mp(2, {1, 1, 1})));
  EXPECT_FALSE(is_irreducible_mod_p(mp(5, {1, 0, 1})));
  EXPECT_TRUE(is_irreducible_mod_p(mp(2, {-1, -1, 1})));
  EXPECT_FALSE(is_irreducible_mod_p(mp(2, {1, 0, 1, 0, 1})));  // (x^2+x+1)^2
  // x^127 + x + 1 is a known irreducible trinomial over F_2.
  EXPECT_TRUE(is_irreducible_mod_p(ModPoly::monomial(2, 1, 127) + mp(2, {1, 1})));
  EXPECT_FALSE(is_irreducible_mod_p(ModPoly::monomial(2, 1, 128) + mp(2, {1, 1})));
  EXPECT_THROW(is_irreducible_mod_p(mp(5, {3})), std::domain_error);
}

TEST(Irreducible, AgreesWithFactorization) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 31}[rng() % 5];
    const ModPoly f = random_mod(rng, p, 1 + static_cast<int>(rng() % 9));
    const auto fs = factor_mod_p(f);
    ASSERT_EQ(is_irreducible_mod_p(f), fs.size() == 1 && fs[0].exponent == 1) << f.to_string();
  }
}

TEST(Roots, Examples) {
  auto r = roots_mod_p(mp(5, {1, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].root, 2u);
  EXPECT_EQ(r[1].root, 3u);
  EXPECT_TRUE(splits_completely(mp(5, {1, 0, 1})));

  auto cube = roots_mod_p(mp(3, {-1, 0, 0, 1}));
  ASSERT_EQ(cube.size(), 1u);
  EXPECT_EQ(cube[0].root, 1u);
  EXPECT_EQ(cube[0].multiplicity, 3u);
  EXPECT_TRUE(splits_completely(mp(3, {-1, 0, 0, 1})));

  EXPECT_TRUE(roots_mod_p(mp(2, {1, 1, 1})).empty());
  EXPECT_FALSE(splits_completely(mp(2, {1, 1, 1})));
}

TEST(Roots, MatchExhaustiveScan) {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}[rng() % 6];
    const IntPoly f = oracle::random_monic(rng, 1 + static_cast<int>(rng() % 6), 20, false);
    const ModPoly F = ModPoly::from_int(f, p);
    std::vector<std::uint64_t> scan;
    for (std::uint64_t a = 0; a < p; ++a)
      if (mod_u64(eval(f, from_u64(a)), p) == 0) scan.push_back(a);
    std::vector<std::uint64_t> got;
    unsigned total = 0;
    for (auto [root, mult] : roots_mod_p(F)) {
      got.push_back(root);
      total += mult;
    }
    ASSERT_EQ(got, scan);
    ASSERT_EQ(splits_completely(F), total == static_cast<unsigned>(f.degree()));
  }
}

TEST(FrobeniusDefect, Examples) {
  EXPECT_TRUE(frobenius_defect(IntPoly{0, 1}, 7).is_zero());
  EXPECT_EQ(frobenius_defect(IntPoly{-2, 1}, 2), ModPoly::constant(2, 1));
  const IntPoly f{-1, -1, 1};
  EXPECT_EQ(frobenius_defect(f, 3).coeffs(), oracle::defect_by_expansion(f, 3));
  EXPECT_THROW(frobenius_defect(IntPoly{1, 2}, 3), std::domain_error);
  EXPECT_THROW(frobenius_defect(f, 4), std::domain_error);
}

TEST(FrobeniusDefect, MatchesExpansion) {
  std::mt19937_64 rng(47);
  const auto primes = primes_up_to(31);
  for (int i = 0; i < 100; ++i) {
    const IntPoly f = oracle::random_monic(rng, 1 + static_cast<int>(rng() % 4), 30, false);
    const std::uint64_t p = primes[rng() % primes.size()];
    ASSERT_EQ(frobenius_defect(f, p).coeffs(), oracle::defect_by_expansion(f, p)) << f.to_string() << " p=" << p;
  }
}

TEST(FrobeniusDefect, ReducedFormSharesGcd) {
  std::mt19937_64 rng(48);
  const auto primes = primes_up_to(50);
  for (int i = 0; i < 300; ++i) {
    const IntPoly f = oracle::random_monic(rng, 1 + static_cast<int>(rng() % 5), 30, false);
    const std::uint64_t p = primes[rng() % primes.size()];
    const ModPoly fbar = ModPoly::from_int(f, p);
    const ModPoly full = frobenius_defect(f, p), reduced = frobenius_defect_rem(f, p);
    ASSERT_EQ(reduced, rem(full, fbar));
    ASSERT_EQ(full.is_zero() ? fbar.monic() : gcd_mod_p(full, fbar), reduced.is_zero() ? fbar.monic() : gcd_mod_p(reduced, fbar));
  }
}

TEST(FrobeniusDefect, LargePrimeUsesReducedForm) {
  // x^2 - x - 1 at a prime far too large for the expanded defect.
  const std::uint64_t p = 1000000007;
  const ModPoly d = frobenius_defect_rem(IntPoly{-1, -1, 1}, p);
  EXPECT_LE(d.degree(), 1);
  EXPECT_EQ(d.modulus(), p);
}

TEST(Frobenius, PowerIsRingEndomorphism) {
  // (a b)^p = a^p b^p and a(x)^p = a(x^p) over Z/p.
  std::mt19937_64 rng(49);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    for (int i = 0; i < 20; ++i) {
      const ModPoly a = random_mod(rng, p, static_cast<int>(rng() % 5));
      ASSERT_EQ(pow(a, p), compose_power(a, p));
    }
  }
}
