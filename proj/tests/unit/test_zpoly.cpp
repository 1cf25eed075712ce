#include "monocheck/intfactor.hpp"
#include "monocheck/zpoly.hpp"
#include "../support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace monocheck;
namespace oracle = monocheck::testing;

TEST(IntPoly, TrimAndPrint) {
  EXPECT_EQ(IntPoly({-1, -1, 1, 0, 0}).degree(), 2);
  EXPECT_TRUE(IntPoly({0, 0}).is_zero());
  EXPECT_EQ(IntPoly({-1, -74, -71, 1}).to_string(), "x^3 - 71*x^2 - 74*x - 1");
  EXPECT_EQ(IntPoly({0, -1}).to_string(), "-x");
  EXPECT_EQ(IntPoly{}.to_string(), "0");
  EXPECT_EQ((IntPoly{1, 1}).pow(3), (IntPoly{1, 3, 3, 1}));
}

TEST(ComposePower, Examples) {
  EXPECT_EQ(compose_power(IntPoly{1, 0, 1}, 3), (IntPoly{1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(compose_power(IntPoly{-7, 1}, 5), (IntPoly{-7, 0, 0, 0, 0, 1}));
  EXPECT_EQ(compose_power(IntPoly{-1, -1, 1}, 2), (IntPoly{-1, 0, -1, 0, 1}));
  EXPECT_EQ(compose_power(IntPoly{3, 1}, 1), (IntPoly{3, 1}));
  EXPECT_THROW(compose_power(IntPoly{1, 1}, 0), std::domain_error);
  const IntPoly x2 = IntPoly::monomial(1, 2);
  EXPECT_EQ(compose_power(IntPoly{2, 5, 1}, 2), compose(IntPoly{2, 5, 1}, x2));
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(IntPoly{-1, -3, 0, 1}), (IntPoly{-3, 0, 3}));
  EXPECT_TRUE(derivative(IntPoly{5}).is_zero());
  // (f(x^l))' = l x^(l-1) f'(x^l)
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const IntPoly f = oracle::random_monic(rng, 1 + static_cast<int>(rng() % 4), 9);
    const std::uint64_t l = 1 + rng() % 5;
    EXPECT_EQ(derivative(compose_power(f, l)),
              IntPoly::monomial(from_u64(l), l - 1) * compose_power(derivative(f), l));
  }
}

TEST(DivRem, Examples) {
  auto a = divrem_monic(IntPoly{-2, 0, 1}, IntPoly{-1, 1});
  EXPECT_EQ(a.quotient, (IntPoly{1, 1}));
  EXPECT_EQ(a.remainder, (IntPoly{-1}));
  EXPECT_EQ(divrem_monic(IntPoly{-1, -1, 1}, IntPoly{2, 1}).remainder, (IntPoly{5}));
  auto low = divrem_monic(IntPoly{3, 1}, IntPoly{1, 0, 1});
  EXPECT_TRUE(low.quotient.is_zero());
  EXPECT_EQ(low.remainder, (IntPoly{3, 1}));
  EXPECT_THROW(divrem_monic(IntPoly{1, 1}, IntPoly{1, 2}), std::domain_error);
}

TEST(DivRem, ExactReconstruction) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const IntPoly f = oracle::random_poly(rng, static_cast<int>(rng() % 8), 50);
    const IntPoly g = oracle::random_monic(rng, 1 + static_cast<int>(rng() % 4), 50, false);
    auto [q, r] = divrem_monic(f, g);
    ASSERT_EQ(q * g + r, f);
    ASSERT_LT(r.degree(), g.degree());
  }
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(IntPoly{-2, 1}, IntPoly{-5, 1}), -3);
  EXPECT_EQ(resultant(IntPoly{0, 0, 1}, IntPoly{1, 1}), 1);
  EXPECT_EQ(resultant(IntPoly{-1, 0, 1}, IntPoly{-4, 0, 1}), 9);
  EXPECT_EQ(resultant(IntPoly{-1, 0, 1}, IntPoly{1, 1}), 0);
  EXPECT_THROW(resultant(IntPoly{}, IntPoly{1, 1}), std::domain_error);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    const IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 5), 20);
    const IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 5), 20);
    if (f.degree() < 1 || g.degree() < 1) continue;
    ASSERT_EQ(resultant(f, g), oracle::sylvester_resultant(f, g)) << f.to_string() << " / " << g.to_string();
  }
}

TEST(Resultant, MultiplicativeAndScalarRules) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 200; ++i) {
    const IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
    const IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
    const IntPoly h = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 9);
    if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
    ASSERT_EQ(resultant(f, g * h), resultant(f, g) * resultant(f, h));
    const Integer c = oracle::uniform(rng, 2, 7);
    ASSERT_EQ(resultant(f * c, g), ipow(c, static_cast<unsigned long>(g.degree())) * resultant(f, g));
    const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
    ASSERT_EQ(resultant(g, f), resultant(f, g) * sign);
  }
}

TEST(Resultant, ProductOverRootsOfLinearFactors) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 100; ++i) {
    // f = prod (x - a_i), so R(f, g) = prod g(a_i).
    IntPoly f{1};
    Integer expected = 1;
    const IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 9);
    if (g.degree() < 1) continue;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < n; ++j) {
      const Integer a = oracle::uniform(rng, -6, 6);
      f = f * IntPoly({Integer(-a), Integer(1)});
      expected *= eval(g, a);
    }
    ASSERT_EQ(resultant(f, g), expected);
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(IntPoly{-1, -1, 1}), 5);
  EXPECT_EQ(discriminant(IntPoly{1, 0, 1}), -4);
  EXPECT_EQ(discriminant(IntPoly{-2, 0, 0, 1}), -108);
  EXPECT_EQ(discriminant(IntPoly{-8, -2, -1, 1}), -2012);
  EXPECT_EQ(discriminant(IntPoly{4, 1}), 1);
  EXPECT_THROW(discriminant(IntPoly{1, 2}), std::domain_error);
  // Quadratic and depressed-cubic closed forms.
  std::mt19937_64 rng(36);
  for (int i = 0; i < 100; ++i) {
    const Integer b = oracle::uniform(rng, -50, 50), c = oracle::uniform(rng, -50, 50);
    ASSERT_EQ(discriminant(IntPoly({c, b, Integer(1)})), b * b - 4 * c);
    ASSERT_EQ(discriminant(IntPoly({c, b, Integer(0), Integer(1)})), -4 * b * b * b - 27 * c * c);
  }
}

TEST(CompositionDiscriminant, Examples) {
  auto a = disc_power_composition(IntPoly{-2, 1}, 2);
  EXPECT_EQ(a.magnitude, 8);
  EXPECT_EQ(abs(discriminant(IntPoly{-2, 0, 1})), 8);
  EXPECT_EQ(disc_power_composition(IntPoly{1, 0, 1}, 2).magnitude, 256);
  EXPECT_EQ(abs(discriminant(IntPoly{1, 0, 0, 0, 1})), 256);
  auto c = disc_power_composition(IntPoly{-1, -1, 1}, 2);
  EXPECT_EQ(c.magnitude, 400);
  EXPECT_EQ(c.base_discriminant, 5);
  EXPECT_EQ(c.constant_term, -1);
  EXPECT_EQ(c.degree, 2u);
  EXPECT_THROW(disc_power_composition(IntPoly{0, 1}, 2), std::domain_error);
  EXPECT_THROW(disc_power_composition(IntPoly{1, 2}, 2), std::domain_error);
  EXPECT_THROW(disc_power_composition(IntPoly{1, 1}, 0), std::domain_error);
}

TEST(CompositionDiscriminant, MatchesDirectComputation) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const IntPoly f = oracle::random_monic(rng, 1 + static_cast<int>(rng() % 4), 9);
    const std::uint64_t l = 1 + rng() % 5;
    ASSERT_EQ(disc_power_composition(f, l).magnitude, abs(discriminant(compose_power(f, l))))
        << f.to_string() << " l=" << l;
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(IntPoly{-1, -1, 1}, 2), 1);
  for (long m : {-5L, 0L, 3L, 71L}) {
    const IntPoly cubic({Integer(-1), Integer(-(m + 3)), Integer(-m), Integer(1)});
    EXPECT_EQ(eval(cubic, 0), -1);
    EXPECT_EQ(eval(cubic, -1), 1);
  }
  EXPECT_EQ(eval_mod(IntPoly{-1, -1, 1}, -2, 25), 5);
  EXPECT_EQ(eval_mod(IntPoly{-7}, 0, 5), 3);
  EXPECT_THROW(eval_mod(IntPoly{1}, 0, 1), std::domain_error);
}

TEST(Content, Basic) {
  EXPECT_EQ(content(IntPoly{6, -9, 12}), 3);
  EXPECT_EQ(content(IntPoly{}), 0);
}
