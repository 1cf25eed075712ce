#include "monocheck/kernels.hpp"
#include "monocheck/modpoly.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace monocheck;
namespace k = monocheck::kernels;

namespace {

std::vector<k::Isa> available() {
  std::vector<k::Isa> out;
  for (k::Isa isa : {k::Isa::Scalar, k::Isa::Avx2, k::Isa::Neon})
    if (k::isa_supported(isa)) out.push_back(isa);
  return out;
}

// Restores the startup ISA when a test ends.
class IsaGuard {
 public:
  IsaGuard() : saved_(k::active_isa()) {}
  ~IsaGuard() { k::set_active_isa(saved_); }

 private:
  k::Isa saved_;
};

std::vector<std::uint64_t> residues(std::mt19937_64& rng, std::size_t n, std::uint64_t m) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = rng() % m;
  return v;
}

// Lengths straddling the vector width and its tail handling.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100};

}  // namespace

TEST(Kernels, ScalarAlwaysSupported) {
  EXPECT_TRUE(k::isa_supported(k::Isa::Scalar));
  EXPECT_TRUE(k::isa_supported(k::detected_isa()));
  EXPECT_EQ(k::isa_name(k::Isa::Avx2), "avx2");
}

TEST(Kernels, UnsupportedIsaRejected) {
  IsaGuard guard;
  for (k::Isa isa : {k::Isa::Avx2, k::Isa::Neon})
    if (!k::isa_supported(isa)) {
      EXPECT_THROW(k::set_active_isa(isa), std::invalid_argument);
    }
}

TEST(Kernels, MulAccMatchesScalar) {
  IsaGuard guard;
  std::mt19937_64 rng(11);
  for (k::Isa isa : available()) {
    k::set_active_isa(isa);
    for (std::size_t n : kLengths) {
      for (int rep = 0; rep < 20; ++rep) {
        const std::uint64_t s = rng() >> 32;
        auto src = residues(rng, n, std::uint64_t{1} << 32);
        auto acc = residues(rng, n, std::uint64_t{1} << 62);
        auto expect = acc;
        k::scalar::mul_acc(expect.data(), src.data(), n, s);
        k::mul_acc(acc, src, s);
        ASSERT_EQ(acc, expect) << k::isa_name(isa) << " n=" << n;
      }
    }
  }
}

TEST(Kernels, AddSubModMatchScalar) {
  IsaGuard guard;
  std::mt19937_64 rng(12);
  const std::uint64_t moduli[] = {2, 3, 65537, 4294967291ULL, (std::uint64_t{1} << 61) - 1, (std::uint64_t{1} << 63) - 25};
  for (k::Isa isa : available()) {
    k::set_active_isa(isa);
    for (std::uint64_t m : moduli) {
      for (std::size_t n : kLengths) {
        auto a = residues(rng, n, m), b = residues(rng, n, m);
        // Force the boundary cases m-1 + m-1 and 0 - (m-1).
        if (n > 1) {
          a[0] = b[0] = m - 1;
          a[1] = 0;
          b[1] = m - 1;
        }
        auto sum = a, diff = a, expect_sum = a, expect_diff = a;
        k::scalar::add_mod(expect_sum.data(), b.data(), n, m);
        k::scalar::sub_mod(expect_diff.data(), b.data(), n, m);
        k::add_mod(sum, b, m);
        k::sub_mod(diff, b, m);
        ASSERT_EQ(sum, expect_sum) << k::isa_name(isa) << " m=" << m;
        ASSERT_EQ(diff, expect_diff) << k::isa_name(isa) << " m=" << m;
        for (std::size_t i = 0; i < n; ++i) {
          ASSERT_EQ(sum[i], static_cast<std::uint64_t>((static_cast<unsigned __int128>(a[i]) + b[i]) % m));
          ASSERT_EQ(diff[i], a[i] >= b[i] ? a[i] - b[i] : a[i] + (m - b[i]));
        }
      }
    }
  }
}

TEST(Kernels, ReduceMatchesRemainder) {
  IsaGuard guard;
  std::mt19937_64 rng(13);
  for (k::Isa isa : available()) {
    k::set_active_isa(isa);
    auto acc = residues(rng, 50, ~std::uint64_t{0});
    auto expect = acc;
    for (auto& x : expect) x %= 1000003;
    k::reduce(acc, 1000003);
    EXPECT_EQ(acc, expect);
  }
}

TEST(Kernels, PolynomialProductIndependentOfIsa) {
  IsaGuard guard;
  std::mt19937_64 rng(14);
  const std::uint64_t moduli[] = {2, 7, 1000003, 4294967311ULL, (std::uint64_t{1} << 61) - 1};
  for (std::uint64_t m : moduli) {
    for (int rep = 0; rep < 20; ++rep) {
      ModPoly a(m, residues(rng, 1 + rng() % 40, m)), b(m, residues(rng, 1 + rng() % 40, m));
      const ModPoly reference = mul_reference(a, b);
      for (k::Isa isa : available()) {
        k::set_active_isa(isa);
        ASSERT_EQ(a * b, reference) << k::isa_name(isa) << " m=" << m;
        // Every modulus here is prime, so b is a unit multiple of a monic divisor.
        if (b.degree() >= 1) {
          ASSERT_TRUE(rem(a * b, b).is_zero());
        }
      }
    }
  }
}
