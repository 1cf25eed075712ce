#pragma once

#include "monocheck/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace monocheck {

/// Three-valued answer for questions that a bounded computation may not settle.
enum class Tri { Yes, No, Unknown };

inline constexpr std::uint64_t kTrialDivisionBound = 100000;
inline constexpr std::uint64_t kDefaultFactorBudget = 500000;

/// sign * cofactor * prod(p^e) == value, exactly.
struct FactoredInt {
  int sign = 1;
  std::map<Integer, unsigned> factors;
  /// Product of the parts that could not be split within the budget; 1 when complete.
  Integer cofactor = 1;
  /// The composite pieces whose product (with multiplicity) is the cofactor.
  std::vector<Integer> unfactored;
  Integer value;

  bool complete() const { return cofactor == 1; }
  Integer reassemble() const;
  std::vector<Integer> primes() const;
};

/// Memo of complete factorizations keyed by absolute value.
class FactorCache {
 public:
  virtual ~FactorCache() = default;
  virtual std::optional<FactoredInt> lookup(const Integer& abs_value) = 0;
  virtual void store(const FactoredInt& f) = 0;
};

struct FactorOptions {
  /// Total Pollard-rho iteration cap per factor() call.
  std::uint64_t budget = kDefaultFactorBudget;
  FactorCache* cache = nullptr;
};

/// Trial division to kTrialDivisionBound, then Brent-Pollard rho with fixed seeds.
/// Throws std::domain_error for n == 0.
FactoredInt factor(const Integer& n, const FactorOptions& opts = {});

struct SquarefreeResult {
  Tri value = Tri::Unknown;
  /// w with w^2 | n when value == No; prime unless it came from an unsplit cofactor.
  std::optional<Integer> witness;
};

/// Units are squarefree. Throws std::domain_error for n == 0.
SquarefreeResult is_squarefree(const Integer& n, const FactorOptions& opts = {});
SquarefreeResult is_squarefree(const FactoredInt& f);

/// Product of the distinct primes of n; nullopt when n is not fully factored.
std::optional<Integer> radical(const Integer& n, const FactorOptions& opts = {});

/// base^exp mod modulus in [0, modulus). Throws std::domain_error if modulus < 2 or exp < 0.
Integer modpow(const Integer& base, const Integer& exp, const Integer& modulus);

/// Miller-Rabin with the first 13 prime bases (deterministic below 3.3e24).
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

/// Ascending primes <= bound.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Distinct prime divisors of a small positive integer (trial division).
std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n);

}  // namespace monocheck
