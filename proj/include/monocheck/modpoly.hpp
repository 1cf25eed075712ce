#pragma once

#include "monocheck/integer.hpp"
#include "monocheck/zpoly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace monocheck {

/// Largest admissible residue modulus (exclusive). Keeps sums of two residues
/// inside 64 bits; callers needing p^2 beyond this use IntPoly arithmetic.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// Polynomial with residues in [0, modulus), constant term first, trimmed.
/// Ring operations work for any modulus; division needs an invertible leading
/// coefficient and the factorization routines need a prime modulus.
class ModPoly {
 public:
  /// Throws std::domain_error unless 2 <= modulus < kMaxModulus.
  explicit ModPoly(std::uint64_t modulus);
  ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  static ModPoly from_int(const IntPoly& f, std::uint64_t modulus);
  static ModPoly constant(std::uint64_t modulus, std::uint64_t c);
  /// c * x^n
  static ModPoly monomial(std::uint64_t modulus, std::uint64_t c, std::size_t n);
  static ModPoly x(std::uint64_t modulus) { return monomial(modulus, 1, 1); }

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint64_t leading() const { return coeffs_.back(); }

  /// Representatives in [0, modulus) as integers.
  IntPoly lift() const;
  /// Scaled so the leading coefficient is 1; needs an invertible leading coefficient.
  ModPoly monic() const;

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly scaled(std::uint64_t c) const;
  friend bool operator==(const ModPoly&, const ModPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  void check_same(const ModPoly& o) const;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

/// Reference product with one 128-bit reduction per term; independent of the
/// kernel path used by operator*.
ModPoly mul_reference(const ModPoly& a, const ModPoly& b);

struct ModDivRem {
  ModPoly quotient;
  ModPoly remainder;
};

/// Throws std::domain_error if g is zero or its leading coefficient is not a unit.
ModDivRem divrem(const ModPoly& f, const ModPoly& g);
ModPoly rem(const ModPoly& f, const ModPoly& g);
/// base^exp mod g; exp given as a nonnegative integer.
ModPoly powmod(const ModPoly& base, const Integer& exp, const ModPoly& g);
ModPoly pow(const ModPoly& base, std::uint64_t exp);
ModPoly compose_power(const ModPoly& f, std::uint64_t k);
ModPoly derivative(const ModPoly& f);

/// Monic gcd over Z/p. Throws std::domain_error for a composite modulus or two zero inputs.
ModPoly gcd_mod_p(const ModPoly& f, const ModPoly& g);

struct ModFactor {
  ModPoly factor;  // monic irreducible
  unsigned exponent;
};

/// Complete factorization of monic-normalized f over Z/p, ordered by degree
/// and then by coefficient tuple. Throws std::domain_error for a composite
/// modulus or f == 0.
std::vector<ModFactor> factor_mod_p(const ModPoly& f);

/// Squarefree decomposition: pairwise coprime squarefree parts with multiplicities.
std::vector<ModFactor> squarefree_decomposition(const ModPoly& f);

bool is_irreducible_mod_p(const ModPoly& f);

struct RootMultiplicity {
  std::uint64_t root;
  unsigned multiplicity;
};

std::vector<RootMultiplicity> roots_mod_p(const ModPoly& f);
bool splits_completely(const ModPoly& f);

/// (f(x^p) - f(x)^p) / p reduced mod p, computed with coefficients mod p^2.
/// Throws std::domain_error if f is not monic or p is not prime.
ModPoly frobenius_defect(const IntPoly& f, std::uint64_t p);

/// The defect reduced modulo f: ((f(x^p) rem f) / p) mod p. Has the same gcd
/// with f mod p as frobenius_defect but never forms f(x)^p, so its cost is
/// polynomial in deg f and log p.
ModPoly frobenius_defect_rem(const IntPoly& f, std::uint64_t p);

}  // namespace monocheck
