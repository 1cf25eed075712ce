#pragma once

#include "monocheck/intfactor.hpp"
#include "monocheck/zpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monocheck {

enum class CertificateKind {
  IntegerRootComplete,  // degree <= 3 and no integer root
  EisensteinWitness,    // Eisenstein at `prime`
  ModPWitness,          // irreducible modulo `prime`
  DegreePattern,        // factor degrees mod `primes` admit no proper factor
  BinomialCriterion,    // x^n - a decided by the classical binomial criterion
  PowerResidue,         // f certified; a root is not a q-th power residue mod `primes`, q | k
  LowDegreeComplete,    // degree 1
  Assumed,              // accepted by policy without proof
};

enum class CertificateTarget { Base, Composition };

struct Certificate {
  CertificateKind kind;
  CertificateTarget target;
  std::optional<Integer> prime;
  std::vector<std::uint64_t> primes;

  /// Short stable label such as "eisenstein(p=2)".
  std::string describe() const;
};

const char* kind_name(CertificateKind kind);

/// Evidence that f(x^k) is reducible: an explicit proper factor of it.
struct ReducibleWitness {
  IntPoly factor;
  std::optional<Integer> root;
  std::string describe() const;
};

enum class IrreducibilityStatus { Certified, Reducible, Unknown };

struct IrreducibilityResult {
  IrreducibilityStatus status = IrreducibilityStatus::Unknown;
  std::optional<Certificate> certificate;
  std::optional<ReducibleWitness> witness;
};

enum class IrreducibilityPolicy { RequireCertificate, Assume };

inline constexpr std::uint64_t kDefaultWitnessBound = 101;

struct IrreducibilityOptions {
  IrreducibilityPolicy policy = IrreducibilityPolicy::RequireCertificate;
  std::uint64_t witness_bound = kDefaultWitnessBound;
  FactorOptions factor;
};

struct IntegerRoots {
  std::vector<Integer> roots;  // ascending
  /// False when the constant term could not be fully factored, so some divisor went untested.
  bool complete = true;
};

/// Integer roots of monic f. Throws std::domain_error for f == 0.
IntegerRoots integer_roots(const IntPoly& f, const FactorOptions& opts = {});

/// A prime at which monic f is Eisenstein, searched among the fully factored
/// primes of the gcd of its non-leading coefficients.
std::optional<Integer> eisenstein_witness(const IntPoly& f, const FactorOptions& opts = {});

/// Decides irreducibility of f(x^k) over Q where the evidence allows.
/// Throws std::domain_error for non-monic f, deg f < 1 or k == 0.
IrreducibilityResult certify_irreducible(const IntPoly& f, std::uint64_t k, const IrreducibilityOptions& opts = {});

}  // namespace monocheck
