#pragma once

#include "monocheck/monogenity.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace monocheck {

/// The family's hypotheses fail; the generic pipeline has to decide the instance.
struct HypothesisViolated {
  std::string message;
};

using FamilyOutcome = std::variant<MonogenityReport, HypothesisViolated>;

/// x^k - A. Throws std::domain_error for k < 2.
MonogenityReport pure_binomial(const Integer& a, std::uint64_t k, const AnalysisOptions& opts = {});

/// p^2 | f(r^p) for some root r of f mod p.
bool split_obstruction(const IntPoly& f, std::uint64_t p);
/// The same test over every residue r = 0..p-1.
bool split_obstruction_all_residues(const IntPoly& f, std::uint64_t p);

/// f splitting completely modulo every prime divisor of k.
FamilyOutcome split_family(const IntPoly& f, std::uint64_t k, const AnalysisOptions& opts = {});

/// x^3 - m x^2 - (m+3) x - 1
IntPoly simplest_cubic_poly(const Integer& m);

struct SimplestCubicConditions {
  Check base = Check::NotEvaluated;
  /// Odd p | k: Pass when m avoids every excluded residue mod p^2.
  std::map<std::uint64_t, Check> congruence;
};

/// Both conditions of the simplest-cubic criterion, evaluated in full and
/// regardless of whether its hypothesis holds.
SimplestCubicConditions simplest_cubic_conditions(const Integer& m, std::uint64_t k, const AnalysisOptions& opts = {});

FamilyOutcome simplest_cubic(const Integer& m, std::uint64_t k, const AnalysisOptions& opts = {});

/// x^d + A (Bx + 1)^m
IntPoly binomial_h_poly(const Integer& a, const Integer& b, unsigned d, unsigned m);
/// d^d + (-1)^(d+m) B^d m^m (d-m)^(d-m) A
Integer binomial_h_quantity(const Integer& a, const Integer& b, unsigned d, unsigned m);

/// Throws std::domain_error unless d > m >= 1, gcd(d, mB) = 1, A != 0 and k >= 1.
MonogenityReport binomial_h_family(const Integer& a, const Integer& b, unsigned d, unsigned m, std::uint64_t k,
                                   const AnalysisOptions& opts = {});

}  // namespace monocheck
