#pragma once

#include "monocheck/integer.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace monocheck {

/// Dense polynomial over Z, constant term first. The zero polynomial has no
/// coefficients; every other value has a nonzero last coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  /// c * x^n
  static IntPoly monomial(const Integer& c, std::size_t n);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }
  Integer constant_term() const { return coeff(0); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly pow(unsigned e) const;
  /// Exact division of every coefficient; throws std::domain_error if inexact.
  IntPoly divide_exact(const Integer& c) const;

  /// Canonical rendering accepted by the CLI parser, e.g. "x^3 - 71*x^2 - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// f(x^k). Throws std::domain_error for k == 0.
IntPoly compose_power(const IntPoly& f, std::uint64_t k);

/// f(g(x)).
IntPoly compose(const IntPoly& f, const IntPoly& g);

IntPoly derivative(const IntPoly& f);

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// f = g*q + r over Z with deg r < deg g. Throws std::domain_error unless g is
/// monic of degree >= 1.
DivRem divrem_monic(const IntPoly& f, const IntPoly& g);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

/// Resultant via the subresultant PRS. Throws std::domain_error for a zero input.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^(n(n-1)/2) R(f, f'). Throws std::domain_error unless f is monic, deg >= 1.
Integer discriminant(const IntPoly& f);

/// |D(f(x^l))| = |D(f)|^l * l^(d*l) * |f(0)|^(l-1), with the sign left open.
struct CompositionDiscriminant {
  Integer base_discriminant;  // D(f), signed
  std::uint64_t ell = 1;
  unsigned degree = 0;        // d = deg f
  Integer constant_term;      // f(0), signed
  Integer magnitude;
};

/// Throws std::domain_error if f is not monic, f(0) == 0, or l == 0.
CompositionDiscriminant disc_power_composition(const IntPoly& f, std::uint64_t ell);

Integer eval(const IntPoly& f, const Integer& a);
/// Horner evaluation reduced to [0, m). Throws std::domain_error if m < 2.
Integer eval_mod(const IntPoly& f, const Integer& a, const Integer& m);

/// Content: gcd of the coefficients (nonnegative; 0 for the zero polynomial).
Integer content(const IntPoly& f);

}  // namespace monocheck
