#pragma once

#include "monocheck/modpoly.hpp"
#include "monocheck/zpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace monocheck {

/// The maximal ideal <p, g> of Z[x]: p prime, g monic and irreducible mod p.
struct MaximalIdealSpec {
  std::uint64_t p;
  IntPoly g;
};

/// Throws std::domain_error unless (p, g) describes a maximal ideal: p prime, g monic and irreducible mod p.
void validate(const MaximalIdealSpec& spec);

/// g^2 divides f modulo p.
bool in_p_g2(const IntPoly& f, const MaximalIdealSpec& spec);
/// The remainder of f by g vanishes modulo p^2.
bool in_p2_g(const IntPoly& f, const MaximalIdealSpec& spec);
/// f in <p, g>^2, as the intersection <p^2, g> and <p, g^2>.
bool in_maximal_square(const IntPoly& f, const MaximalIdealSpec& spec);
/// f in <p, g>^2 by writing f = g^2 q + g u + v and testing p | u, p^2 | v.
bool in_maximal_square_direct(const IntPoly& f, const MaximalIdealSpec& spec);

/// True when f is Eisenstein with respect to p.
bool is_eisenstein_at(const IntPoly& f, const Integer& p);

struct IndexTest {
  bool divides = false;
  /// Monic lift (coefficients in [0, p)) of the first offending multiple factor.
  std::optional<IntPoly> witness;
};

/// Whether p divides the index of monic f, by testing each repeated
/// irreducible factor g of f mod p for f in <p, g>^2. Throws std::domain_error
/// when f is not monic or p is not a usable prime (p < 2^62).
IndexTest divides_index(const IntPoly& f, std::uint64_t p);

struct DedekindDetails {
  bool divides = false;
  /// Lifted irreducible factors of f mod p with exponents.
  std::vector<std::pair<IntPoly, unsigned>> factors;
  /// (f - prod g_i^e_i) / p reduced mod p.
  ModPoly m_bar;
  std::optional<IntPoly> witness;
};

/// The classical formulation through M(x) = (f - prod g_i^e_i)/p.
DedekindDetails dedekind_M_form(const IntPoly& f, std::uint64_t p);

}  // namespace monocheck
