#include "monocheck/idealtest.hpp"

#include "monocheck/intfactor.hpp"

#include <stdexcept>

namespace monocheck {

namespace {

bool all_divisible(const IntPoly& r, const Integer& m) {
  for (const auto& c : r.coeffs())
    if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t())) return false;
  return true;
}

void require_index_inputs(const IntPoly& f, std::uint64_t p) {
  if (!f.is_monic() || f.degree() < 1) throw std::domain_error("divides_index: f must be monic of degree >= 1");
  if (p >= kMaxModulus || !is_prime_u64(p)) throw std::domain_error("divides_index: p must be a prime below 2^62");
}

}  // namespace

void validate(const MaximalIdealSpec& spec) {
  if (spec.p >= kMaxModulus || !is_prime_u64(spec.p))
    throw std::domain_error("maximal ideal: p must be a prime below 2^62");
  if (spec.g.degree() < 1 || !spec.g.is_monic()) throw std::domain_error("maximal ideal: g must be monic of degree >= 1");
  if (!is_irreducible_mod_p(ModPoly::from_int(spec.g, spec.p)))
    throw std::domain_error("maximal ideal: g must be irreducible mod p");
}

bool in_p_g2(const IntPoly& f, const MaximalIdealSpec& spec) {
  validate(spec);
  ModPoly g = ModPoly::from_int(spec.g, spec.p);
  return rem(ModPoly::from_int(f, spec.p), g * g).is_zero();
}

bool in_p2_g(const IntPoly& f, const MaximalIdealSpec& spec) {
  validate(spec);
  const Integer p = from_u64(spec.p);
  return all_divisible(divrem_monic(f, spec.g).remainder, p * p);
}

bool in_maximal_square(const IntPoly& f, const MaximalIdealSpec& spec) {
  return in_p2_g(f, spec) && in_p_g2(f, spec);
}

bool in_maximal_square_direct(const IntPoly& f, const MaximalIdealSpec& spec) {
  validate(spec);
  const Integer p = from_u64(spec.p);
  const IntPoly r = divrem_monic(f, spec.g * spec.g).remainder;
  const DivRem uv = divrem_monic(r, spec.g);
  return all_divisible(uv.quotient, p) && all_divisible(uv.remainder, p * p);
}

bool is_eisenstein_at(const IntPoly& f, const Integer& p) {
  if (f.degree() < 1 || p < 2) return false;
  for (int i = 0; i < f.degree(); ++i)
    if (!mpz_divisible_p(f.coeff(static_cast<std::size_t>(i)).get_mpz_t(), p.get_mpz_t())) return false;
  if (mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) return false;
  return !mpz_divisible_p(f.constant_term().get_mpz_t(), Integer(p * p).get_mpz_t());
}

IndexTest divides_index(const IntPoly& f, std::uint64_t p) {
  require_index_inputs(f, p);
  if (is_eisenstein_at(f, from_u64(p))) return {};
  const Integer p2 = from_u64(p) * from_u64(p);
  for (const auto& fac : factor_mod_p(ModPoly::from_int(f, p))) {
    if (fac.exponent < 2) continue;
    // Any lift of g works: the condition depends only on g mod p once g^2 | f mod p.
    IntPoly g = fac.factor.lift();
    if (all_divisible(divrem_monic(f, g).remainder, p2)) return {true, std::move(g)};
  }
  return {};
}

DedekindDetails dedekind_M_form(const IntPoly& f, std::uint64_t p) {
  require_index_inputs(f, p);
  DedekindDetails out{false, {}, ModPoly(p), std::nullopt};
  IntPoly product = IntPoly::constant(1);
  const auto factors = factor_mod_p(ModPoly::from_int(f, p));
  for (const auto& fac : factors) {
    IntPoly g = fac.factor.lift();
    product = product * g.pow(fac.exponent);
    out.factors.emplace_back(std::move(g), fac.exponent);
  }
  out.m_bar = ModPoly::from_int((f - product).divide_exact(from_u64(p)), p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].exponent < 2) continue;
    if (gcd_mod_p(factors[i].factor, out.m_bar).degree() >= 1) {
      out.divides = true;
      out.witness = out.factors[i].first;
      break;
    }
  }
  return out;
}

}  // namespace monocheck
