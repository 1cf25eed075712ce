#include "monocheck/modpoly.hpp"

#include "monocheck/intfactor.hpp"
#include "monocheck/kernels.hpp"
#include "modpoly_internal.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace monocheck {

namespace {

// Residues below this bound go through the lazy 64-bit accumulation kernels.
constexpr std::uint64_t kLazyModulusBound = std::uint64_t{1} << 32;

// Number of unreduced products a 64-bit accumulator can absorb on top of a
// reduced starting value.
std::uint64_t lazy_capacity(std::uint64_t m) {
  const std::uint64_t r = m - 1;
  if (r <= 1) return std::numeric_limits<std::uint64_t>::max();
  return (std::numeric_limits<std::uint64_t>::max() - r) / (r * r);
}

void require_prime(std::uint64_t m, const char* what) {
  if (!is_prime_u64(m)) throw std::domain_error(std::string(what) + ": modulus must be prime");
}

}  // namespace

ModPoly::ModPoly(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= kMaxModulus) throw std::domain_error("ModPoly: modulus out of range");
}

ModPoly::ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : ModPoly(modulus) {
  coeffs_ = std::move(coeffs);
  for (auto& c : coeffs_) c %= modulus_;
  trim();
}

ModPoly ModPoly::from_int(const IntPoly& f, std::uint64_t modulus) {
  ModPoly r(modulus);
  r.coeffs_.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.coeffs_.push_back(mod_u64(c, modulus));
  r.trim();
  return r;
}

ModPoly ModPoly::constant(std::uint64_t modulus, std::uint64_t c) {
  return ModPoly(modulus, std::vector<std::uint64_t>{c});
}

ModPoly ModPoly::monomial(std::uint64_t modulus, std::uint64_t c, std::size_t n) {
  std::vector<std::uint64_t> v(n + 1, 0);
  v[n] = c;
  return ModPoly(modulus, std::move(v));
}

void ModPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void ModPoly::check_same(const ModPoly& o) const {
  if (o.modulus_ != modulus_) throw std::domain_error("ModPoly: mismatched moduli");
}

IntPoly ModPoly::lift() const {
  std::vector<Integer> v;
  v.reserve(coeffs_.size());
  for (auto c : coeffs_) v.push_back(from_u64(c));
  return IntPoly(std::move(v));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) throw std::domain_error("ModPoly::monic: zero polynomial");
  if (leading() == 1) return *this;
  return scaled(invmod_u64(leading(), modulus_));
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
  check_same(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  kernels::add_mod(std::span(coeffs_.data(), o.coeffs_.size()), o.coeffs_, modulus_);
  trim();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
  check_same(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  kernels::sub_mod(std::span(coeffs_.data(), o.coeffs_.size()), o.coeffs_, modulus_);
  trim();
  return *this;
}

ModPoly ModPoly::scaled(std::uint64_t c) const {
  ModPoly r = *this;
  c %= modulus_;
  for (auto& a : r.coeffs_) a = mulmod_u64(a, c, modulus_);
  r.trim();
  return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  a.check_same(b);
  const std::uint64_t m = a.modulus_;
  if (a.is_zero() || b.is_zero()) return ModPoly(m);
  if (m >= kLazyModulusBound) return mul_reference(a, b);

  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  const std::uint64_t capacity = lazy_capacity(m);
  std::uint64_t pending = 0;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    if (pending == capacity) {
      kernels::reduce(acc, m);
      pending = 0;
    }
    kernels::mul_acc(std::span(acc.data() + i, b.coeffs_.size()), b.coeffs_, a.coeffs_[i]);
    ++pending;
  }
  kernels::reduce(acc, m);
  return ModPoly(m, std::move(acc));
}

ModPoly mul_reference(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw std::domain_error("ModPoly: mismatched moduli");
  const std::uint64_t m = a.modulus();
  if (a.is_zero() || b.is_zero()) return ModPoly(m);
  std::vector<std::uint64_t> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      std::uint64_t t = mulmod_u64(a.coeffs()[i], b.coeffs()[j], m);
      r[i + j] = (r[i + j] + t) % m;
    }
  return ModPoly(m, std::move(r));
}

std::string ModPoly::to_string() const {
  std::ostringstream os;
  os << lift().to_string() << " (mod " << modulus_ << ")";
  return os.str();
}

ModDivRem divrem(const ModPoly& f, const ModPoly& g) {
  const std::uint64_t m = f.modulus();
  if (g.modulus() != m) throw std::domain_error("divrem: mismatched moduli");
  if (g.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
  if (f.degree() < g.degree()) return {ModPoly(m), f};

  const std::uint64_t inv = g.leading() == 1 ? 1 : invmod_u64(g.leading(), m);
  const auto dg = static_cast<std::size_t>(g.degree());
  std::vector<std::uint64_t> r = f.coeffs();
  std::vector<std::uint64_t> q(r.size() - dg, 0);

  if (m < kLazyModulusBound) {
    // r holds unreduced accumulators; each step adds one product to dg entries.
    const std::uint64_t capacity = lazy_capacity(m);
    std::uint64_t pending = 0;
    std::span<const std::uint64_t> low(g.coeffs().data(), dg);
    for (std::size_t i = r.size(); i-- > dg;) {
      const std::uint64_t c = r[i] % m;
      r[i] = 0;
      if (c == 0) continue;
      const std::uint64_t qc = inv == 1 ? c : mulmod_u64(c, inv, m);
      q[i - dg] = qc;
      if (pending == capacity) {
        kernels::reduce(std::span(r.data(), i), m);
        pending = 0;
      }
      kernels::mul_acc(std::span(r.data() + (i - dg), dg), low, m - qc);
      ++pending;
    }
    r.resize(dg);
    kernels::reduce(r, m);
  } else {
    for (std::size_t i = r.size(); i-- > dg;) {
      const std::uint64_t c = r[i];
      r[i] = 0;
      if (c == 0) continue;
      const std::uint64_t qc = mulmod_u64(c, inv, m);
      q[i - dg] = qc;
      for (std::size_t j = 0; j < dg; ++j) {
        std::uint64_t t = mulmod_u64(qc, g.coeffs()[j], m);
        std::uint64_t& x = r[i - dg + j];
        x = x >= t ? x - t : x + (m - t);
      }
    }
    r.resize(dg);
  }
  return {ModPoly(m, std::move(q)), ModPoly(m, std::move(r))};
}

ModPoly rem(const ModPoly& f, const ModPoly& g) { return divrem(f, g).remainder; }

ModPoly powmod(const ModPoly& base, const Integer& exp, const ModPoly& g) {
  if (sgn(exp) < 0) throw std::domain_error("powmod: negative exponent");
  const std::uint64_t m = base.modulus();
  ModPoly result = g.degree() == 0 ? ModPoly(m) : ModPoly::constant(m, 1);
  ModPoly b = rem(base, g);
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, g);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = rem(result * b, g);
  }
  return result;
}

ModPoly pow(const ModPoly& base, std::uint64_t exp) {
  ModPoly result = ModPoly::constant(base.modulus(), 1);
  ModPoly b = base;
  while (exp) {
    if (exp & 1) result = result * b;
    exp >>= 1;
    if (exp) b = b * b;
  }
  return result;
}

ModPoly compose_power(const ModPoly& f, std::uint64_t k) {
  if (k == 0) throw std::domain_error("compose_power: k must be positive");
  if (f.is_zero()) return f;
  std::vector<std::uint64_t> r(static_cast<std::size_t>(f.degree()) * k + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r[i * k] = f.coeffs()[i];
  return ModPoly(f.modulus(), std::move(r));
}

ModPoly derivative(const ModPoly& f) {
  const std::uint64_t m = f.modulus();
  if (f.degree() < 1) return ModPoly(m);
  std::vector<std::uint64_t> r(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = mulmod_u64(f.coeffs()[i], i % m, m);
  return ModPoly(m, std::move(r));
}

namespace detail {
ModPoly gcd_unchecked(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}
}  // namespace detail

ModPoly gcd_mod_p(const ModPoly& f, const ModPoly& g) {
  require_prime(f.modulus(), "gcd_mod_p");
  if (f.modulus() != g.modulus()) throw std::domain_error("gcd_mod_p: mismatched moduli");
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd_mod_p: both inputs zero");
  return detail::gcd_unchecked(f, g);
}

namespace {

// Coefficientwise reduction of an integer polynomial into [0, m).
IntPoly reduce_coeffs(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v = f.coeffs();
  for (auto& c : v) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(v));
}

// Exact division of every coefficient by p followed by reduction mod p.
ModPoly divide_by_p(const IntPoly& f, std::uint64_t p) {
  Integer pz = from_u64(p);
  for (const auto& c : f.coeffs())
    if (!mpz_divisible_p(c.get_mpz_t(), pz.get_mpz_t()))
      throw std::logic_error("frobenius defect: f(x^p) - f(x)^p not divisible by p");
  return ModPoly::from_int(f.divide_exact(pz), p);
}

ModPoly divide_by_p(const ModPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.coeffs()[i] % p != 0)
      throw std::logic_error("frobenius defect: f(x^p) - f(x)^p not divisible by p");
    v[i] = f.coeffs()[i] / p;
  }
  return ModPoly(p, std::move(v));
}

void check_defect_inputs(const IntPoly& f, std::uint64_t p) {
  if (!f.is_monic()) throw std::domain_error("frobenius_defect: f must be monic");
  if (!is_prime_u64(p)) throw std::domain_error("frobenius_defect: p must be prime");
}

bool square_fits(std::uint64_t p) { return p < (std::uint64_t{1} << 31); }

}  // namespace

ModPoly frobenius_defect(const IntPoly& f, std::uint64_t p) {
  check_defect_inputs(f, p);
  if (square_fits(p)) {
    const std::uint64_t p2 = p * p;
    ModPoly fm = ModPoly::from_int(f, p2);
    ModPoly diff = compose_power(fm, p) - pow(fm, p);
    return divide_by_p(diff, p);
  }
  // Word-size p^2 overflow: same computation on big-integer coefficients.
  const Integer p2 = from_u64(p) * from_u64(p);
  IntPoly result = IntPoly::constant(1), base = reduce_coeffs(f, p2);
  for (std::uint64_t e = p; e; e >>= 1) {
    if (e & 1) result = reduce_coeffs(result * base, p2);
    if (e > 1) base = reduce_coeffs(base * base, p2);
  }
  return divide_by_p(reduce_coeffs(compose_power(f, p) - result, p2), p);
}

ModPoly frobenius_defect_rem(const IntPoly& f, std::uint64_t p) {
  check_defect_inputs(f, p);
  if (f.degree() < 1) return ModPoly(p);
  if (square_fits(p)) {
    const std::uint64_t p2 = p * p;
    ModPoly fm = ModPoly::from_int(f, p2);
    ModPoly xp = powmod(ModPoly::x(p2), from_u64(p), fm);
    ModPoly acc(p2);
    for (int i = f.degree(); i >= 0; --i)
      acc = rem(acc * xp + ModPoly::constant(p2, fm.coeff(static_cast<std::size_t>(i))), fm);
    return divide_by_p(acc, p);
  }
  const Integer p2 = from_u64(p) * from_u64(p);
  auto mulrem = [&](const IntPoly& a, const IntPoly& b) {
    return reduce_coeffs(divrem_monic(reduce_coeffs(a * b, p2), f).remainder, p2);
  };
  IntPoly xp = IntPoly::constant(1), base = reduce_coeffs(divrem_monic(IntPoly{0, 1}, f).remainder, p2);
  for (std::uint64_t e = p; e; e >>= 1) {
    if (e & 1) xp = mulrem(xp, base);
    if (e > 1) base = mulrem(base, base);
  }
  IntPoly acc;
  for (int i = f.degree(); i >= 0; --i)
    acc = reduce_coeffs(mulrem(acc, xp) + IntPoly::constant(f.coeff(static_cast<std::size_t>(i))), p2);
  return divide_by_p(acc, p);
}

}  // namespace monocheck
