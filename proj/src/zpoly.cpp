#include "monocheck/zpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace monocheck {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[n] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPoly IntPoly::divide_exact(const Integer& c) const {
  if (c == 0) throw std::domain_error("divide_exact: division by zero");
  std::vector<Integer> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("divide_exact: coefficient not divisible");
    mpz_divexact(r[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

IntPoly compose_power(const IntPoly& f, std::uint64_t k) {
  if (k == 0) throw std::domain_error("compose_power: k must be positive");
  if (f.is_zero()) return {};
  std::vector<Integer> r(static_cast<std::size_t>(f.degree()) * k + 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r[i * k] = f.coeffs()[i];
  return IntPoly(std::move(r));
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
  IntPoly r;
  for (int i = f.degree(); i >= 0; --i) r = r * g + IntPoly::constant(f.coeff(static_cast<std::size_t>(i)));
  return r;
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> r(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

DivRem divrem_monic(const IntPoly& f, const IntPoly& g) {
  if (g.degree() < 1 || !g.is_monic()) throw std::domain_error("divrem_monic: divisor must be monic of degree >= 1");
  if (f.degree() < g.degree()) return {IntPoly{}, f};
  std::vector<Integer> r = f.coeffs();
  const auto dg = static_cast<std::size_t>(g.degree());
  std::vector<Integer> q(r.size() - dg);
  for (std::size_t i = r.size(); i-- > dg;) {
    const Integer c = r[i];
    q[i - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j)
      mpz_submul(r[i - dg + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
  }
  r.resize(dg);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (f.degree() < g.degree()) return f;
  std::vector<Integer> r = f.coeffs();
  const auto dg = static_cast<std::size_t>(g.degree());
  const Integer& lc = g.leading();
  for (std::size_t i = r.size(); i-- > dg;) {
    // r <- lc*r - r[i]*x^(i-dg)*g
    const Integer c = r[i];
    for (auto& a : r) a *= lc;
    for (std::size_t j = 0; j <= dg; ++j)
      mpz_submul(r[i - dg + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
  }
  r.resize(dg);
  return IntPoly(std::move(r));
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Integer resultant(const IntPoly& f_in, const IntPoly& g_in) {
  if (f_in.is_zero() || g_in.is_zero()) throw std::domain_error("resultant: zero polynomial");
  IntPoly a = f_in, b = g_in;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
  }
  if (b.degree() == 0) return ipow(b.leading(), static_cast<unsigned long>(a.degree())) * sign;

  // Remove contents: R(ca*A, cb*B) = ca^deg B * cb^deg A * R(A, B).
  Integer ca = content(a), cb = content(b);
  Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  a = a.divide_exact(ca);
  b = b.divide_exact(cb);

  Integer g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = r.divide_exact(g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    // h <- g^delta / h^(delta-1), exact.
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      // h <- lc(b)^deg a / h^(deg a - 1)
      const auto da = static_cast<unsigned long>(a.degree());
      Integer num = ipow(b.leading(), da);
      Integer den = ipow(h, da - 1);
      Integer res;
      mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return res * t * sign;
    }
  }
}

Integer discriminant(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw std::domain_error("discriminant: polynomial must be monic of degree >= 1");
  const long n = f.degree();
  if (n == 1) return 1;
  Integer r = resultant(f, derivative(f));
  return ((n * (n - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

CompositionDiscriminant disc_power_composition(const IntPoly& f, std::uint64_t ell) {
  if (ell == 0) throw std::domain_error("disc_power_composition: l must be positive");
  if (!f.is_monic() || f.degree() < 1) throw std::domain_error("disc_power_composition: f must be monic of degree >= 1");
  if (f.constant_term() == 0) throw std::domain_error("disc_power_composition: f(0) must be nonzero");
  CompositionDiscriminant out;
  out.base_discriminant = discriminant(f);
  out.ell = ell;
  out.degree = static_cast<unsigned>(f.degree());
  out.constant_term = f.constant_term();
  out.magnitude = ipow(abs(out.base_discriminant), ell) *
                  ipow(from_u64(ell), static_cast<unsigned long>(out.degree * ell)) *
                  ipow(abs(out.constant_term), ell - 1);
  return out;
}

Integer eval(const IntPoly& f, const Integer& a) {
  Integer r = 0;
  for (int i = f.degree(); i >= 0; --i) r = r * a + f.coeffs()[static_cast<std::size_t>(i)];
  return r;
}

Integer eval_mod(const IntPoly& f, const Integer& a, const Integer& m) {
  if (m < 2) throw std::domain_error("eval_mod: modulus must be >= 2");
  Integer r = 0;
  for (int i = f.degree(); i >= 0; --i) {
    r = r * a + f.coeffs()[static_cast<std::size_t>(i)];
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

}  // namespace monocheck
