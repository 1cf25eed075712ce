#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace monocheck {

/// Arbitrary-precision signed integer used for every exact coefficient.
using Integer = mpz_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "GMP ui conversions assume a 64-bit unsigned long");

inline Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

inline Integer from_i64(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline bool fits_u64(const Integer& v) { return sgn(v) >= 0 && mpz_fits_ulong_p(v.get_mpz_t()); }
inline bool fits_i64(const Integer& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

inline std::uint64_t to_u64(const Integer& v) { return mpz_get_ui(v.get_mpz_t()); }
inline std::int64_t to_i64(const Integer& v) { return mpz_get_si(v.get_mpz_t()); }

/// Least nonnegative residue of v modulo m (m > 0).
inline std::uint64_t mod_u64(const Integer& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace monocheck
