#ifndef SPINFACTOR_BIGINT_HPP
#define SPINFACTOR_BIGINT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinfactor {

// Exact integer coefficients. All character arithmetic is over Int;
// no floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }
inline Rat rat_of(long long num, long long den) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool fits_ll(const Int& v) { return v.fits_slong_p(); }

inline long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("Int does not fit in long long");
  return v.get_si();
}

inline Int pow2(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// q must divide v exactly.
inline Int divexact(const Int& v, const Int& q) {
  Int quo, rem;
  mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  if (rem != 0) throw std::logic_error("divexact: not divisible");
  return quo;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// Rational must be an integer; returns it.
inline Int rat_to_int(const Rat& r) {
  if (r.get_den() != 1) throw std::logic_error("rat_to_int: not an integer");
  return r.get_num();
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace spinfactor

#endif
