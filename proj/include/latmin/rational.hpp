#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "latmin/errors.hpp"

namespace latmin {

// All exact arithmetic runs on GMP. Rationals are kept canonical
// (gcd(num, den) = 1, den > 0) so string round-trips are bit-exact.
using BigInt = mpz_class;
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const BigInt& z) { return z.get_d(); }

// Nearest integer, halves rounded up: floor(q + 1/2).
inline BigInt round_nearest(const Rational& q) {
    BigInt num = 2 * q.get_num() + q.get_den();
    BigInt den = 2 * q.get_den();
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

inline BigInt floor_rational(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Exact value of the binary double (every finite double is rational).
inline Rational rational_from_double(double x) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

// Accepts "p/q", "p", or a decimal literal such as "1.25" (parsed as an
// exact decimal fraction, not through a double).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline bool fits_int64(const BigInt& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) != 0;
}

inline std::int64_t to_int64(const BigInt& z) {
    if (!fits_int64(z)) throw InternalError("integer too large for int64 conversion");
    return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace latmin
