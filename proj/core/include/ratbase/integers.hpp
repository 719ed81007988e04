#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace ratbase {

/// Arbitrary-precision integer. States along extremal paths grow by a factor
/// p/q per step, so fixed-width integers overflow after ~110 steps already
/// for the smallest base 3/2.
using Int = mpz_class;

/// Arbitrary-precision rational, kept canonical (gcd = 1, positive
/// denominator) by construction.
using Rat = mpq_class;

/// Floor division, b > 0. GMP's fdiv, exposed with value semantics.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Ceiling division, b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Mathematical remainder in [0, b), b > 0.
inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// num/den in canonical form. mpq_class(num, den) alone does not reduce.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// x^k for a non-negative exponent.
inline Rat pow_rat(const Rat& x, unsigned long k) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), k);
    return r; // powers of a canonical fraction stay canonical
}

inline Int pow_int(const Int& x, unsigned long k) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

std::string to_string(const Int& v);

/// "n/d", or just "n" for integral values.
std::string to_string(const Rat& v);

/// Parses "n" or "n/d" (signed decimal); canonicalizes. Throws ParseError.
Rat parse_rational(const std::string& text);

} // namespace ratbase
