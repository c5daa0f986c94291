#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genera {

// Exact rational arithmetic. GMP's mpq_class is canonicalized (gcd 1,
// positive denominator) after every operation, which is exactly the
// normal form the serialization contract requires.
using Rational = mpq_class;
using Integer = mpz_class;

// The two-argument mpq_class constructor does not canonicalize; this helper
// does, so results compare correctly.
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Renders as "p/q" with q > 0 and gcd(p,q) = 1, always including the
// denominator ("0/1", "828/1").
inline std::string rat_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::domain_error("not a rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::domain_error("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace genera
