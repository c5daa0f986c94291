#pragma once

#include <mpfr.h>

#include <string>

#include "genera/rational.hpp"

namespace genera {

// Thin RAII value wrapper over mpfr_t. Every value carries its own precision
// (in bits); binary operations round to the larger of the two operand
// precisions, MPFR_RNDN throughout.
class BigFloat {
public:
    explicit BigFloat(long prec_bits = 256);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_string(const std::string& decimal, long prec_bits);
    static BigFloat from_rational(const Rational& q, long prec_bits);
    static BigFloat from_long(long v, long prec_bits);
    static BigFloat from_double(double v, long prec_bits);

    long precision() const { return mpfr_get_prec(v_); }

    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat operator-() const;

    BigFloat abs() const;
    BigFloat pow_si(long e) const;
    BigFloat pow(const BigFloat& e) const;
    BigFloat ln() const;
    BigFloat exp() const;

    int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return compare(o) < 0; }
    bool operator<=(const BigFloat& o) const { return compare(o) <= 0; }
    bool operator>(const BigFloat& o) const { return compare(o) > 0; }
    bool operator>=(const BigFloat& o) const { return compare(o) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits) const;

private:
    mpfr_t v_;
};

} // namespace genera
