#include "genera/big_float.hpp"

#include <algorithm>
#include <stdexcept>

namespace genera {

BigFloat::BigFloat(long prec_bits) {
    mpfr_init2(v_, std::max(prec_bits, 2L));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_string(const std::string& decimal, long prec_bits) {
    BigFloat r(prec_bits);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::domain_error("not a decimal literal: '" + decimal + "'");
    return r;
}

BigFloat BigFloat::from_rational(const Rational& q, long prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long v, long prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double v, long prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat& o) const {
    BigFloat r(std::max(precision(), o.precision()));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& o) const {
    BigFloat r(std::max(precision(), o.precision()));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& o) const {
    BigFloat r(std::max(precision(), o.precision()));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat& o) const {
    BigFloat r(std::max(precision(), o.precision()));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_si(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow(const BigFloat& e) const {
    BigFloat r(std::max(precision(), e.precision()));
    mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::ln() const {
    BigFloat r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(precision());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rg", digits, v_) < 0)
        throw std::runtime_error("mpfr formatting failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

} // namespace genera
