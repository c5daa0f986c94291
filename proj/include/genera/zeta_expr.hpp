#pragma once

#include <map>
#include <string>

#include "genera/rational.hpp"

namespace genera {

// Symbol alphabet for the zeta coefficient ring, encoded as small integers:
// 0 = gamma, 1 = pi, k >= 2 = zeta(k).
namespace zsym {
inline constexpr int gamma = 0;
inline constexpr int pi = 1;
inline constexpr int zeta(int k) { return k; }
} // namespace zsym

// symbol -> exponent, exponents nonzero. pi may carry negative exponents
// (Laurent), which the (2*pi)-power denominators of genus coefficients need;
// gamma and zeta exponents are positive.
using Monomial = std::map<int, int>;

std::string symbol_name(int sym);   // "gamma", "pi", "zeta3"
std::string symbol_pretty(int sym); // "gamma", "pi", "zeta(3)"
int symbol_from_name(const std::string& name);

// Element of Q[gamma, pi^{+-1}, zeta(2), zeta(3), ...]: a finite sum of
// rational multiples of canonical monomials. Zero coefficients are never
// stored.
class ZetaExpr {
public:
    ZetaExpr() = default;
    ZetaExpr(int n) : ZetaExpr(Rational(n)) {}
    ZetaExpr(const Rational& q);

    static ZetaExpr symbol(int sym, int exponent = 1);
    static ZetaExpr gamma() { return symbol(zsym::gamma); }
    static ZetaExpr pi(int exponent = 1) { return symbol(zsym::pi, exponent); }
    static ZetaExpr zeta(int k);
    static ZetaExpr term(const Monomial& m, const Rational& coef);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // The value of a purely rational expression; throws if symbols remain.
    Rational rational_value() const;

    ZetaExpr operator-() const;
    ZetaExpr operator+(const ZetaExpr& o) const;
    ZetaExpr operator-(const ZetaExpr& o) const;
    ZetaExpr operator*(const ZetaExpr& o) const;
    ZetaExpr operator*(const Rational& q) const;
    ZetaExpr pow(int e) const; // e >= 0

    // Rewrites every zeta(2k) as its rational multiple of pi^{2k}; the
    // result carries only gamma, pi, and odd zetas.
    ZetaExpr reduce_even() const;

    // Deterministic rendering: terms in monomial order joined by " + "/" - ",
    // unit coefficients omitted, e.g. "zeta(2)^2 - zeta(4)".
    std::string to_string() const;

    bool operator==(const ZetaExpr& o) const = default;

private:
    std::map<Monomial, Rational> terms_;
    void add_term(const Monomial& m, const Rational& coef);
};

inline ZetaExpr operator*(const Rational& q, const ZetaExpr& x) { return x * q; }

} // namespace genera
