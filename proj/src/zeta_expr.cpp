#include "genera/zeta_expr.hpp"

#include <stdexcept>

#include "genera/bernoulli.hpp"

namespace genera {

std::string symbol_name(int sym) {
    if (sym == zsym::gamma) return "gamma";
    if (sym == zsym::pi) return "pi";
    return "zeta" + std::to_string(sym);
}

std::string symbol_pretty(int sym) {
    if (sym == zsym::gamma) return "gamma";
    if (sym == zsym::pi) return "pi";
    return "zeta(" + std::to_string(sym) + ")";
}

int symbol_from_name(const std::string& name) {
    if (name == "gamma") return zsym::gamma;
    if (name == "pi") return zsym::pi;
    if (name.rfind("zeta", 0) == 0) {
        try {
            int k = std::stoi(name.substr(4));
            if (k >= 2 && name == "zeta" + std::to_string(k)) return k;
        } catch (const std::exception&) {
        }
    }
    throw std::domain_error("unknown symbol: '" + name + "'");
}

ZetaExpr::ZetaExpr(const Rational& q) {
    if (q != 0) terms_.emplace(Monomial{}, q);
}

ZetaExpr ZetaExpr::symbol(int sym, int exponent) {
    if (sym < 0) throw std::domain_error("invalid symbol");
    if (exponent == 0) return ZetaExpr(1);
    if (exponent < 0 && sym != zsym::pi)
        throw std::domain_error("negative exponents are only supported for pi");
    ZetaExpr x;
    x.terms_.emplace(Monomial{{sym, exponent}}, Rational(1));
    return x;
}

ZetaExpr ZetaExpr::zeta(int k) {
    if (k < 2) throw std::domain_error("zeta symbol needs k >= 2");
    return symbol(zsym::zeta(k));
}

ZetaExpr ZetaExpr::term(const Monomial& m, const Rational& coef) {
    ZetaExpr x;
    x.add_term(m, coef);
    return x;
}

bool ZetaExpr::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ZetaExpr::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("expression is not rational: " + to_string());
    return terms_.begin()->second;
}

void ZetaExpr::add_term(const Monomial& m, const Rational& coef) {
    if (coef == 0) return;
    Monomial clean;
    for (const auto& [sym, e] : m)
        if (e != 0) clean.emplace(sym, e);
    auto it = terms_.find(clean);
    if (it == terms_.end()) {
        terms_.emplace(std::move(clean), coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

ZetaExpr ZetaExpr::operator-() const {
    ZetaExpr out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ZetaExpr ZetaExpr::operator+(const ZetaExpr& o) const {
    ZetaExpr out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

ZetaExpr ZetaExpr::operator-(const ZetaExpr& o) const {
    ZetaExpr out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

ZetaExpr ZetaExpr::operator*(const ZetaExpr& o) const {
    ZetaExpr out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [sym, e] : mb) {
                auto [it, fresh] = m.emplace(sym, e);
                if (!fresh) it->second += e;
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

ZetaExpr ZetaExpr::operator*(const Rational& q) const {
    ZetaExpr out;
    if (q == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * q);
    return out;
}

ZetaExpr ZetaExpr::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of a zeta expression");
    ZetaExpr out(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

ZetaExpr ZetaExpr::reduce_even() const {
    ZetaExpr out;
    for (const auto& [m, c] : terms_) {
        Monomial reduced;
        Rational coef = c;
        for (const auto& [sym, e] : m) {
            if (sym >= 2 && sym % 2 == 0) {
                // zeta(2n) = (-1)^{n-1} 2^{2n} / (2 (2n)!) B_{2n} * pi^{2n}
                int n = sym / 2;
                Rational r = bernoulli(sym) * Rational(Integer(1) << sym) /
                             Rational(2 * factorial(static_cast<unsigned long>(sym)));
                if (n % 2 == 0) r = -r;
                coef *= pow_rational(r, static_cast<unsigned long>(e));
                auto [it, fresh] = reduced.emplace(zsym::pi, sym * e);
                if (!fresh) it->second += sym * e;
            } else {
                auto [it, fresh] = reduced.emplace(sym, e);
                if (!fresh) it->second += e;
            }
        }
        out.add_term(reduced, coef);
    }
    return out;
}

std::string ZetaExpr::to_string() const {
    if (terms_.empty()) return "0/1";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string body;
        for (const auto& [sym, e] : m) {
            if (!body.empty()) body += "*";
            body += symbol_pretty(sym);
            if (e != 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) {
            s += rat_to_string(a);
        } else if (a == 1) {
            s += body;
        } else {
            s += rat_to_string(a) + "*" + body;
        }
    }
    return s;
}

} // namespace genera
