#include "genera/sym_poly.hpp"

#include "genera/zeta_expr.hpp"

namespace genera {
namespace detail {

PartitionMap<Rational> transition_row(Basis from, Basis to, const IntPartition& lambda) {
    if (from == to) return PartitionMap<Rational>{{lambda, Rational(1)}};
    if (from != Basis::P && to != Basis::P) {
        // Route through the power-sum hub.
        PartitionMap<Rational> out;
        for (const auto& [mu, c] : transition_row(from, Basis::P, lambda))
            for (const auto& [nu, q] : transition_row(Basis::P, to, mu)) {
                auto it = out.find(nu);
                if (it == out.end()) {
                    if (c * q != 0) out.emplace(nu, c * q);
                } else {
                    it->second += c * q;
                    if (it->second == 0) out.erase(it);
                }
            }
        return out;
    }
    if (to == Basis::P) {
        switch (from) {
            case Basis::M: return p_expansion_of_m(lambda);
            case Basis::E: return p_expansion_of_e(lambda);
            case Basis::H: return p_expansion_of_h(lambda);
            default: break;
        }
    } else {
        switch (to) {
            case Basis::M: return m_expansion_of_p(lambda);
            case Basis::E: return e_expansion_of_p(lambda);
            case Basis::H: return h_expansion_of_p(lambda);
            default: break;
        }
    }
    throw std::logic_error("bad basis pair");
}

std::string render_coef(const Rational& c, bool& negated) {
    Rational a = c;
    if (a < 0) {
        negated = true;
        a = -a;
    }
    if (a == 1) return "";
    return rat_to_string(a);
}

std::string render_zeta_coef(const std::string& pretty, bool& negated) {
    std::string s = pretty;
    if (s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos)
        return "(" + s + ")";
    if (!s.empty() && s[0] == '-') {
        negated = true;
        s = s.substr(1);
    }
    if (s == "1/1") return "";
    return s;
}

} // namespace detail

bool cauchy_check(int n, int k) {
    if (k < n) throw std::domain_error("cauchy check needs at least n variables");
    const int vars = 2 * k; // x_1..x_k then y_1..y_k
    MultiPoly<Rational> lhs = MultiPoly<Rational>::constant(vars, Rational(1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            std::vector<int> e(static_cast<std::size_t>(vars), 0);
            e[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(k + j)] = 1;
            MultiPoly<Rational> factor = MultiPoly<Rational>::constant(vars, Rational(1));
            factor.add_term(std::move(e), Rational(1));
            lhs = lhs.times_truncated(factor, 2 * n);
        }
    }

    auto widen = [&](const MultiPoly<Rational>& p, int offset) {
        MultiPoly<Rational> out(vars);
        for (const auto& [e, c] : p.terms()) {
            std::vector<int> we(static_cast<std::size_t>(vars), 0);
            for (int i = 0; i < k; ++i) we[static_cast<std::size_t>(i + offset)] = e[static_cast<std::size_t>(i)];
            out.add_term(std::move(we), c);
        }
        return out;
    };

    MultiPoly<Rational> rhs = MultiPoly<Rational>::constant(vars, Rational(1));
    for (int w = 1; w <= n; ++w) {
        for (const auto& lam : partitions_of_weight(w)) {
            auto mx = widen(expand(SymPoly<Rational>::basis_element(Basis::M, lam), k), 0);
            auto ey = widen(expand(SymPoly<Rational>::basis_element(Basis::E, lam), k), k);
            rhs = rhs + mx * ey;
        }
    }
    return lhs == rhs;
}

} // namespace genera
