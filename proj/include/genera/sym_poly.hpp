#pragma once

#include <algorithm>
#include <string>
#include <type_traits>

#include "genera/int_partition.hpp"
#include "genera/multi_poly.hpp"
#include "genera/sym_basis.hpp"

namespace genera {

// Symmetric function written in one of the four bases: finite R-linear
// combination of basis elements indexed by integer partitions. Mixed weights
// are allowed (graded sums); the empty partition indexes the unit.
template <class R>
class SymPoly {
public:
    explicit SymPoly(Basis b) : basis_(b) {}

    static SymPoly basis_element(Basis b, const IntPartition& lambda) {
        SymPoly f(b);
        f.add_term(lambda, R(1));
        return f;
    }

    static SymPoly constant(Basis b, const R& c) {
        SymPoly f(b);
        f.add_term(IntPartition{}, c);
        return f;
    }

    Basis basis() const { return basis_; }
    const PartitionMap<R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int max_weight() const {
        int w = 0;
        for (const auto& [lam, c] : terms_) w = std::max(w, lam.weight());
        return w;
    }

    void add_term(const IntPartition& lambda, const R& c) {
        if (c == R(0)) return;
        auto it = terms_.find(lambda);
        if (it == terms_.end()) {
            terms_.emplace(lambda, c);
        } else {
            it->second = it->second + c;
            if (it->second == R(0)) terms_.erase(it);
        }
    }

    SymPoly operator+(const SymPoly& o) const {
        require_same_basis(o);
        SymPoly r = *this;
        for (const auto& [lam, c] : o.terms_) r.add_term(lam, c);
        return r;
    }

    SymPoly operator-(const SymPoly& o) const {
        require_same_basis(o);
        SymPoly r = *this;
        for (const auto& [lam, c] : o.terms_) r.add_term(lam, R(0) - c);
        return r;
    }

    SymPoly operator*(const R& s) const {
        SymPoly r(basis_);
        for (const auto& [lam, c] : terms_) r.add_term(lam, c * s);
        return r;
    }

    bool operator==(const SymPoly& o) const {
        return basis_ == o.basis_ && terms_ == o.terms_;
    }

    // "1/2*p[1,1] - 1/2*p[2]" style; terms in canonical map order. A
    // non-rational coefficient ring renders parenthesized via R::to_string.
    std::string to_string() const;

private:
    void require_same_basis(const SymPoly& o) const {
        if (basis_ != o.basis_) throw std::domain_error("basis mismatch");
    }

    Basis basis_;
    PartitionMap<R> terms_;
};

namespace detail {

// The transition row for a single source-basis element into the target
// basis, as rational coefficients.
PartitionMap<Rational> transition_row(Basis from, Basis to, const IntPartition& lambda);

std::string render_coef(const Rational& c, bool& negated);
std::string render_zeta_coef(const std::string& pretty, bool& negated);

} // namespace detail

template <class R>
SymPoly<R> convert(const SymPoly<R>& f, Basis target) {
    if (f.basis() == target) return f;
    SymPoly<R> out(target);
    for (const auto& [lam, c] : f.terms())
        for (const auto& [mu, q] : detail::transition_row(f.basis(), target, lam))
            out.add_term(mu, c * q);
    return out;
}

template <class R>
SymPoly<R> multiply(const SymPoly<R>& f, const SymPoly<R>& g) {
    SymPoly<R> fp = convert(f, Basis::P);
    SymPoly<R> gp = convert(g, Basis::P);
    SymPoly<R> prod(Basis::P);
    for (const auto& [a, ca] : fp.terms())
        for (const auto& [b, cb] : gp.terms()) prod.add_term(a.merged(b), ca * cb);
    return convert(prod, f.basis());
}

namespace detail {

// Multivariate image of a single basis element in k variables.
template <class R>
MultiPoly<R> expand_element(Basis b, const IntPartition& lambda, int k) {
    MultiPoly<R> out = MultiPoly<R>::constant(k, R(1));
    auto merge = [&](MultiPoly<R>&& factor) { out = out * factor; };
    switch (b) {
        case Basis::P:
            for (int part : lambda.parts()) {
                MultiPoly<R> p(k);
                for (int i = 0; i < k; ++i) {
                    std::vector<int> e(static_cast<std::size_t>(k), 0);
                    e[static_cast<std::size_t>(i)] = part;
                    p.add_term(std::move(e), R(1));
                }
                merge(std::move(p));
            }
            return out;
        case Basis::E:
            for (int part : lambda.parts()) {
                MultiPoly<R> p(k);
                if (part <= k) {
                    std::vector<int> e(static_cast<std::size_t>(k), 0);
                    for (int i = 0; i < part; ++i) e[static_cast<std::size_t>(i)] = 1;
                    std::sort(e.begin(), e.end());
                    do {
                        p.add_term(e, R(1));
                    } while (std::next_permutation(e.begin(), e.end()));
                }
                merge(std::move(p));
            }
            return out;
        case Basis::H:
            for (int part : lambda.parts()) {
                MultiPoly<R> p(k);
                std::vector<int> e(static_cast<std::size_t>(k), 0);
                auto rec = [&](auto&& self, int pos, int left) -> void {
                    if (pos == k - 1) {
                        e[static_cast<std::size_t>(pos)] = left;
                        p.add_term(e, R(1));
                        return;
                    }
                    for (int v = 0; v <= left; ++v) {
                        e[static_cast<std::size_t>(pos)] = v;
                        self(self, pos + 1, left - v);
                    }
                };
                if (k > 0) rec(rec, 0, part);
                merge(std::move(p));
            }
            return out;
        case Basis::M: {
            MultiPoly<R> p(k);
            if (lambda.length() <= k) {
                std::vector<int> e(lambda.parts().begin(), lambda.parts().end());
                e.resize(static_cast<std::size_t>(k), 0);
                std::sort(e.begin(), e.end());
                do {
                    p.add_term(e, R(1));
                } while (std::next_permutation(e.begin(), e.end()));
            }
            return out * p;
        }
    }
    throw std::logic_error("bad basis");
}

} // namespace detail

// Image of f under x_{k+1} = x_{k+2} = ... = 0. Requires k >= the maximal
// weight in f, so distinct partitions stay linearly independent.
template <class R>
MultiPoly<R> expand(const SymPoly<R>& f, int k) {
    if (k < f.max_weight())
        throw std::domain_error("need at least " + std::to_string(f.max_weight()) +
                                " variables to expand faithfully");
    MultiPoly<R> out(k);
    for (const auto& [lam, c] : f.terms())
        out = out + detail::expand_element<R>(f.basis(), lam, k) * c;
    return out;
}

// Verifies prod_{i,j<=k} (1 + x_i y_j) = 1 + sum_{1<=|lambda|<=n} m_lambda(x)
// e_lambda(y) through total degree n in lambda-weight.
bool cauchy_check(int n, int k);

template <class R>
std::string SymPoly<R>::to_string() const {
    if (terms_.empty()) return "0/1";
    std::string s;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        bool negated = false;
        std::string coef;
        if constexpr (std::is_same_v<R, Rational>) {
            coef = detail::render_coef(c, negated);
        } else {
            coef = detail::render_zeta_coef(c.to_string(), negated);
        }
        if (first) {
            if (negated) s += "-";
        } else {
            s += negated ? " - " : " + ";
        }
        first = false;
        std::string body(1, basis_letter(basis_));
        body += lam.to_string();
        if (coef.empty())
            s += body;
        else
            s += coef + "*" + body;
    }
    return s;
}

} // namespace genera
