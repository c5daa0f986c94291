#include "genera/chern.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "genera/bernoulli.hpp"
#include "genera/errors.hpp"
#include "genera/sym_poly.hpp"

namespace genera {

namespace {

// Transition matrices per (weight, direction), write-once under a lock.
// Row lambda of matrix(n, P, E): p_lambda in the e-basis, and so on.
const PartitionMap<PartitionMap<Rational>>& transition_matrix(int n, Basis from, Basis to) {
    static std::mutex mu;
    static std::map<std::tuple<int, Basis, Basis>, PartitionMap<PartitionMap<Rational>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, from, to);
    auto it = cache.find(key);
    if (it == cache.end()) {
        PartitionMap<PartitionMap<Rational>> m;
        for (const IntPartition& lam : partitions_of_weight(n))
            m.emplace(lam, detail::transition_row(from, to, lam));
        it = cache.emplace(key, std::move(m)).first;
    }
    return it->second;
}

void require_even_type(const IntPartition& type) {
    for (int part : type.parts())
        if (part % 2 != 0)
            throw std::domain_error("hyper-Kahler conversion needs an even type, got " +
                                    type.to_string());
}

SymPoly<Rational> truncate_weight(const SymPoly<Rational>& f, int n) {
    SymPoly<Rational> out(f.basis());
    for (const auto& [lam, c] : f.terms())
        if (lam.weight() <= n) out.add_term(lam, c);
    return out;
}

} // namespace

ChVector chern_to_ch(const ChernVector& c) {
    const int n = c.dim();
    PartitionMap<Rational> out;
    for (const auto& [lam, row] : transition_matrix(n, Basis::P, Basis::E)) {
        Rational acc(0);
        for (const auto& [mu, t] : row) acc += t * c.value(mu);
        out.emplace(lam, acc / Rational(lam.parts_factorial()));
    }
    return ChVector(n, std::move(out));
}

ChernVector ch_to_chern(const ChVector& h) {
    const int n = h.dim();
    PartitionMap<Rational> out;
    for (const auto& [lam, row] : transition_matrix(n, Basis::E, Basis::P)) {
        // row: e_lam = sum_mu S_{lam mu} p_mu; yields C_lam.
        Rational acc(0);
        for (const auto& [mu, s] : row) acc += s * Rational(mu.parts_factorial()) * h.value(mu);
        out.emplace(lam, acc);
    }
    return ChernVector(n, std::move(out));
}

Rational hk_ch_to_chern(const ChVector& h, const SetPartition& pi) {
    const IntPartition two_nu = pi.type();
    require_even_type(two_nu);
    if (h.dim() != pi.n())
        throw std::domain_error("vector dimension " + std::to_string(h.dim()) +
                                " does not match ground set size " + std::to_string(pi.n()));
    Rational acc(0);
    for (const SetPartition& rho : refinements(pi)) {
        const IntPartition type = rho.type();
        bool even = true;
        for (int part : type.parts()) even = even && part % 2 == 0;
        if (!even) continue;
        acc += Rational(mobius(SetPartition::zero_hat(rho.n()), rho)) *
               Rational(type.parts_factorial()) * h.value(type);
    }
    return acc / Rational(two_nu.parts_factorial());
}

Rational hk_chern_to_ch(const ChernVector& c, const SetPartition& pi) {
    const IntPartition two_nu = pi.type();
    require_even_type(two_nu);
    if (c.dim() != pi.n())
        throw std::domain_error("vector dimension " + std::to_string(c.dim()) +
                                " does not match ground set size " + std::to_string(pi.n()));
    Rational acc(0);
    for (const SetPartition& rho : refinements(pi)) {
        const IntPartition type = rho.type();
        bool even = true;
        for (int part : type.parts()) even = even && part % 2 == 0;
        if (!even) continue;
        acc += Rational(mobius(rho, pi)) * Rational(type.parts_factorial()) * c.value(type);
    }
    const Rational denom =
        Rational(two_nu.parts_factorial()) * Rational(mobius(SetPartition::zero_hat(pi.n()), pi));
    return acc / denom;
}

bool td_half_via_ch_check(int n) {
    if (n < 0) throw std::domain_error("weight must be non-negative");
    if (n > kMaxOracleWeight)
        throw capability_error("check weight " + std::to_string(n) + " exceeds the ceiling " +
                               std::to_string(kMaxOracleWeight));
    if (n < 2) return true;

    SymPoly<Rational> u(Basis::P);
    for (int k = 1; 2 * k <= n; ++k)
        u.add_term(IntPartition{2 * k},
                   -bernoulli(2 * k) /
                       (Rational(4 * k) * Rational(factorial(static_cast<unsigned long>(2 * k)))));

    SymPoly<Rational> f = SymPoly<Rational>::constant(Basis::P, rat(1));
    SymPoly<Rational> power = f;
    Rational inv_fact(1);
    for (int j = 1; 2 * j <= n; ++j) {
        power = truncate_weight(multiply(power, u), n);
        inv_fact /= Rational(j);
        f = f + power * inv_fact;
    }

    const SymPoly<Rational> fe = convert(f, Basis::E);
    const GenusSpec half = builtin_genus("td_half", n);
    for (int m = 1; m <= n; ++m) {
        for (const IntPartition& lam : partitions_of_weight(m)) {
            if (lam.multiplicity(1) != 0) continue; // quotient by e_1
            auto it = fe.terms().find(lam);
            const Rational lhs = it == fe.terms().end() ? Rational(0) : it->second;
            const Rational rhs = coefficient(half, lam).reduce_even().rational_value();
            if (lhs != rhs) return false;
        }
    }
    return true;
}

ZetaExpr evaluate_genus(const GenusSpec& g, const ChernVector& c, bool reduce) {
    if (c.dim() > kMaxTableWeight)
        throw capability_error("dimension " + std::to_string(c.dim()) + " exceeds the ceiling " +
                               std::to_string(kMaxTableWeight));
    ZetaExpr acc;
    for (const auto& [lam, v] : c.entries()) acc = acc + coefficient(g, lam) * v;
    return reduce ? acc.reduce_even() : acc;
}

BigFloat evaluate_genus_numeric(const GenusSpec& g, const ChernVector& c,
                                const ZetaEvalContext& ctx) {
    return eval_numeric(evaluate_genus(g, c, false), ctx);
}

} // namespace genera
