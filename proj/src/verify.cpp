#include "genera/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "genera/bernoulli.hpp"
#include "genera/big_float.hpp"
#include "genera/chern.hpp"
#include "genera/genus.hpp"
#include "genera/set_partition.hpp"
#include "genera/sym_poly.hpp"
#include "genera/weight_system.hpp"
#include "genera/zeta_numeric.hpp"
#include "genera/zeta_values.hpp"

namespace genera {

namespace {

struct Checker {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool no_ones(const IntPartition& lam) { return lam.multiplicity(1) == 0; }

bool all_even(const IntPartition& lam) {
    for (int p : lam.parts())
        if (p % 2 != 0) return false;
    return true;
}

PartitionMap<Rational> random_values(int n, std::mt19937& rng, bool even_only) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 6);
    PartitionMap<Rational> out;
    for (const IntPartition& lam : partitions_of_weight(n)) {
        if (even_only && !all_even(lam)) continue;
        out.emplace(lam, rat(num(rng), den(rng)));
    }
    return out;
}

SetPartition consecutive_blocks(const IntPartition& type) {
    std::vector<std::vector<int>> blocks;
    int next = 1;
    for (int part : type.parts()) {
        std::vector<int> block;
        for (int i = 0; i < part; ++i) block.push_back(next++);
        blocks.push_back(std::move(block));
    }
    return SetPartition(type.weight(), std::move(blocks));
}

void suite_mobius(Checker& c, std::mt19937&) {
    for (int n = 1; n <= 7; ++n) {
        for_each_set_partition(n, [&](const SetPartition& pi) {
            if (pi.length() == 1) return; // pi == one_hat
            Integer sum = 0;
            for (const SetPartition& rho : coarsenings(pi)) sum += mobius(pi, rho);
            c.require(sum == 0, "recursion sum nonzero above " + pi.to_string());
        });
    }
    for (int n = 1; n <= 8; ++n) {
        Integer want = factorial(static_cast<unsigned long>(n - 1));
        if (n % 2 == 0) want = -want;
        c.require(mobius(SetPartition::zero_hat(n), SetPartition::one_hat(n)) == want,
                  "mu(0,1) wrong in Pi_" + std::to_string(n));
    }
    std::vector<Integer> bell = {1};
    for (int n = 0; n <= 9; ++n) {
        Integer next = 0;
        for (int k = 0; k <= n; ++k)
            next += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
                    bell[static_cast<std::size_t>(k)];
        bell.push_back(next);
    }
    for (int n = 1; n <= 10; ++n) {
        Integer count = 0;
        for_each_set_partition(n, [&](const SetPartition&) { ++count; });
        c.require(count == bell[static_cast<std::size_t>(n)] &&
                      bell_number(n) == bell[static_cast<std::size_t>(n)],
                  "Bell count wrong at n=" + std::to_string(n));
    }
}

void suite_doubilet(Checker& c, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<Rational>> table(static_cast<std::size_t>(n));
            for (auto& row : table)
                for (int j = 0; j < 5; ++j) row.push_back(rat(num(rng), den(rng)));
            WeightSystem<Rational> w(table);
            SetPartition zero = SetPartition::zero_hat(n);
            for (const SetPartition& pi : enumerate_set_partitions(n)) {
                Rational m_via_p = 0;
                for (const SetPartition& rho : coarsenings(pi))
                    m_via_p += Rational(mobius(pi, rho)) * doubilet_p(rho, w);
                c.require(doubilet_m(pi, w) == m_via_p,
                          "m-p transition fails at " + pi.to_string());
                Rational h_via_p = 0;
                for (const SetPartition& rho : refinements(pi))
                    h_via_p += abs(Rational(mobius(zero, rho))) * doubilet_p(rho, w);
                c.require(doubilet_h(pi, w) == h_via_p,
                          "h-p transition fails at " + pi.to_string());
            }
        }
    }
}

void suite_symfunc_roundtrip(Checker& c, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> keep(0, 1);
    const Basis bases[] = {Basis::M, Basis::E, Basis::P, Basis::H};
    for (Basis from : bases) {
        SymPoly<Rational> f(from);
        for (int w = 0; w <= 8; ++w)
            for (const IntPartition& lam : partitions_of_weight(w))
                if (keep(rng)) f.add_term(lam, rat(num(rng), den(rng)));
        for (Basis to : bases) {
            SymPoly<Rational> back = convert(convert(f, to), from);
            c.require(back.terms() == f.terms(),
                      "round trip " + basis_name(from) + "->" + basis_name(to) + " broke");
        }
    }
}

void suite_hoffman(Checker& c, std::mt19937&) {
    const ZetaEvalContext ctx{30, 10000};
    const BigFloat tol = BigFloat::from_string("1e-3", 128);
    const BigFloat two = BigFloat::from_long(2, 128);
    BigFloat plain = eval_numeric(zeta_sym({2, 2}), ctx);
    BigFloat star = eval_numeric(zeta_star_sym({2, 2}), ctx);
    c.require((plain - two * mzv_truncated({2.0, 2.0}, 10000, false)).abs() < tol,
              "zeta_sym((2,2)) disagrees with the truncated double sum");
    c.require((star - two * mzv_truncated({2.0, 2.0}, 10000, true)).abs() < tol,
              "zeta_star_sym((2,2)) disagrees with the truncated double sum");
    for (int a = 2; a <= 4; ++a) {
        for (int b = 2; b <= 4; ++b) {
            BigFloat lhs = mzv_truncated({double(a), double(b)}, 10000, true);
            BigFloat rhs = mzv_truncated({double(a), double(b)}, 10000, false) +
                           euler_maclaurin_zeta(a + b, 30);
            c.require((lhs - rhs).abs() < tol,
                      "zeta*(a,b) = zeta(a,b) + zeta(a+b) fails at a=" + std::to_string(a) +
                          ", b=" + std::to_string(b));
        }
    }
}

void suite_todd_table(Checker& c, std::mt19937&) {
    const GenusSpec todd = builtin_genus("todd", 4);
    const PartitionMap<Rational> want = {
        {IntPartition{1}, rat(1, 2)},       {IntPartition{2}, rat(1, 12)},
        {IntPartition{1, 1}, rat(1, 12)},   {IntPartition{3}, rat(0)},
        {IntPartition{2, 1}, rat(1, 24)},   {IntPartition{1, 1, 1}, rat(0)},
        {IntPartition{4}, rat(-1, 720)},    {IntPartition{3, 1}, rat(1, 720)},
        {IntPartition{2, 2}, rat(1, 240)},  {IntPartition{2, 1, 1}, rat(1, 180)},
        {IntPartition{1, 1, 1, 1}, rat(-1, 720)}};
    for (int n = 1; n <= 4; ++n) {
        PartitionMap<ZetaExpr> table = coefficient_table(todd, n);
        for (const auto& [lam, coef] : table)
            c.require(coef == ZetaExpr(want.at(lam)), "Todd coefficient wrong at " + lam.to_string());
        c.require(table.size() == partitions_of_weight(n).size(),
                  "Todd table incomplete at weight " + std::to_string(n));
    }
}

void suite_genus_oracle(Checker& c, std::mt19937&) {
    for (const char* name : {"todd", "td_half", "gamma"}) {
        const GenusSpec g = builtin_genus(name, 8);
        for (int n = 1; n <= 5; ++n)
            c.require(expansion_oracle(g, n) == coefficient_table(g, n),
                      std::string(name) + " oracle mismatch at weight " + std::to_string(n));
    }
    const GenusSpec half = builtin_genus("td_half", 8);
    for (int n = 6; n <= 8; ++n)
        c.require(expansion_oracle(half, n) == coefficient_table(half, n),
                  "td_half oracle mismatch at weight " + std::to_string(n));
}

void suite_genus_closed(Checker& c, std::mt19937&) {
    const GenusSpec half = builtin_genus("td_half", 8);
    const GenusSpec todd = builtin_genus("todd", 8);
    const GenusSpec gam = builtin_genus("gamma", 6);
    for (int w = 1; w <= 4; ++w) {
        for (const IntPartition& lam : partitions_of_weight(w)) {
            IntPartition d = lam.doubled();
            c.require(closed_form_td_half(d).reduce_even() == coefficient(half, d),
                      "td_half closed form mismatch at " + d.to_string());
        }
    }
    for (int w = 2; w <= 8; ++w) {
        for (const IntPartition& lam : partitions_of_weight(w)) {
            if (!no_ones(lam)) continue;
            if (w % 2 == 0)
                c.require(closed_form_todd_even(lam).reduce_even() == coefficient(todd, lam),
                          "todd even closed form mismatch at " + lam.to_string());
            c.require(closed_form_td_half_even(lam).reduce_even() == coefficient(half, lam),
                      "td_half even closed form mismatch at " + lam.to_string());
        }
    }
    for (int w = 1; w <= 6; ++w)
        for (const IntPartition& lam : partitions_of_weight(w))
            c.require(closed_form_gamma(lam) == coefficient(gam, lam),
                      "gamma closed form mismatch at " + lam.to_string());
}

void suite_genus_vanishing(Checker& c, std::mt19937&) {
    const GenusSpec todd = builtin_genus("todd", 7);
    const GenusSpec half = builtin_genus("td_half", 10);
    for (int w = 3; w <= 7; w += 2) {
        for (const IntPartition& lam : partitions_of_weight(w)) {
            if (no_ones(lam)) {
                c.require(coefficient(todd, lam).is_zero(),
                          "todd coefficient nonzero at odd " + lam.to_string());
                c.require(coefficient(half, lam).is_zero(),
                          "td_half coefficient nonzero at odd " + lam.to_string());
            }
            if (!coefficient(todd, lam).is_zero())
                c.require(lam.multiplicity(1) >= 1,
                          "odd-weight survivor without a part 1: " + lam.to_string());
        }
    }
    for (int w = 1; w <= 5; ++w) {
        for (const IntPartition& lam : partitions_of_weight(w)) {
            Rational v = coefficient(half, lam.doubled()).rational_value();
            const int want = (w - lam.length()) % 2 == 0 ? 1 : -1;
            c.require(v != 0 && sgn(v) == want, "sign law fails at " + lam.doubled().to_string());
        }
    }
}

void suite_genus_positivity(Checker& c, std::mt19937&) {
    const GenusSpec gam = builtin_genus("gamma", 6);
    const ZetaEvalContext ctx{30, 10000};
    const BigFloat zero = BigFloat::from_long(0, 128);
    for (int w = 2; w <= 6; ++w) {
        for (const IntPartition& lam : partitions_of_weight(w)) {
            if (!no_ones(lam)) continue;
            c.require(eval_numeric(coefficient(gam, lam), ctx) > zero,
                      "gamma coefficient not positive at " + lam.to_string());
        }
    }
}

void suite_genus_b(Checker& c, std::mt19937&) {
    for (const char* name : {"todd", "td_half", "gamma"}) {
        const GenusSpec g = builtin_genus(name, 10);
        std::vector<ZetaExpr> b = b_sequence(g, 10);
        for (int n = 1; n <= 10; ++n)
            c.require(coefficient(g, IntPartition{n}) == b[static_cast<std::size_t>(n)],
                      std::string(name) + " b-sequence mismatch at n=" + std::to_string(n));
    }
}

void suite_chern_roundtrip(Checker& c, std::mt19937& rng) {
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            ChernVector cv(n, random_values(n, rng, false));
            ChernVector back = ch_to_chern(chern_to_ch(cv));
            for (const IntPartition& lam : partitions_of_weight(n))
                c.require(back.value(lam) == cv.value(lam),
                          "round trip broke at " + lam.to_string());
        }
    }
}

void suite_chern_hk(Checker& c, std::mt19937& rng) {
    ChVector h4(4, {{IntPartition{2, 2}, rat(1)}});
    ChVector g4(4, {{IntPartition{4}, rat(1)}});
    c.require(ch_to_chern(h4).value(IntPartition{4}) == rat(1, 2) &&
                  ch_to_chern(g4).value(IntPartition{4}) == rat(-6),
              "displayed C_(4) row is wrong");
    ChernVector c22(4, {{IntPartition{2, 2}, rat(1)}});
    ChernVector c4(4, {{IntPartition{4}, rat(1)}});
    c.require(chern_to_ch(c22).value(IntPartition{4}) == rat(1, 12) &&
                  chern_to_ch(c4).value(IntPartition{4}) == rat(-1, 6),
              "displayed Ch_(4) row is wrong");
    for (int w = 2; w <= 8; w += 2) {
        for (const IntPartition& two_nu : partitions_of_weight(w)) {
            if (!all_even(two_nu)) continue;
            const SetPartition pi = consecutive_blocks(two_nu);
            ChVector h(w, random_values(w, rng, true));
            ChernVector cv(w, random_values(w, rng, true));
            c.require(hk_ch_to_chern(h, pi) == ch_to_chern(h).value(two_nu),
                      "interval form disagrees with conversion at " + two_nu.to_string());
            c.require(hk_chern_to_ch(cv, pi) == chern_to_ch(cv).value(two_nu),
                      "interval form disagrees with conversion at " + two_nu.to_string());
            if (w > 6) continue;
            const Rational want_c = hk_ch_to_chern(h, pi);
            const Rational want_h = hk_chern_to_ch(cv, pi);
            for (const SetPartition& rho : enumerate_set_partitions(w)) {
                if (!(rho.type() == two_nu)) continue;
                c.require(hk_ch_to_chern(h, rho) == want_c && hk_chern_to_ch(cv, rho) == want_h,
                          "interval form depends on the set partition at " + rho.to_string());
            }
        }
    }
}

void suite_chern_td_half(Checker& c, std::mt19937&) {
    c.require(td_half_via_ch_check(8), "Bernoulli character expansion mismatch through weight 8");
}

void suite_chern_eval(Checker& c, std::mt19937& rng) {
    const GenusSpec todd = builtin_genus("todd", 4);
    ChernVector line(1, {{IntPartition{1}, rat(2)}});
    c.require(evaluate_genus(todd, line) == ZetaExpr(1), "Todd genus of the line is not 1");
    const GenusSpec gam = builtin_genus("gamma", 4);
    for (int n = 1; n <= 4; ++n) {
        PartitionMap<Rational> a = random_values(n, rng, false);
        PartitionMap<Rational> b = random_values(n, rng, false);
        const Rational s = rat(3, 7);
        PartitionMap<Rational> mixed;
        for (const IntPartition& lam : partitions_of_weight(n))
            mixed.emplace(lam, s * a.at(lam) + b.at(lam));
        ZetaExpr lhs = evaluate_genus(gam, ChernVector(n, mixed));
        ZetaExpr rhs = evaluate_genus(gam, ChernVector(n, a)) * s +
                       evaluate_genus(gam, ChernVector(n, b));
        c.require(lhs == rhs, "evaluation is not linear at weight " + std::to_string(n));
    }
}

using SuiteFn = void (*)(Checker&, std::mt19937&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"mobius", suite_mobius},
        {"doubilet", suite_doubilet},
        {"symfunc-roundtrip", suite_symfunc_roundtrip},
        {"hoffman", suite_hoffman},
        {"todd-table", suite_todd_table},
        {"genus-oracle", suite_genus_oracle},
        {"genus-closed", suite_genus_closed},
        {"genus-vanishing", suite_genus_vanishing},
        {"genus-positivity", suite_genus_positivity},
        {"genus-b", suite_genus_b},
        {"chern-roundtrip", suite_chern_roundtrip},
        {"chern-hk", suite_chern_hk},
        {"chern-td-half", suite_chern_td_half},
        {"chern-eval", suite_chern_eval},
    };
    return table;
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed) {
    for (const auto& [suite_name, fn] : suites()) {
        if (suite_name != name) continue;
        SuiteResult r;
        r.name = name;
        std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        fn(c, rng);
        auto t1 = std::chrono::steady_clock::now();
        r.pass = c.ok;
        r.detail = c.detail;
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        return r;
    }
    throw std::domain_error("unknown verify suite: '" + name + "'");
}

std::vector<SuiteResult> run_all_verify_suites(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const std::string& name : verify_suite_names())
        out.push_back(run_verify_suite(name, seed));
    return out;
}

} // namespace genera
