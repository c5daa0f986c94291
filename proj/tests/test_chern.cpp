#include <doctest.h>

#include <random>
#include <vector>

#include "genera/chern.hpp"
#include "genera/errors.hpp"
#include "genera/genus.hpp"

using namespace genera;

namespace {

bool all_even(const IntPartition& lam) {
    for (int part : lam.parts())
        if (part % 2 != 0) return false;
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

} // namespace

TEST_CASE("chern_to_ch: frozen rows in dimensions 1, 2, 4") {
    ChernVector c1(1, {{IntPartition{1}, rat(5, 3)}});
    CHECK(chern_to_ch(c1).value(IntPartition{1}) == rat(5, 3));
    CHECK(ch_to_chern(ChVector(1, {{IntPartition{1}, rat(-7)}})).value(IntPartition{1}) ==
          rat(-7));

    ChernVector c2(2, {{IntPartition{2}, rat(3)}, {IntPartition{1, 1}, rat(10)}});
    ChVector h2 = chern_to_ch(c2);
    CHECK(h2.value(IntPartition{2}) == rat(10 - 2 * 3, 2));
    CHECK(h2.value(IntPartition{1, 1}) == rat(10));

    std::mt19937 rng(20260814);
    ChernVector c4(4, random_values(4, rng, false));
    ChVector h4 = chern_to_ch(c4);
    const Rational a = c4.value(IntPartition{1, 1, 1, 1});
    const Rational b = c4.value(IntPartition{2, 1, 1});
    const Rational d = c4.value(IntPartition{2, 2});
    const Rational e = c4.value(IntPartition{3, 1});
    const Rational f = c4.value(IntPartition{4});
    // p_4 = e1^4 - 4 e1^2 e2 + 2 e2^2 + 4 e1 e3 - 4 e4, lambda! = 24
    CHECK(h4.value(IntPartition{4}) ==
          (a - Rational(4) * b + Rational(2) * d + Rational(4) * e - Rational(4) * f) / Rational(24));
    // p_{2,2} = e1^4 - 4 e1^2 e2 + 4 e2^2, lambda! = 4
    CHECK(h4.value(IntPartition{2, 2}) == (a - Rational(4) * b + Rational(4) * d) / Rational(4));
    CHECK(h4.value(IntPartition{1, 1, 1, 1}) == a);
}

TEST_CASE("the displayed dimension-4 pair on even-supported data") {
    ChernVector c(4, {{IntPartition{2, 2}, rat(12)}, {IntPartition{4}, rat(-6)}});
    CHECK(chern_to_ch(c).value(IntPartition{4}) == rat(12, 12) - rat(-6, 6));

    ChVector unit_22(4, {{IntPartition{2, 2}, rat(1)}});
    ChVector unit_4(4, {{IntPartition{4}, rat(1)}});
    CHECK(ch_to_chern(unit_22).value(IntPartition{4}) == rat(1, 2));
    CHECK(ch_to_chern(unit_4).value(IntPartition{4}) == rat(-6));
    CHECK(chern_to_ch(ChernVector(4, {{IntPartition{2, 2}, rat(1)}})).value(IntPartition{4}) ==
          rat(1, 12));
    CHECK(chern_to_ch(ChernVector(4, {{IntPartition{4}, rat(1)}})).value(IntPartition{4}) ==
          rat(-1, 6));
}

TEST_CASE("round trip: ch_to_chern after chern_to_ch is the identity") {
    std::mt19937 rng(20240819);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            ChernVector c(n, random_values(n, rng, false));
            ChernVector back = ch_to_chern(chern_to_ch(c));
            for (const IntPartition& lam : partitions_of_weight(n))
                CHECK(back.value(lam) == c.value(lam));
            ChVector h(n, random_values(n, rng, false));
            ChVector hback = chern_to_ch(ch_to_chern(h));
            for (const IntPartition& lam : partitions_of_weight(n))
                CHECK(hback.value(lam) == h.value(lam));
        }
    }
}

TEST_CASE("hyper-Kahler lemma: single-block examples") {
    // 2nu = (2): C_(2) = (1/2!) mu(0,1) 2! Ch_(2) = -Ch_(2)
    ChVector h2(2, {{IntPartition{2}, rat(5)}});
    CHECK(hk_ch_to_chern(h2, SetPartition::one_hat(2)) == rat(-5));
    ChernVector c2(2, {{IntPartition{2}, rat(5)}});
    CHECK(hk_chern_to_ch(c2, SetPartition::one_hat(2)) == rat(-5));

    // 2nu = (4) reproduces the displayed pair.
    ChVector h4(4, {{IntPartition{2, 2}, rat(10)}, {IntPartition{4}, rat(3)}});
    CHECK(hk_ch_to_chern(h4, SetPartition::one_hat(4)) == rat(10, 2) - rat(6) * rat(3));
    ChernVector c4(4, {{IntPartition{2, 2}, rat(10)}, {IntPartition{4}, rat(3)}});
    CHECK(hk_chern_to_ch(c4, SetPartition::one_hat(4)) == rat(10, 12) - rat(3, 6));
}

TEST_CASE("hyper-Kahler lemma agrees with unrestricted conversion on even support") {
    std::mt19937 rng(777);
    for (int w = 2; w <= 8; w += 2) {
        for (const IntPartition& two_nu : partitions_of_weight(w)) {
            if (!all_even(two_nu)) continue;
            const SetPartition pi = consecutive_blocks(two_nu);
            ChVector h(w, random_values(w, rng, true));
            CHECK(hk_ch_to_chern(h, pi) == ch_to_chern(h).value(two_nu));
            ChernVector c(w, random_values(w, rng, true));
            CHECK(hk_chern_to_ch(c, pi) == chern_to_ch(c).value(two_nu));
        }
    }
}

TEST_CASE("hyper-Kahler lemma is independent of the set partition chosen") {
    std::mt19937 rng(4242);
    for (int w = 2; w <= 6; w += 2) {
        for (const IntPartition& two_nu : partitions_of_weight(w)) {
            if (!all_even(two_nu)) continue;
            ChVector h(w, random_values(w, rng, true));
            ChernVector c(w, random_values(w, rng, true));
            const Rational want_c = hk_ch_to_chern(h, consecutive_blocks(two_nu));
            const Rational want_h = hk_chern_to_ch(c, consecutive_blocks(two_nu));
            int seen = 0;
            for (const SetPartition& pi : enumerate_set_partitions(w)) {
                if (!(pi.type() == two_nu)) continue;
                ++seen;
                CHECK(hk_ch_to_chern(h, pi) == want_c);
                CHECK(hk_chern_to_ch(c, pi) == want_h);
            }
            CHECK(seen >= 1);
        }
    }
}

TEST_CASE("hyper-Kahler conversion rejects odd types and mismatched dimensions") {
    ChVector h3(3, {{IntPartition{3}, rat(1)}});
    CHECK_THROWS_AS(hk_ch_to_chern(h3, SetPartition::one_hat(3)), std::domain_error);
    ChVector h(3, {{IntPartition{2, 1}, rat(1)}});
    CHECK_THROWS_AS(hk_ch_to_chern(h, SetPartition(3, {{1, 2}, {3}})), std::domain_error);
    ChVector h2(2, {{IntPartition{2}, rat(1)}});
    CHECK_THROWS_AS(hk_ch_to_chern(h2, SetPartition::one_hat(4)), std::domain_error);
    ChernVector c2(2, {{IntPartition{2}, rat(1)}});
    CHECK_THROWS_AS(hk_chern_to_ch(c2, SetPartition::one_hat(4)), std::domain_error);
}

TEST_CASE("Bernoulli character expansion reproduces td_half away from c_1") {
    for (int n = 0; n <= 8; ++n) CHECK(td_half_via_ch_check(n));
    CHECK_THROWS_AS(td_half_via_ch_check(9), capability_error);
}

TEST_CASE("evaluate_genus: point values, linearity, reduction, numerics") {
    const GenusSpec todd = builtin_genus("todd", 4);
    ChernVector line(1, {{IntPartition{1}, rat(2)}});
    CHECK(evaluate_genus(todd, line) == ZetaExpr(1));

    ChernVector zero(3, {});
    CHECK(evaluate_genus(builtin_genus("td_half", 4), zero).is_zero());

    const GenusSpec gamma = builtin_genus("gamma", 4);
    ChernVector c2(2, {{IntPartition{2}, rat(1)}});
    CHECK(evaluate_genus(gamma, c2) == ZetaExpr::zeta(2));
    CHECK(evaluate_genus(gamma, c2, true) == ZetaExpr::pi(2) * rat(1, 6));

    std::mt19937 rng(99);
    for (int n = 1; n <= 4; ++n) {
        PartitionMap<Rational> a = random_values(n, rng, false);
        PartitionMap<Rational> b = random_values(n, rng, false);
        const Rational s = rat(3, 7);
        PartitionMap<Rational> mixed;
        for (const IntPartition& lam : partitions_of_weight(n))
            mixed.emplace(lam, s * a.at(lam) + b.at(lam));
        ZetaExpr lhs = evaluate_genus(gamma, ChernVector(n, mixed));
        ZetaExpr rhs = evaluate_genus(gamma, ChernVector(n, a)) * s +
                       evaluate_genus(gamma, ChernVector(n, b));
        CHECK(lhs == rhs);
    }

    ChernVector big(11, {});
    CHECK_THROWS_AS(evaluate_genus(todd, big), capability_error);

    ChernVector c24(2, {{IntPartition{2}, rat(24)}});
    BigFloat v = evaluate_genus_numeric(builtin_genus("td_half", 2), c24, ZetaEvalContext{30, 100});
    BigFloat one = BigFloat::from_long(1, 128);
    BigFloat tol = BigFloat::from_string("1e-25", 128);
    CHECK((v - one).abs() < tol);
}

TEST_CASE("partition vectors validate their keys") {
    CHECK_THROWS_AS(ChernVector(2, {{IntPartition{3}, rat(1)}}), std::domain_error);
    CHECK_THROWS_AS(ChernVector(0, {}), std::domain_error);
    ChernVector c(3, {{IntPartition{2, 1}, rat(4)}});
    CHECK(c.value(IntPartition{3}) == rat(0));
    CHECK(c.value(IntPartition{2, 1}) == rat(4));
    CHECK_THROWS_AS(c.value(IntPartition{2}), std::domain_error);
}
