#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "genera/bernoulli.hpp"
#include "genera/errors.hpp"
#include "genera/zeta_expr.hpp"
#include "genera/zeta_numeric.hpp"
#include "genera/zeta_values.hpp"

using namespace genera;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(6) == rat(1, 42));
    CHECK(bernoulli(8) == rat(-1, 30));
    CHECK(bernoulli(12) == rat(-691, 2730));
    for (int n = 1; n <= 15; ++n) {
        Rational b = bernoulli(2 * n);
        CHECK((n % 2 == 1 ? b > 0 : b < 0));
    }
    CHECK_THROWS_AS(bernoulli(3), std::domain_error);
    CHECK_THROWS_AS(bernoulli(0), std::domain_error);
    CHECK_THROWS_AS(bernoulli(-2), std::domain_error);
}

TEST_CASE("zeta expression algebra") {
    ZetaExpr two(2);
    CHECK(two.is_rational());
    CHECK(two.rational_value() == 2);
    CHECK(ZetaExpr(0).is_zero());

    ZetaExpr z2 = ZetaExpr::zeta(2);
    ZetaExpr sum = z2 + z2;
    CHECK(sum == z2 * Rational(2));
    CHECK((sum - z2 - z2).is_zero());
    CHECK_FALSE(z2.is_rational());
    CHECK_THROWS_AS(z2.rational_value(), std::domain_error);

    CHECK(z2.pow(2) == z2 * z2);
    CHECK(z2.pow(0) == ZetaExpr(1));
    CHECK((ZetaExpr::gamma() * ZetaExpr::zeta(3)).to_string() == "gamma*zeta(3)");
    CHECK(ZetaExpr(0).to_string() == "0/1");
    CHECK((z2 * Rational(-2)).to_string() == "-2/1*zeta(2)");
    CHECK_THROWS_AS(ZetaExpr::zeta(1), std::domain_error);
    CHECK_THROWS_AS(ZetaExpr::symbol(zsym::zeta(3), -1), std::domain_error);

    // Laurent pi powers cancel through multiplication.
    ZetaExpr cancel = ZetaExpr::pi(-4) * ZetaExpr::pi(4);
    CHECK(cancel == ZetaExpr(1));

    CHECK(symbol_from_name("zeta12") == 12);
    CHECK(symbol_from_name("pi") == zsym::pi);
    CHECK(symbol_from_name("gamma") == zsym::gamma);
    CHECK_THROWS_AS(symbol_from_name("zeta1"), std::domain_error);
    CHECK_THROWS_AS(symbol_from_name("zeta03"), std::domain_error);
    CHECK_THROWS_AS(symbol_from_name("tau"), std::domain_error);
}

TEST_CASE("even zeta reduction") {
    CHECK(zeta_even_reduce(2) == ZetaExpr::pi(2) * rat(1, 6));
    CHECK(zeta_even_reduce(4) == ZetaExpr::pi(4) * rat(1, 90));
    CHECK(zeta_even_reduce(6) == ZetaExpr::pi(6) * rat(1, 945));
    CHECK(zeta_even_reduce(8) == ZetaExpr::pi(8) * rat(1, 9450));
    for (int n = 1; n <= 15; ++n) {
        ZetaExpr reduced = zeta_even_reduce(2 * n);
        REQUIRE(reduced.terms().size() == 1);
        const auto& [mono, coef] = *reduced.terms().begin();
        CHECK(mono == Monomial{{zsym::pi, 2 * n}});
        CHECK(coef > 0);
    }
    CHECK_THROWS_AS(zeta_even_reduce(3), std::domain_error);
    CHECK_THROWS_AS(zeta_even_reduce(0), std::domain_error);

    // zeta(2)^2 reduces to pi^4/36; mixed with pi^-4 it collapses to 1/36.
    ZetaExpr z2sq = ZetaExpr::zeta(2).pow(2);
    CHECK(z2sq.reduce_even() == ZetaExpr::pi(4) * rat(1, 36));
    CHECK((z2sq * ZetaExpr::pi(-4)).reduce_even() == ZetaExpr(rat(1, 36)));
    // Odd zetas and gamma pass through untouched.
    ZetaExpr odd = ZetaExpr::gamma() * ZetaExpr::zeta(3);
    CHECK(odd.reduce_even() == odd);
}

TEST_CASE("symmetrized zeta values") {
    CHECK(zeta_sym({3}) == ZetaExpr::zeta(3));
    CHECK(zeta_sym({1}) == ZetaExpr::gamma());
    CHECK(zeta_sym({2, 2}) == ZetaExpr::zeta(2).pow(2) - ZetaExpr::zeta(4));
    CHECK(zeta_sym({3, 2}) == ZetaExpr::zeta(2) * ZetaExpr::zeta(3) - ZetaExpr::zeta(5));
    CHECK(zeta_sym({2, 1}) == ZetaExpr::gamma() * ZetaExpr::zeta(2) - ZetaExpr::zeta(3));

    CHECK(zeta_star_sym({4}) == ZetaExpr::zeta(4));
    CHECK(zeta_star_sym({2, 2}) == ZetaExpr::zeta(2).pow(2) + ZetaExpr::zeta(4));
    CHECK(zeta_star_sym({2, 2, 2}) ==
          ZetaExpr::zeta(2).pow(3) + ZetaExpr::zeta(2) * ZetaExpr::zeta(4) * Rational(3) +
              ZetaExpr::zeta(6) * Rational(2));

    CHECK(zeta_star_sym({2, 2}) - zeta_sym({2, 2}) == ZetaExpr::zeta(4) * Rational(2));

    CHECK(zeta_sym({2, 2}).to_string() == "zeta(2)^2 - zeta(4)");
    CHECK(zeta_star_sym({2, 2}).to_string() == "zeta(2)^2 + zeta(4)");

    CHECK_THROWS_AS(zeta_sym({}), std::domain_error);
    CHECK_THROWS_AS(zeta_sym({2, 0}), std::domain_error);
    CHECK_THROWS_AS(zeta_star_sym({2, 1}), std::domain_error);
    CHECK_THROWS_AS(zeta_sym(std::vector<int>(11, 2)), capability_error);
}

TEST_CASE("symmetrized values are permutation invariant") {
    std::vector<std::vector<int>> cases = {{2, 3}, {2, 3, 4}, {1, 2, 3}, {2, 2, 3, 4}};
    for (auto t : cases) {
        std::sort(t.begin(), t.end());
        ZetaExpr base = zeta_sym(t);
        auto perm = t;
        while (std::next_permutation(perm.begin(), perm.end())) CHECK(zeta_sym(perm) == base);
        if (std::all_of(t.begin(), t.end(), [](int x) { return x >= 2; })) {
            ZetaExpr sbase = zeta_star_sym(t);
            perm = t;
            while (std::next_permutation(perm.begin(), perm.end()))
                CHECK(zeta_star_sym(perm) == sbase);
        }
    }
}

namespace {

double eval_digits(const ZetaExpr& x, int digits = 40) {
    return eval_numeric(x, ZetaEvalContext{digits, 10000}).to_double();
}

} // namespace

TEST_CASE("numeric evaluation against embedded constants") {
    ZetaEvalContext ctx{40, 10000};
    CHECK(eval_numeric(ZetaExpr(1), ctx).to_double() == 1.0);

    // zeta(2) -> pi^2/6 through the reduction path.
    BigFloat z2 = eval_numeric(ZetaExpr::zeta(2), ctx);
    BigFloat ref = BigFloat::from_string("1.6449340668482264364724151666460251892189499012068", 256);
    CHECK((z2 - ref).abs() < BigFloat::from_string("1e-38", 64));

    BigFloat g = eval_numeric(ZetaExpr::gamma(), ctx);
    BigFloat gref = BigFloat::from_string("0.5772156649015328606065120900824024310421593359399", 256);
    CHECK((g - gref).abs() < BigFloat::from_string("1e-38", 64));

    // Table path vs. the independent Euler-Maclaurin path.
    BigFloat z3_table = eval_numeric(ZetaExpr::zeta(3), ctx);
    BigFloat z3_em = euler_maclaurin_zeta(3, 50);
    CHECK((z3_table - z3_em).abs() < BigFloat::from_string("1e-45", 64));
    BigFloat z2_em = euler_maclaurin_zeta(2, 50);
    CHECK((z2_em - ref).abs() < BigFloat::from_string("1e-45", 64));

    // Beyond the table: zeta(11) by summation, checked against a direct
    // partial sum whose tail is below 1e-20.
    BigFloat z11 = eval_numeric(ZetaExpr::zeta(11), ctx);
    BigFloat direct(256);
    for (long n = 1; n <= 100; ++n) direct += BigFloat::from_long(n, 256).pow_si(-11);
    CHECK((z11 - direct).abs() < BigFloat::from_string("1e-20", 64));

    CHECK_THROWS_AS(eval_numeric(ZetaExpr::pi(), ZetaEvalContext{60, 10000}), capability_error);
    CHECK(eval_numeric(ZetaExpr(rat(1, 3)), ZetaEvalContext{60, 10000}).to_double() ==
          doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK_THROWS_AS(eval_numeric(ZetaExpr(1), ZetaEvalContext{0, 10000}), std::domain_error);
    CHECK_THROWS_AS(eval_numeric(ZetaExpr(1), ZetaEvalContext{30, 5}), std::domain_error);
    CHECK_THROWS_AS(euler_maclaurin_zeta(1, 30), std::domain_error);
    CHECK_THROWS_AS(euler_maclaurin_zeta(3, 61), capability_error);
}

TEST_CASE("truncated multiple zeta sums") {
    CHECK(mzv_truncated({2.0}, 10000, false).to_double() ==
          doctest::Approx(1.6449340668482264).epsilon(1e-3));
    CHECK(mzv_truncated({2.0, 2.0}, 10000, false).to_double() ==
          doctest::Approx(0.811742425283).epsilon(1e-3));
    CHECK(mzv_truncated({2.0, 2.0}, 10000, true).to_double() ==
          doctest::Approx(1.894065658937).epsilon(1e-3));

    // Monotone in N.
    CHECK(mzv_truncated({2.0, 3.0}, 100, false) < mzv_truncated({2.0, 3.0}, 200, false));

    // Small-N cross-check against a brute-force double loop.
    double brute = 0;
    for (int m = 1; m <= 20; ++m)
        for (int n = 1; n < m; ++n) brute += 1.0 / (m * m * n * n * n);
    CHECK(mzv_truncated({2.0, 3.0}, 20, false).to_double() == doctest::Approx(brute).epsilon(1e-12));

    // Non-integer exponents exercise the general pow path.
    double ref15 = 0;
    for (int n = 1; n <= 50; ++n) ref15 += std::pow(n, -1.5);
    CHECK(mzv_truncated({1.5}, 50, false).to_double() == doctest::Approx(ref15).epsilon(1e-12));

    CHECK_THROWS_AS(mzv_truncated({1.0, 2.0}, 100, false), std::domain_error);
    CHECK_THROWS_AS(mzv_truncated({}, 100, false), std::domain_error);
    CHECK_THROWS_AS(mzv_truncated({2.0, 2.0}, 1, false), std::domain_error);
}

TEST_CASE("star/non-star truncated relation at depth two") {
    // zeta*_N(a,b) = zeta_N(a,b) + zeta_N(a+b) holds exactly term by term.
    BigFloat tol = BigFloat::from_string("1e-25", 64);
    for (int a = 2; a <= 4; ++a) {
        for (int b = 2; b <= 4; ++b) {
            std::vector<double> t{double(a), double(b)};
            BigFloat lhs = mzv_truncated(t, 2000, true);
            BigFloat rhs = mzv_truncated(t, 2000, false) +
                           mzv_truncated({double(a + b)}, 2000, false);
            CHECK((lhs - rhs).abs() < tol);
        }
    }
}

TEST_CASE("numeric bridge between symbolic and truncated sums") {
    // eval(zeta_sym(t)) ~ sum over all index permutations of the truncated
    // MZV, within 10/N^{min t_i - 1} + 10^-precision.
    const long N = 10000;
    std::vector<std::vector<int>> cases = {{2}, {3}, {2, 2}, {2, 3}, {3, 4}, {2, 2, 2}, {2, 3, 4}};
    for (const auto& t : cases) {
        BigFloat symbolic = eval_numeric(zeta_sym(t), ZetaEvalContext{30, N});
        std::vector<int> idx(t.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end());
        BigFloat total(160);
        do {
            std::vector<double> perm(t.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                perm[i] = static_cast<double>(t[static_cast<std::size_t>(idx[i])]);
            total += mzv_truncated(perm, N, false);
        } while (std::next_permutation(idx.begin(), idx.end()));
        int tmin = *std::min_element(t.begin(), t.end());
        double bound = 10.0 / std::pow(double(N), tmin - 1) + 1e-30;
        CHECK((symbolic - total).abs().to_double() <= bound);
    }
}
