#include "genera/zeta_numeric.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "genera/bernoulli.hpp"
#include "genera/errors.hpp"

namespace genera {

const std::vector<std::pair<std::string, std::string>>& constant_table() {
    // Values produced and cross-checked by scripts/gen_constants.py; rounded
    // to 50 decimal places.
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"gamma", "0.57721566490153286060651209008240243104215933593992"},
        {"pi", "3.14159265358979323846264338327950288419716939937511"},
        {"zeta3", "1.20205690315959428539973816151144999076498629234050"},
        {"zeta5", "1.03692775514336992633136548645703416805708091950191"},
        {"zeta7", "1.00834927738192282683979754984979675959986356056524"},
        {"zeta9", "1.00200839282608221441785276923241206048560585139489"},
    };
    return table;
}

namespace {

long bits_for_digits(int digits) { return static_cast<long>((digits + 4) * 3.33) + 16; }

BigFloat lookup_constant(const std::string& name, long bits) {
    for (const auto& [key, value] : constant_table())
        if (key == name) return BigFloat::from_string(value, bits);
    throw capability_error("no embedded constant for " + name);
}

} // namespace

BigFloat euler_maclaurin_zeta(int s, int digits) {
    if (s < 2) throw std::domain_error("Euler-Maclaurin zeta needs integer s >= 2");
    if (digits < 1) throw std::domain_error("precision must be >= 1 digit");
    if (digits > 60)
        throw capability_error("Euler-Maclaurin tail bound is calibrated to 60 digits");
    const long M = 40;
    const int K = 60;
    const long bits = bits_for_digits(digits + 30);
    BigFloat sum(bits);
    for (long n = 1; n <= M; ++n) sum += BigFloat::from_long(n, bits).pow_si(-s);
    BigFloat mf = BigFloat::from_long(M, bits);
    sum += mf.pow_si(1 - s) / BigFloat::from_long(s - 1, bits);
    sum += mf.pow_si(-s) / BigFloat::from_long(-2, bits);
    Rational rising(s); // (s)(s+1)...(s+2k-2), maintained incrementally
    for (int k = 1; k <= K; ++k) {
        Rational coef = bernoulli(2 * k) * rising /
                        Rational(factorial(static_cast<unsigned long>(2 * k)));
        sum += BigFloat::from_rational(coef, bits) * mf.pow_si(-s - 2 * k + 1);
        rising *= Rational(s + 2 * k - 1) * Rational(s + 2 * k);
    }
    return sum;
}

BigFloat eval_numeric(const ZetaExpr& x, const ZetaEvalContext& ctx) {
    if (ctx.precision < 1) throw std::domain_error("precision must be >= 1 digit");
    if (ctx.truncation < 10) throw std::domain_error("truncation bound must be >= 10");
    ZetaExpr reduced = x.reduce_even();
    const long bits = bits_for_digits(ctx.precision + 25);

    std::map<int, BigFloat> values;
    for (const auto& [mono, coef] : reduced.terms()) {
        for (const auto& [sym, e] : mono) {
            if (values.count(sym)) continue;
            if (ctx.precision > kConstantDigits)
                throw capability_error("precision " + std::to_string(ctx.precision) +
                                       " exceeds the " + std::to_string(kConstantDigits) +
                                       "-digit constants table");
            if (sym == zsym::gamma || sym == zsym::pi || (sym >= 3 && sym <= 9 && sym % 2 == 1)) {
                values.emplace(sym, lookup_constant(symbol_name(sym), bits));
            } else {
                values.emplace(sym, euler_maclaurin_zeta(sym, kConstantDigits));
            }
        }
    }

    BigFloat total(bits);
    for (const auto& [mono, coef] : reduced.terms()) {
        BigFloat term = BigFloat::from_rational(coef, bits);
        for (const auto& [sym, e] : mono) term = term * values.at(sym).pow_si(e);
        total += term;
    }
    return total;
}

BigFloat mzv_truncated(const std::vector<double>& t, long N, bool star, int digits) {
    const long r = static_cast<long>(t.size());
    if (r == 0) throw std::domain_error("empty exponent sequence");
    for (double ti : t)
        if (!(ti > 1.0)) throw std::domain_error("divergent exponent: every t_i must exceed 1");
    if (N < r) throw std::domain_error("truncation bound must be at least the depth");
    const long bits = bits_for_digits(digits);

    auto power = [&](long n, double ti) {
        BigFloat base = BigFloat::from_long(n, bits);
        double rounded = std::nearbyint(ti);
        if (rounded == ti && std::abs(ti) < 1e15) return base.pow_si(-static_cast<long>(rounded));
        return base.pow(BigFloat::from_double(-ti, bits));
    };

    // a[n] = S_j(n), the sum over admissible chains starting at n_j = n;
    // walk j from the innermost index outward keeping prefix sums.
    std::vector<BigFloat> a;
    a.reserve(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) a.push_back(BigFloat(bits));
    for (long n = 1; n <= N; ++n) a[static_cast<std::size_t>(n)] = power(n, t[static_cast<std::size_t>(r - 1)]);
    for (long j = r - 2; j >= 0; --j) {
        BigFloat prefix(bits);
        for (long n = 1; n <= N; ++n) {
            if (star) {
                prefix += a[static_cast<std::size_t>(n)];
                a[static_cast<std::size_t>(n)] = power(n, t[static_cast<std::size_t>(j)]) * prefix;
            } else {
                BigFloat next = power(n, t[static_cast<std::size_t>(j)]) * prefix;
                prefix += a[static_cast<std::size_t>(n)];
                a[static_cast<std::size_t>(n)] = next;
            }
        }
    }
    BigFloat total(bits);
    for (long n = 1; n <= N; ++n) total += a[static_cast<std::size_t>(n)];
    return total;
}

} // namespace genera
