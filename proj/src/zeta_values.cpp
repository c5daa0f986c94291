#include "genera/zeta_values.hpp"

#include <stdexcept>

#include "genera/errors.hpp"
#include "genera/set_partition.hpp"

namespace genera {

ZetaExpr zeta_even_reduce(int two_n) {
    if (two_n <= 0 || two_n % 2 != 0)
        throw std::domain_error("even-zeta reduction expects an even positive argument");
    return ZetaExpr::zeta(two_n).reduce_even();
}

namespace {

ZetaExpr symmetrized_sum(const std::vector<int>& t, bool star) {
    int r = static_cast<int>(t.size());
    if (r == 0) throw std::domain_error("empty exponent sequence");
    if (r > kMaxZetaDepth)
        throw capability_error("depth " + std::to_string(r) + " exceeds the ceiling " +
                               std::to_string(kMaxZetaDepth));
    for (int ti : t) {
        if (ti < 1) throw std::domain_error("exponents must be >= 1");
        if (star && ti < 2) throw std::domain_error("star exponents must be >= 2 (series diverges)");
    }
    ZetaExpr out;
    for_each_set_partition(r, [&](const SetPartition& pi) {
        Rational coef(1);
        Monomial mono;
        for (const auto& block : pi.blocks()) {
            int sum = 0;
            for (int j : block) sum += t[static_cast<std::size_t>(j - 1)];
            coef *= Rational(factorial(block.size() - 1));
            int sym = sum == 1 ? zsym::gamma : zsym::zeta(sum);
            auto [it, fresh] = mono.emplace(sym, 1);
            if (!fresh) ++it->second;
        }
        if (!star && (r - pi.length()) % 2 != 0) coef = -coef;
        out = out + ZetaExpr::term(mono, coef);
    });
    return out;
}

} // namespace

ZetaExpr zeta_sym(const std::vector<int>& t) { return symmetrized_sum(t, false); }

ZetaExpr zeta_star_sym(const std::vector<int>& t) { return symmetrized_sum(t, true); }

} // namespace genera
