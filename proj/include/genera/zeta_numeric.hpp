#pragma once

#include <utility>
#include <vector>

#include "genera/big_float.hpp"
#include "genera/zeta_expr.hpp"

namespace genera {

// Embedded 50-decimal constants for gamma, pi, and the odd zetas through
// zeta(9). Generated ahead of the build by scripts/gen_constants.py, an
// independent Euler-Maclaurin/Machin oracle cross-checked there to 1e-70.
inline constexpr int kConstantDigits = 50;
const std::vector<std::pair<std::string, std::string>>& constant_table();

struct ZetaEvalContext {
    int precision = 30;      // target decimal digits, >= 1
    long truncation = 10000; // index bound N for truncated-sum oracles, >= 10
};

// zeta(s) for integer s >= 2 by Euler-Maclaurin summation:
//   sum_{n<=M} n^-s + M^{1-s}/(s-1) - M^-s/2
//   + sum_{k<=K} B_{2k}/(2k)! (s)(s+1)...(s+2k-2) M^{-s-2k+1}
// with M = 40, K = 60, good to far below 10^-60 for every s >= 2; digits
// beyond 60 raise a capability error.
BigFloat euler_maclaurin_zeta(int s, int digits);

// Numeric value of an expression, absolute error below 10^-ctx.precision.
// Even zetas are reduced to pi powers first; gamma, pi, zeta(3..9) come from
// the constants table (each good to 5e-51), higher odd zetas from
// euler_maclaurin_zeta. Rounding runs at ctx.precision + 25 digits, so the
// table/summation error dominates and stays under budget. Symbolic input
// with precision beyond the table raises a capability error.
BigFloat eval_numeric(const ZetaExpr& x, const ZetaEvalContext& ctx);

// Partial sum of the multiple zeta function over indices n_1 > ... > n_r
// (star: n_1 >= ... >= n_r) bounded by N, via suffix prefix-sums in
// O(N r) operations.
BigFloat mzv_truncated(const std::vector<double>& t, long N, bool star, int digits = 30);

} // namespace genera
