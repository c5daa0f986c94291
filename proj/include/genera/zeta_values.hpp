#pragma once

#include <vector>

#include "genera/zeta_expr.hpp"

namespace genera {

inline constexpr int kMaxZetaDepth = 10;

// zeta(2n) as a rational multiple of pi^{2n}.
ZetaExpr zeta_even_reduce(int two_n);

// Symmetrized MZV: sum over set partitions of the index set,
//   sum_{pi in Pi_r} (-1)^{r - l(pi)} prod_i (|pi_i| - 1)! zeta(t_{pi_i}),
// with a block sum of 1 (necessarily a singleton t_j = 1) rendered as gamma.
// Requires 1 <= r <= 10 and every t_i >= 1.
ZetaExpr zeta_sym(const std::vector<int>& t);

// Star variant: the same sum with all signs positive. Requires every
// t_i >= 2, so no gamma can appear.
ZetaExpr zeta_star_sym(const std::vector<int>& t);

} // namespace genera
