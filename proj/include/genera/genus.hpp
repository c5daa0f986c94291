#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "genera/formal_series.hpp"
#include "genera/int_partition.hpp"
#include "genera/zeta_expr.hpp"

namespace genera {

// Ceilings. Exceeding one is a capability_error, not silent truncation.
inline constexpr int kMaxTableWeight = 10;
inline constexpr int kMaxCoefficientLength = 12;
inline constexpr int kMaxBuiltinOrder = 16;
inline constexpr int kMaxOracleWeight = 8;

// A multiplicative genus, presented by its characteristic power series
// Q(x) = 1 + a_1 x + a_2 x^2 + ... truncated at a fixed order. Coefficients
// live in the zeta ring so rational and symbolic genera share one type.
// Derived data (the b_n sequence, per-partition coefficients) is cached;
// caches are shared across copies and write-once per key under a lock.
class GenusSpec {
public:
    GenusSpec(std::string name, Series<ZetaExpr> q);

    const std::string& name() const { return name_; }
    const Series<ZetaExpr>& q() const { return q_; }
    int order() const { return q_.order(); }

    // b_n from the cached sequence; 1 <= n <= order().
    const ZetaExpr& b(int n) const;

    bool lookup_coefficient(const IntPartition& lambda, ZetaExpr& out) const;
    void store_coefficient(const IntPartition& lambda, const ZetaExpr& value) const;

private:
    struct Cache;
    std::string name_;
    Series<ZetaExpr> q_;
    std::shared_ptr<Cache> cache_;
};

// b_0..b_n with b_0 = 1, extracted from
//   1 + sum_{n>=1} (-1)^n b_n x^n = 1 - x (d/dx) log Q(x);
// returned index-aligned, out[k] = b_k.
std::vector<ZetaExpr> b_sequence(const GenusSpec& g, int n);

// Coefficient standing in front of the Chern monomial c_lambda = prod c_{l_i}
// (the elementary symmetric monomial e_lambda in the roots):
//   b_lambda = (1/prod m_i(lambda)!) sum_{pi in Pi_l} (-1)^{l - l(pi)}
//              prod_blocks (|B| - 1)! b_{sum of lambda over B}.
ZetaExpr coefficient(const GenusSpec& g, const IntPartition& lambda);

// All coefficients in weight n, keyed by partition. n <= 10.
PartitionMap<ZetaExpr> coefficient_table(const GenusSpec& g, int n);

// Independent cross-check: expands prod_i Q(x_i) in n variables, reads off
// the weight-n monomial symmetric coefficients, and resolves the elementary
// symmetric decomposition by a direct linear solve. Shares no code with the
// partition-lattice path. n <= 8.
PartitionMap<ZetaExpr> expansion_oracle(const GenusSpec& g, int n);

// Built-in genera: "todd" Q = x/(1 - e^{-x}), "td_half" its square root,
// "gamma" Q = 1/Gamma(1 + x) = exp(gamma x - sum_{i>=2} (zeta(i)/i)(-x)^i).
// Order n <= 16.
GenusSpec builtin_genus(const std::string& name, int n);

// Closed forms, all exact in the zeta ring with explicit pi powers.

// Square-root Todd genus at a doubled partition 2*lambda (every part even):
//   b_{2 lambda} = (-1)^{|lambda| - l(lambda)}
//                  / ((2 pi)^{2|lambda|} prod m_i(lambda)!) * zeta*_S(2 lambda).
ZetaExpr closed_form_td_half(const IntPartition& doubled);

// Todd genus at lambda with m_1(lambda) = 0 and |lambda| even:
//   (-1)^{l(lambda) - |lambda|/2} / ((2 pi)^{|lambda|} prod m_i(lambda)!)
//   * sum over set partitions pi of the parts with every block sum even of
//     2^{l(pi)} prod_blocks (|B| - 1)! zeta(block sum).
ZetaExpr closed_form_todd_even(const IntPartition& lambda);

// Same shape for the square-root Todd genus, without the 2^{l(pi)} factor.
// Requires m_1(lambda) = 0; returns exact zero when |lambda| is odd.
ZetaExpr closed_form_td_half_even(const IntPartition& lambda);

// Gamma genus: b_lambda = zeta_S(lambda) / prod m_i(lambda)!.
ZetaExpr closed_form_gamma(const IntPartition& lambda);

}  // namespace genera
