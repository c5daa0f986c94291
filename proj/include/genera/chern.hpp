#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "genera/big_float.hpp"
#include "genera/genus.hpp"
#include "genera/int_partition.hpp"
#include "genera/rational.hpp"
#include "genera/set_partition.hpp"
#include "genera/zeta_numeric.hpp"

namespace genera {

// Exact rational vector indexed by partitions of a fixed weight n (the
// complex dimension). Missing keys read as 0. ChernVector holds Chern
// numbers C_lambda, ChVector holds Chern character numbers Ch_lambda; the
// tag keeps the two from being mixed up in conversions.
template <class Tag>
class PartitionVector {
public:
    PartitionVector(int n, PartitionMap<Rational> values)
        : n_(n), values_(std::move(values)) {
        if (n_ < 1) throw std::domain_error("dimension must be positive");
        for (const auto& [lam, v] : values_)
            if (lam.weight() != n_)
                throw std::domain_error("entry " + lam.to_string() + " has weight " +
                                        std::to_string(lam.weight()) + ", expected " +
                                        std::to_string(n_));
    }

    int dim() const { return n_; }
    const PartitionMap<Rational>& entries() const { return values_; }

    Rational value(const IntPartition& lambda) const {
        if (lambda.weight() != n_)
            throw std::domain_error("key " + lambda.to_string() + " has weight " +
                                    std::to_string(lambda.weight()) + ", expected " +
                                    std::to_string(n_));
        auto it = values_.find(lambda);
        return it == values_.end() ? Rational(0) : it->second;
    }

private:
    int n_;
    PartitionMap<Rational> values_;
};

using ChernVector = PartitionVector<struct chern_number_tag>;
using ChVector = PartitionVector<struct chern_character_tag>;

// Ch_lambda = (1/lambda!) sum_mu T_{lambda mu} C_mu with T the exact
// power-sum -> elementary transition at weight n. Complete table returned.
ChVector chern_to_ch(const ChernVector& c);

// Exact inverse: C_mu = sum_lambda S_{mu lambda} lambda! Ch_lambda with S
// the elementary -> power-sum transition.
ChernVector ch_to_chern(const ChVector& h);

// Hyper-Kahler-restricted conversions over the interval [0hat, pi] of the
// set-partition lattice, for pi of even type 2nu = type(pi):
//   C_{2nu}  = (1/(2nu)!) sum_{rho <= pi, type(rho) all even}
//              mu(0hat, rho) type(rho)! Ch_{type(rho)}
//   Ch_{2nu} = (1/((2nu)! mu(0hat, pi))) sum_{rho <= pi, type(rho) all even}
//              mu(rho, pi) type(rho)! C_{type(rho)}
// The spelled-out sums agree with the unrestricted conversions on vectors
// supported on even partitions. Odd part in type(pi) -> domain error.
Rational hk_ch_to_chern(const ChVector& h, const SetPartition& pi);
Rational hk_chern_to_ch(const ChernVector& c, const SetPartition& pi);

// Expands exp(-sum_{2k <= n} B_{2k}/(4k) ch_{2k}) with ch_{2k} = p_{2k}/(2k)!
// through weight n, converts to the elementary basis, sets e_1 = 0, and
// compares against the square-root Todd coefficients at every partition
// without a part equal to 1. n <= 8.
bool td_half_via_ch_check(int n);

// phi(M) = sum_lambda coefficient(g, lambda) C_lambda. With reduce, even
// zetas are rewritten as pi powers.
ZetaExpr evaluate_genus(const GenusSpec& g, const ChernVector& c, bool reduce = false);

// Numeric value of the same sum.
BigFloat evaluate_genus_numeric(const GenusSpec& g, const ChernVector& c,
                                const ZetaEvalContext& ctx);

} // namespace genera
