#include "genera/genus.hpp"

#include <stdexcept>
#include <utility>

#include "genera/errors.hpp"
#include "genera/set_partition.hpp"
#include "genera/sym_poly.hpp"
#include "genera/zeta_values.hpp"

namespace genera {

struct GenusSpec::Cache {
    std::mutex mu;
    std::vector<ZetaExpr> b; // b[k] = b_k once filled; b[0] = 1
    PartitionMap<ZetaExpr> coeffs;
};

GenusSpec::GenusSpec(std::string name, Series<ZetaExpr> q)
    : name_(std::move(name)), q_(std::move(q)), cache_(std::make_shared<Cache>()) {
    if (!(q_[0] == ZetaExpr(1)))
        throw std::domain_error("genus series must have constant term 1");
}

const ZetaExpr& GenusSpec::b(int n) const {
    if (n < 1 || n > order())
        throw std::domain_error("b_" + std::to_string(n) + " needs series order >= " +
                                std::to_string(n) + ", have " + std::to_string(order()));
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->b.empty()) {
        const Series<ZetaExpr> lg = q_.log();
        cache_->b.assign(static_cast<std::size_t>(order()) + 1, ZetaExpr(0));
        cache_->b[0] = ZetaExpr(1);
        // 1 + sum (-1)^n b_n x^n = 1 - x (log Q)', so b_n = (-1)^{n+1} n [x^n] log Q.
        for (int k = 1; k <= order(); ++k)
            cache_->b[static_cast<std::size_t>(k)] = lg[k] * Rational(k % 2 == 1 ? k : -k);
    }
    return cache_->b[static_cast<std::size_t>(n)];
}

bool GenusSpec::lookup_coefficient(const IntPartition& lambda, ZetaExpr& out) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->coeffs.find(lambda);
    if (it == cache_->coeffs.end()) return false;
    out = it->second;
    return true;
}

void GenusSpec::store_coefficient(const IntPartition& lambda, const ZetaExpr& value) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->coeffs.emplace(lambda, value);
}

std::vector<ZetaExpr> b_sequence(const GenusSpec& g, int n) {
    if (n < 0) throw std::domain_error("b-sequence length must be non-negative");
    if (n > g.order())
        throw std::domain_error("series truncated at order " + std::to_string(g.order()) +
                                ", cannot produce b_" + std::to_string(n));
    std::vector<ZetaExpr> out(static_cast<std::size_t>(n) + 1, ZetaExpr(1));
    for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k)] = g.b(k);
    return out;
}

ZetaExpr coefficient(const GenusSpec& g, const IntPartition& lambda) {
    const int l = lambda.length();
    if (l > kMaxCoefficientLength)
        throw capability_error("partition length " + std::to_string(l) +
                               " exceeds the lattice-sum ceiling " +
                               std::to_string(kMaxCoefficientLength));
    if (lambda.weight() > g.order())
        throw std::domain_error("series truncated at order " + std::to_string(g.order()) +
                                ", cannot reach weight " + std::to_string(lambda.weight()));
    if (lambda.empty()) return ZetaExpr(1);
    ZetaExpr cached;
    if (g.lookup_coefficient(lambda, cached)) return cached;

    ZetaExpr sum;
    for_each_set_partition(l, [&](const SetPartition& pi) {
        ZetaExpr term(Rational((l - pi.length()) % 2 == 0 ? 1 : -1));
        const std::vector<int> sums = block_sums(pi, lambda.parts());
        for (std::size_t i = 0; i < sums.size(); ++i) {
            term = term * g.b(sums[i]);
            term = term * Rational(factorial(pi.blocks()[i].size() - 1));
        }
        sum = sum + term;
    });
    const ZetaExpr result = sum * (Rational(1) / Rational(lambda.multiplicity_factorial()));
    g.store_coefficient(lambda, result);
    return result;
}

PartitionMap<ZetaExpr> coefficient_table(const GenusSpec& g, int n) {
    if (n < 1) throw std::domain_error("table weight must be positive");
    if (n > kMaxTableWeight)
        throw capability_error("table weight " + std::to_string(n) + " exceeds the ceiling " +
                               std::to_string(kMaxTableWeight));
    if (n > g.order())
        throw std::domain_error("series truncated at order " + std::to_string(g.order()) +
                                ", cannot tabulate weight " + std::to_string(n));
    PartitionMap<ZetaExpr> out;
    for (const IntPartition& lam : partitions_of_weight(n)) out.emplace(lam, coefficient(g, lam));
    return out;
}

PartitionMap<ZetaExpr> expansion_oracle(const GenusSpec& g, int n) {
    if (n < 1) throw std::domain_error("oracle weight must be positive");
    if (n > kMaxOracleWeight)
        throw capability_error("oracle weight " + std::to_string(n) + " exceeds the ceiling " +
                               std::to_string(kMaxOracleWeight));
    if (n > g.order())
        throw std::domain_error("series truncated at order " + std::to_string(g.order()) +
                                ", cannot expand weight " + std::to_string(n));

    // prod_{i=1..n} Q(x_i), truncated at total degree n.
    MultiPoly<ZetaExpr> prod = MultiPoly<ZetaExpr>::constant(n, ZetaExpr(1));
    for (int i = 0; i < n; ++i) {
        MultiPoly<ZetaExpr> factor(n);
        for (int k = 0; k <= n; ++k) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = k;
            factor.add_term(std::move(e), g.q()[k]);
        }
        prod = prod.times_truncated(factor, n);
    }
    const MultiPoly<ZetaExpr> hn = prod.homogeneous_part(n);

    const std::vector<IntPartition> lams = partitions_of_weight(n);
    const int m = static_cast<int>(lams.size());
    auto rep = [n](const IntPartition& lam) {
        std::vector<int> e(lam.parts().begin(), lam.parts().end());
        e.resize(static_cast<std::size_t>(n), 0);
        return e;
    };

    // Monomial-symmetric coefficients of the weight-n part: each exponent
    // multiset belongs to exactly one m_lambda, so read the representative.
    std::vector<ZetaExpr> rhs(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        auto it = hn.terms().find(rep(lams[static_cast<std::size_t>(r)]));
        if (it != hn.terms().end()) rhs[static_cast<std::size_t>(r)] = it->second;
    }

    // mat[r][c] = coefficient of m_{lams[r]} in e_{lams[c]} expanded in n
    // variables, obtained combinatorially; solve mat * d = rhs exactly.
    std::vector<std::vector<Rational>> mat(
        static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    for (int c = 0; c < m; ++c) {
        const MultiPoly<Rational> ex =
            expand(SymPoly<Rational>::basis_element(Basis::E, lams[static_cast<std::size_t>(c)]), n);
        for (int r = 0; r < m; ++r) {
            auto it = ex.terms().find(rep(lams[static_cast<std::size_t>(r)]));
            if (it != ex.terms().end())
                mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = it->second;
        }
    }
    for (int k = 0; k < m; ++k) {
        int piv = -1;
        for (int r = k; r < m && piv < 0; ++r)
            if (mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) piv = r;
        if (piv < 0) throw std::logic_error("elementary transition system is singular");
        std::swap(mat[static_cast<std::size_t>(k)], mat[static_cast<std::size_t>(piv)]);
        std::swap(rhs[static_cast<std::size_t>(k)], rhs[static_cast<std::size_t>(piv)]);
        for (int r = k + 1; r < m; ++r) {
            Rational& lead = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            if (lead == 0) continue;
            const Rational f = lead / mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            for (int c = k; c < m; ++c)
                mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
            rhs[static_cast<std::size_t>(r)] =
                rhs[static_cast<std::size_t>(r)] - rhs[static_cast<std::size_t>(k)] * f;
        }
    }
    std::vector<ZetaExpr> d(static_cast<std::size_t>(m));
    for (int k = m - 1; k >= 0; --k) {
        ZetaExpr acc = rhs[static_cast<std::size_t>(k)];
        for (int c = k + 1; c < m; ++c)
            acc = acc - d[static_cast<std::size_t>(c)] *
                            mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
        d[static_cast<std::size_t>(k)] =
            acc * (Rational(1) / mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
    }

    PartitionMap<ZetaExpr> out;
    for (int c = 0; c < m; ++c)
        out.emplace(lams[static_cast<std::size_t>(c)], d[static_cast<std::size_t>(c)]);
    return out;
}

GenusSpec builtin_genus(const std::string& name, int n) {
    if (n < 1) throw std::domain_error("genus order must be positive");
    if (n > kMaxBuiltinOrder)
        throw capability_error("genus order " + std::to_string(n) + " exceeds the ceiling " +
                               std::to_string(kMaxBuiltinOrder));
    if (name == "todd") {
        // Q = x / (1 - e^{-x}); the divisor is sum_k (-1)^k x^k / (k+1)!.
        Series<ZetaExpr> den(n);
        for (int k = 0; k <= n; ++k) {
            Rational c(k % 2 == 0 ? 1 : -1);
            c /= Rational(factorial(static_cast<unsigned long>(k) + 1));
            den[k] = ZetaExpr(c);
        }
        return GenusSpec("todd", Series<ZetaExpr>::one(n).divided_by(den));
    }
    if (name == "td_half") return GenusSpec("td_half", builtin_genus("todd", n).q().sqrt());
    if (name == "gamma") {
        // Q = 1/Gamma(1+x); log Q = gamma x - sum_{i>=2} (zeta(i)/i)(-x)^i.
        Series<ZetaExpr> lg(n);
        lg[1] = ZetaExpr::gamma();
        for (int i = 2; i <= n; ++i) lg[i] = ZetaExpr::zeta(i) * rat(i % 2 == 0 ? -1 : 1, i);
        return GenusSpec("gamma", lg.exp());
    }
    throw std::domain_error("unknown builtin genus: " + name);
}

namespace {

// sum over set partitions of the parts of lambda with every block sum even of
//   weight(pi) * prod_blocks (|B| - 1)! zeta(block sum),
// weight(pi) = 2^{l(pi)} for the Todd genus and 1 for its square root.
ZetaExpr even_block_sum(const IntPartition& lambda, bool two_to_blocks) {
    const int l = lambda.length();
    if (l > kMaxCoefficientLength)
        throw capability_error("partition length " + std::to_string(l) +
                               " exceeds the lattice-sum ceiling " +
                               std::to_string(kMaxCoefficientLength));
    ZetaExpr sum;
    for_each_set_partition(l, [&](const SetPartition& pi) {
        const std::vector<int> sums = block_sums(pi, lambda.parts());
        for (int s : sums)
            if (s % 2 != 0) return;
        ZetaExpr term(two_to_blocks ? pow_rational(Rational(2),
                                                   static_cast<unsigned long>(pi.length()))
                                    : Rational(1));
        for (std::size_t i = 0; i < sums.size(); ++i) {
            term = term * ZetaExpr::zeta(sums[i]);
            term = term * Rational(factorial(pi.blocks()[i].size() - 1));
        }
        sum = sum + term;
    });
    return sum;
}

// (-1)^{l(lambda) - |lambda|/2} / ((2 pi)^{|lambda|} prod m_i(lambda)!) * sum
ZetaExpr even_prefactor(const IntPartition& lambda, const ZetaExpr& sum) {
    const int w = lambda.weight();
    const int l = lambda.length();
    Rational scale((l - w / 2) % 2 == 0 ? 1 : -1);
    scale /= pow_rational(Rational(2), static_cast<unsigned long>(w)) *
             Rational(lambda.multiplicity_factorial());
    return sum * ZetaExpr::pi(-w) * scale;
}

} // namespace

ZetaExpr closed_form_td_half(const IntPartition& doubled) {
    if (doubled.empty()) return ZetaExpr(1);
    std::vector<int> half;
    for (int part : doubled.parts()) {
        if (part % 2 != 0)
            throw std::domain_error("closed form needs a doubled partition (every part even)");
        half.push_back(part / 2);
    }
    const IntPartition lam(half);
    const int w = lam.weight();
    Rational scale((w - lam.length()) % 2 == 0 ? 1 : -1);
    scale /= pow_rational(Rational(2), static_cast<unsigned long>(2 * w)) *
             Rational(lam.multiplicity_factorial());
    return zeta_star_sym(doubled.parts()) * ZetaExpr::pi(-2 * w) * scale;
}

ZetaExpr closed_form_todd_even(const IntPartition& lambda) {
    if (lambda.multiplicity(1) != 0)
        throw std::domain_error("closed form requires m_1(lambda) = 0");
    if (lambda.weight() % 2 != 0)
        throw std::domain_error("closed form requires |lambda| even");
    if (lambda.empty()) return ZetaExpr(1);
    return even_prefactor(lambda, even_block_sum(lambda, true));
}

ZetaExpr closed_form_td_half_even(const IntPartition& lambda) {
    if (lambda.multiplicity(1) != 0)
        throw std::domain_error("closed form requires m_1(lambda) = 0");
    if (lambda.weight() % 2 != 0) return ZetaExpr(0);
    if (lambda.empty()) return ZetaExpr(1);
    return even_prefactor(lambda, even_block_sum(lambda, false));
}

ZetaExpr closed_form_gamma(const IntPartition& lambda) {
    if (lambda.empty()) return ZetaExpr(1);
    return zeta_sym(lambda.parts()) * (Rational(1) / Rational(lambda.multiplicity_factorial()));
}

} // namespace genera
