#pragma once

#include <stdexcept>
#include <vector>

#include "genera/rational.hpp"
#include "genera/set_partition.hpp"

namespace genera {

// Finite table of weights x(a, n) for a in the ground set {1..r} and n
// ranging over a finite index set D. The coefficient ring R must be
// constructible from int and from Rational and support + and *.
template <class R>
class WeightSystem {
public:
    // table[a-1][j] = x(a, n_j), one row per ground-set element.
    explicit WeightSystem(std::vector<std::vector<R>> table) : table_(std::move(table)) {
        if (table_.empty()) throw std::domain_error("ground set must be nonempty");
        for (const auto& row : table_)
            if (row.size() != table_[0].size())
                throw std::domain_error("every ground-set element needs the same domain");
    }

    int ground_size() const { return static_cast<int>(table_.size()); }
    int domain_size() const { return static_cast<int>(table_[0].size()); }
    const R& value(int a, int j) const { return table_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(j)]; }

    // x(T, n_j) = prod_{a in T} x(a, n_j)
    R block_value(const std::vector<int>& block, int j) const {
        R out(1);
        for (int a : block) out = out * value(a, j);
        return out;
    }

private:
    std::vector<std::vector<R>> table_;
};

namespace detail {

template <class R>
void check_ground(const SetPartition& pi, const WeightSystem<R>& w) {
    if (pi.n() != w.ground_size())
        throw std::domain_error("partition ground set does not match the weight system");
}

// Sum over tuples (n_1..n_l) of pairwise distinct domain indices of
// prod_i x(blocks[i], n_i).
template <class R>
R m_over_blocks(const std::vector<std::vector<int>>& blocks, const WeightSystem<R>& w) {
    std::vector<char> used(static_cast<std::size_t>(w.domain_size()), 0);
    auto rec = [&](auto&& self, std::size_t i) -> R {
        if (i == blocks.size()) return R(1);
        R acc(0);
        for (int j = 0; j < w.domain_size(); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = 1;
            acc = acc + w.block_value(blocks[i], j) * self(self, i + 1);
            used[static_cast<std::size_t>(j)] = 0;
        }
        return acc;
    };
    return rec(rec, 0);
}

// Sum over injective assignments of a domain index to each element of the
// block of prod_a x(a, n_a).
template <class R>
R e_over_block(const std::vector<int>& block, const WeightSystem<R>& w) {
    std::vector<char> used(static_cast<std::size_t>(w.domain_size()), 0);
    auto rec = [&](auto&& self, std::size_t i) -> R {
        if (i == block.size()) return R(1);
        R acc(0);
        for (int j = 0; j < w.domain_size(); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = 1;
            acc = acc + w.value(block[i], j) * self(self, i + 1);
            used[static_cast<std::size_t>(j)] = 0;
        }
        return acc;
    };
    return rec(rec, 0);
}

} // namespace detail

// p(pi) = prod_i sum_n x(pi_i, n)
template <class R>
R doubilet_p(const SetPartition& pi, const WeightSystem<R>& w) {
    detail::check_ground(pi, w);
    R out(1);
    for (const auto& block : pi.blocks()) {
        R s(0);
        for (int j = 0; j < w.domain_size(); ++j) s = s + w.block_value(block, j);
        out = out * s;
    }
    return out;
}

// m(pi) = sum over distinct n_1..n_l of prod_i x(pi_i, n_i)
template <class R>
R doubilet_m(const SetPartition& pi, const WeightSystem<R>& w) {
    detail::check_ground(pi, w);
    return detail::m_over_blocks(pi.blocks(), w);
}

// e(pi) = sum with n_a != n_b exactly when a, b share a block; factorizes
// into one injective sum per block.
template <class R>
R doubilet_e(const SetPartition& pi, const WeightSystem<R>& w) {
    detail::check_ground(pi, w);
    R out(1);
    for (const auto& block : pi.blocks()) out = out * detail::e_over_block(block, w);
    return out;
}

// h(pi) = prod_i sum_{rho in Pi(pi_i)} lambda(rho)! m(rho)
template <class R>
R doubilet_h(const SetPartition& pi, const WeightSystem<R>& w) {
    detail::check_ground(pi, w);
    R out(1);
    for (const auto& block : pi.blocks()) {
        R s(0);
        for_each_set_partition(static_cast<int>(block.size()), [&](const SetPartition& rho) {
            std::vector<std::vector<int>> mapped;
            mapped.reserve(rho.blocks().size());
            for (const auto& sub : rho.blocks()) {
                std::vector<int> m;
                m.reserve(sub.size());
                for (int j : sub) m.push_back(block[static_cast<std::size_t>(j - 1)]);
                mapped.push_back(std::move(m));
            }
            s = s + R(Rational(rho.type().parts_factorial())) * detail::m_over_blocks(mapped, w);
        });
        out = out * s;
    }
    return out;
}

} // namespace genera
