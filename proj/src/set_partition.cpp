#include "genera/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace genera {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ <= 0) throw std::domain_error("ground set must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    for (auto& b : blocks_) {
        if (b.empty()) throw std::domain_error("empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n_) throw std::domain_error("element out of range");
            if (seen[static_cast<std::size_t>(x)]) throw std::domain_error("duplicate element");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
    for (int x = 1; x <= n_; ++x)
        if (!seen[static_cast<std::size_t>(x)]) throw std::domain_error("missing element");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

SetPartition SetPartition::zero_hat(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) blocks.push_back({x});
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_hat(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) all[static_cast<std::size_t>(x - 1)] = x;
    return SetPartition(n, {std::move(all)});
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
    int n = static_cast<int>(rgs.size());
    if (n == 0) throw std::domain_error("ground set must be nonempty");
    int nblocks = 0;
    for (int b : rgs) nblocks = std::max(nblocks, b + 1);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    return SetPartition(n, std::move(blocks));
}

IntPartition SetPartition::type() const {
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return IntPartition(std::move(sizes));
}

std::vector<int> SetPartition::rgs() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    // Blocks are already ordered by minimum, which is the order of first
    // appearance, so the block index is the RGS label.
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (int x : blocks_[i]) out[static_cast<std::size_t>(x - 1)] = static_cast<int>(i);
    return out;
}

std::string SetPartition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(blocks_[i][j]);
        }
        s += "]";
    }
    s += "]";
    return s;
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return rgs() < o.rgs();
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& fn) {
    if (n < 1 || n > kMaxEnumerationN)
        throw std::domain_error("set partition enumeration requires 1 <= n <= " +
                                std::to_string(kMaxEnumerationN));
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    // Restricted growth: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            fn(SetPartition::from_rgs(rgs));
            return;
        }
        for (int b = 0; b <= maxv + 1; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(maxv, b));
        }
    };
    rec(rec, 1, 0);
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

Integer bell_number(int n) {
    if (n < 0) throw std::domain_error("Bell number index must be non-negative");
    // B_{m+1} = sum_k C(m,k) B_k
    std::vector<Integer> b{1};
    for (int m = 0; m < n; ++m) {
        Integer next = 0;
        for (int k = 0; k <= m; ++k) next += binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)) * b[static_cast<std::size_t>(k)];
        b.push_back(next);
    }
    return b[static_cast<std::size_t>(n)];
}

namespace {

// block_of[x-1] = index of the block of pi containing x.
std::vector<int> block_index(const SetPartition& pi) {
    std::vector<int> idx(static_cast<std::size_t>(pi.n()));
    for (std::size_t i = 0; i < pi.blocks().size(); ++i)
        for (int x : pi.blocks()[i]) idx[static_cast<std::size_t>(x - 1)] = static_cast<int>(i);
    return idx;
}

} // namespace

bool refines(const SetPartition& pi, const SetPartition& rho) {
    if (pi.n() != rho.n()) throw std::domain_error("ground sets differ");
    auto rho_idx = block_index(rho);
    for (const auto& b : pi.blocks()) {
        int target = rho_idx[static_cast<std::size_t>(b[0] - 1)];
        for (int x : b)
            if (rho_idx[static_cast<std::size_t>(x - 1)] != target) return false;
    }
    return true;
}

Integer mobius(const SetPartition& pi, const SetPartition& rho) {
    if (pi.n() != rho.n()) throw std::domain_error("ground sets differ");
    if (!refines(pi, rho)) return 0;
    auto rho_idx = block_index(rho);
    std::vector<int> inner(static_cast<std::size_t>(rho.length()), 0);
    for (const auto& b : pi.blocks())
        ++inner[static_cast<std::size_t>(rho_idx[static_cast<std::size_t>(b[0] - 1)])];
    Integer out = (pi.length() - rho.length()) % 2 == 0 ? 1 : -1;
    for (int c : inner) out *= factorial(static_cast<unsigned long>(c - 1));
    return out;
}

std::vector<SetPartition> coarsenings(const SetPartition& pi) {
    int b = pi.length();
    std::vector<SetPartition> out;
    // Partitions of the block set of pi, pushed down to the ground set.
    for_each_set_partition(b, [&](const SetPartition& sigma) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(sigma.blocks().size());
        for (const auto& group : sigma.blocks()) {
            std::vector<int> merged;
            for (int bi : group) {
                const auto& src = pi.blocks()[static_cast<std::size_t>(bi - 1)];
                merged.insert(merged.end(), src.begin(), src.end());
            }
            blocks.push_back(std::move(merged));
        }
        out.emplace_back(pi.n(), std::move(blocks));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> refinements(const SetPartition& pi) {
    // Cartesian product of the set partitions of each block.
    std::vector<std::vector<std::vector<std::vector<int>>>> per_block;
    for (const auto& blk : pi.blocks()) {
        std::vector<std::vector<std::vector<int>>> choices;
        for_each_set_partition(static_cast<int>(blk.size()), [&](const SetPartition& s) {
            std::vector<std::vector<int>> mapped;
            mapped.reserve(s.blocks().size());
            for (const auto& sub : s.blocks()) {
                std::vector<int> m;
                m.reserve(sub.size());
                for (int j : sub) m.push_back(blk[static_cast<std::size_t>(j - 1)]);
                mapped.push_back(std::move(m));
            }
            choices.push_back(std::move(mapped));
        });
        per_block.push_back(std::move(choices));
    }
    std::vector<SetPartition> out;
    std::vector<std::size_t> pick(per_block.size(), 0);
    for (;;) {
        std::vector<std::vector<int>> blocks;
        for (std::size_t i = 0; i < per_block.size(); ++i)
            for (const auto& sub : per_block[i][pick[i]]) blocks.push_back(sub);
        out.emplace_back(pi.n(), std::move(blocks));
        std::size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < per_block[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> block_sums(const SetPartition& pi, const std::vector<int>& weights) {
    if (static_cast<int>(weights.size()) != pi.n())
        throw std::domain_error("weights length must equal the ground-set size");
    std::vector<int> out;
    out.reserve(pi.blocks().size());
    for (const auto& b : pi.blocks()) {
        int s = 0;
        for (int x : b) s += weights[static_cast<std::size_t>(x - 1)];
        out.push_back(s);
    }
    return out;
}

} // namespace genera
