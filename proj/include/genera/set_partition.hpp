#pragma once

#include <functional>
#include <string>
#include <vector>

#include "genera/int_partition.hpp"
#include "genera/rational.hpp"

namespace genera {

// Partition of the ground set {1..n} into disjoint nonempty blocks, kept in
// canonical form: elements ascending within a block, blocks ordered by their
// minimum element.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    static SetPartition zero_hat(int n); // all singletons
    static SetPartition one_hat(int n);  // one block
    // rgs[i] = block index of element i+1; blocks numbered by first appearance.
    static SetPartition from_rgs(const std::vector<int>& rgs);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int length() const { return static_cast<int>(blocks_.size()); }
    IntPartition type() const;
    std::vector<int> rgs() const;

    std::string to_string() const; // "[[1,2],[3]]"

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    // Canonical order: restricted-growth strings ascending lexicographically.
    bool operator<(const SetPartition& o) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

inline constexpr int kMaxEnumerationN = 14;

// Visits every partition of [n] once, in canonical (RGS-lexicographic) order.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& fn);

// Materialized variant; same order. Prefer for_each_set_partition for large n.
std::vector<SetPartition> enumerate_set_partitions(int n);

Integer bell_number(int n);

// true iff every block of pi is contained in a block of rho.
bool refines(const SetPartition& pi, const SetPartition& rho);

// mu(pi, rho) = (-1)^{l(pi)-l(rho)} prod_i (b_i - 1)! where b_i counts the
// blocks of pi inside the i-th block of rho. Returns 0 when pi does not
// refine rho.
Integer mobius(const SetPartition& pi, const SetPartition& rho);

// All rho with pi <= rho, canonical order.
std::vector<SetPartition> coarsenings(const SetPartition& pi);

// All rho with rho <= pi, canonical order.
std::vector<SetPartition> refinements(const SetPartition& pi);

// (sum of weights over each block), in block order; weights[i] belongs to
// element i+1.
std::vector<int> block_sums(const SetPartition& pi, const std::vector<int>& weights);

} // namespace genera
