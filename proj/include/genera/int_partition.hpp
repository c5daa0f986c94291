#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "genera/rational.hpp"

namespace genera {

// Integer partition: a non-increasing sequence of positive parts. The empty
// partition is allowed and acts as the index of the unit/constant term.
class IntPartition {
public:
    IntPartition() = default;
    explicit IntPartition(std::vector<int> parts);
    IntPartition(std::initializer_list<int> parts) : IntPartition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int multiplicity(int i) const;

    // (2*l1, 2*l2, ...)
    IntPartition doubled() const;

    // prod_i m_i(lambda)!
    Integer multiplicity_factorial() const;
    // lambda! = prod_i lambda_i!
    Integer parts_factorial() const;

    // Concatenate-and-resort; the product index for multiplicative bases.
    IntPartition merged(const IntPartition& other) const;

    std::string to_string() const; // "[3,1,1]"

    auto operator<=>(const IntPartition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const IntPartition& o) const = default;

private:
    std::vector<int> parts_;
};

// Canonical term order: lexicographically greater partitions first, so map
// iteration yields (n), (n-1,1), ..., (1^n) within a weight.
struct LexDescending {
    bool operator()(const IntPartition& a, const IntPartition& b) const { return b < a; }
};

template <class V>
using PartitionMap = std::map<IntPartition, V, LexDescending>;

// All partitions of weight n in canonical (descending lexicographic) order.
// n = 0 yields just the empty partition.
std::vector<IntPartition> partitions_of_weight(int n);

} // namespace genera
