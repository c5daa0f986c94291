#include "genera/int_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace genera {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be non-increasing");
    }
}

int IntPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int IntPartition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

IntPartition IntPartition::doubled() const {
    std::vector<int> p(parts_);
    for (int& x : p) x *= 2;
    return IntPartition(std::move(p));
}

Integer IntPartition::multiplicity_factorial() const {
    Integer out = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        out *= factorial(j - i);
        i = j;
    }
    return out;
}

Integer IntPartition::parts_factorial() const {
    Integer out = 1;
    for (int x : parts_) out *= factorial(static_cast<unsigned long>(x));
    return out;
}

IntPartition IntPartition::merged(const IntPartition& other) const {
    std::vector<int> p;
    p.reserve(parts_.size() + other.parts_.size());
    p.insert(p.end(), parts_.begin(), parts_.end());
    p.insert(p.end(), other.parts_.begin(), other.parts_.end());
    std::sort(p.begin(), p.end(), std::greater<int>());
    return IntPartition(std::move(p));
}

std::string IntPartition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += "]";
    return s;
}

std::vector<IntPartition> partitions_of_weight(int n) {
    if (n < 0) throw std::domain_error("partition weight must be non-negative");
    std::vector<IntPartition> out;
    std::vector<int> cur;
    // Descending lexicographic order falls out of always trying the largest
    // feasible next part first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace genera
