#include "genera/sym_basis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "genera/set_partition.hpp"

namespace genera {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::M: return 'm';
        case Basis::E: return 'e';
        case Basis::P: return 'p';
        case Basis::H: return 'h';
    }
    throw std::logic_error("bad basis");
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::E: return "E";
        case Basis::P: return "P";
        case Basis::H: return "H";
    }
    throw std::logic_error("bad basis");
}

Basis basis_from_string(const std::string& s) {
    if (s == "M" || s == "m") return Basis::M;
    if (s == "E" || s == "e") return Basis::E;
    if (s == "P" || s == "p") return Basis::P;
    if (s == "H" || s == "h") return Basis::H;
    throw std::domain_error("unknown basis: '" + s + "'");
}

namespace {

void accumulate(PartitionMap<Rational>& out, const IntPartition& key, const Rational& v) {
    auto it = out.find(key);
    if (it == out.end()) {
        if (v != 0) out.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) out.erase(it);
    }
}

// out += scale * (row merged with extra) for every entry of row.
void merge_into(PartitionMap<Rational>& out, const PartitionMap<Rational>& row,
                const IntPartition& extra, const Rational& scale) {
    for (const auto& [mu, c] : row) accumulate(out, mu.merged(extra), c * scale);
}

PartitionMap<Rational> product_over_parts(const IntPartition& lambda,
                                          const std::vector<PartitionMap<Rational>>& row_of_n) {
    PartitionMap<Rational> acc{{IntPartition{}, Rational(1)}};
    for (int part : lambda.parts()) {
        PartitionMap<Rational> next;
        for (const auto& [mu, c] : acc) merge_into(next, row_of_n[static_cast<std::size_t>(part)], mu, c);
        acc = std::move(next);
    }
    return acc;
}

// Rows for single e_n/h_n in the P basis, n = 0..cap:
//   n e_n = sum_{i=1}^n (-1)^{i-1} p_i e_{n-i}
//   n h_n = sum_{i=1}^n p_i h_{n-i}
std::vector<PartitionMap<Rational>> p_rows_of_eh(int cap, bool alternating) {
    std::vector<PartitionMap<Rational>> rows(static_cast<std::size_t>(cap) + 1);
    rows[0] = {{IntPartition{}, Rational(1)}};
    for (int n = 1; n <= cap; ++n) {
        PartitionMap<Rational> row;
        for (int i = 1; i <= n; ++i) {
            Rational s = rat(1, n);
            if (alternating && i % 2 == 0) s = -s;
            merge_into(row, rows[static_cast<std::size_t>(n - i)], IntPartition{i}, s);
        }
        rows[static_cast<std::size_t>(n)] = std::move(row);
    }
    return rows;
}

// Rows for single p_n in the E basis (alternating) or H basis:
//   p_n = (-1)^{n-1} n e_n + sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i}
//   p_n = n h_n - sum_{i=1}^{n-1} h_i p_{n-i}
std::vector<PartitionMap<Rational>> eh_rows_of_p(int cap, bool alternating) {
    std::vector<PartitionMap<Rational>> rows(static_cast<std::size_t>(cap) + 1);
    rows[0] = {{IntPartition{}, Rational(1)}};
    for (int n = 1; n <= cap; ++n) {
        PartitionMap<Rational> row;
        Rational lead(n);
        if (alternating && n % 2 == 0) lead = -lead;
        accumulate(row, IntPartition{n}, lead);
        for (int i = 1; i < n; ++i) {
            Rational s = alternating && i % 2 == 1 ? Rational(1) : Rational(-1);
            merge_into(row, rows[static_cast<std::size_t>(n - i)], IntPartition{i}, s);
        }
        rows[static_cast<std::size_t>(n)] = std::move(row);
    }
    return rows;
}

} // namespace

PartitionMap<Rational> p_expansion_of_e(const IntPartition& lambda) {
    int cap = lambda.empty() ? 0 : lambda.parts()[0];
    return product_over_parts(lambda, p_rows_of_eh(cap, true));
}

PartitionMap<Rational> p_expansion_of_h(const IntPartition& lambda) {
    int cap = lambda.empty() ? 0 : lambda.parts()[0];
    return product_over_parts(lambda, p_rows_of_eh(cap, false));
}

PartitionMap<Rational> e_expansion_of_p(const IntPartition& lambda) {
    int cap = lambda.empty() ? 0 : lambda.parts()[0];
    return product_over_parts(lambda, eh_rows_of_p(cap, true));
}

PartitionMap<Rational> h_expansion_of_p(const IntPartition& lambda) {
    int cap = lambda.empty() ? 0 : lambda.parts()[0];
    return product_over_parts(lambda, eh_rows_of_p(cap, false));
}

PartitionMap<Rational> p_expansion_of_m(const IntPartition& lambda) {
    // m_lambda = (1 / prod_i m_i(lambda)!) sum_{rho in Pi_l} mu(0,rho) p_{lambda_rho}
    PartitionMap<Rational> out;
    if (lambda.empty()) {
        out.emplace(IntPartition{}, Rational(1));
        return out;
    }
    int l = lambda.length();
    SetPartition zero = SetPartition::zero_hat(l);
    Rational norm = Rational(1) / Rational(lambda.multiplicity_factorial());
    for_each_set_partition(l, [&](const SetPartition& rho) {
        auto sums = block_sums(rho, lambda.parts());
        std::sort(sums.begin(), sums.end(), std::greater<int>());
        accumulate(out, IntPartition(std::move(sums)), Rational(mobius(zero, rho)) * norm);
    });
    return out;
}

PartitionMap<Rational> m_expansion_of_p(const IntPartition& lambda) {
    // p_lambda = sum_{rho in Pi_l} (prod_j m_j(lambda_rho)!) m_{lambda_rho}
    PartitionMap<Rational> out;
    if (lambda.empty()) {
        out.emplace(IntPartition{}, Rational(1));
        return out;
    }
    for_each_set_partition(lambda.length(), [&](const SetPartition& rho) {
        auto sums = block_sums(rho, lambda.parts());
        std::sort(sums.begin(), sums.end(), std::greater<int>());
        IntPartition mu(std::move(sums));
        accumulate(out, mu, Rational(mu.multiplicity_factorial()));
    });
    return out;
}

} // namespace genera
