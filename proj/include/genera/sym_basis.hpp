#pragma once

#include <string>

#include "genera/int_partition.hpp"

namespace genera {

enum class Basis { M, E, P, H };

char basis_letter(Basis b);              // 'm', 'e', 'p', 'h'
std::string basis_name(Basis b);         // "M", "E", "P", "H"
Basis basis_from_string(const std::string& s);

// Rational transition rows between single basis elements; every basis
// conversion is an R-linear combination of these. The power-sum expansions
// of e_n/h_n come from Newton's identities; the monomial ones from Mobius
// sums over the partition lattice of the index set.
PartitionMap<Rational> p_expansion_of_e(const IntPartition& lambda);
PartitionMap<Rational> p_expansion_of_h(const IntPartition& lambda);
PartitionMap<Rational> p_expansion_of_m(const IntPartition& lambda);
PartitionMap<Rational> e_expansion_of_p(const IntPartition& lambda);
PartitionMap<Rational> h_expansion_of_p(const IntPartition& lambda);
PartitionMap<Rational> m_expansion_of_p(const IntPartition& lambda);

} // namespace genera
