#pragma once

#include <json.hpp>

#include <string>
#include <utility>

#include "genera/chern.hpp"
#include "genera/int_partition.hpp"
#include "genera/rational.hpp"
#include "genera/sym_poly.hpp"
#include "genera/zeta_expr.hpp"

namespace genera {

// JSON wire formats. All emitters produce canonical, deterministic documents
// (sorted object keys, entries in the canonical partition order); all parsers
// validate shape and values, throwing std::domain_error with a descriptive
// message on bad input.

// Parses raw text, converting syntax errors into std::domain_error carrying a
// line/column diagnostic.
nlohmann::json parse_json_text(const std::string& text);

// {"terms":[{"coef":"7/360","syms":{"pi":4}}]}
nlohmann::json zeta_expr_to_json(const ZetaExpr& x);
ZetaExpr zeta_expr_from_json(const nlohmann::json& j);

// {"basis":"P","terms":[{"partition":[1,1],"coef":"1/2"}]}
nlohmann::json sym_poly_to_json(const SymPoly<Rational>& f);
SymPoly<Rational> sym_poly_from_json(const nlohmann::json& j);

// {"dim":4,"entries":[{"partition":[2,2],"value":"828/1"}]}
nlohmann::json partition_vector_to_json(int dim, const PartitionMap<Rational>& entries);
std::pair<int, PartitionMap<Rational>> partition_vector_from_json(const nlohmann::json& j);

template <class Tag>
nlohmann::json chern_vector_to_json(const PartitionVector<Tag>& v) {
    return partition_vector_to_json(v.dim(), v.entries());
}

template <class V>
V chern_vector_from_json(const nlohmann::json& j) {
    auto [dim, entries] = partition_vector_from_json(j);
    return V(dim, std::move(entries));
}

// {"genus":"td_half","weight":4,"entries":[{"partition":[2,2],"coef":{...},
//  "reduced":"7/5760"}]}; "reduced" is the even-reduced value, rendered as
// "p/q" when rational and as the canonical expression string otherwise.
nlohmann::json table_to_json(const std::string& genus_name, int weight,
                             const PartitionMap<ZetaExpr>& table);

} // namespace genera
