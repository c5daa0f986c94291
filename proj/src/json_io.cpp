#include "genera/json_io.hpp"

#include <stdexcept>
#include <vector>

namespace genera {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::domain_error("bad JSON: " + what); }

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string string_field(const nlohmann::json& j, const char* key) {
    const nlohmann::json& v = field(j, key);
    if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

int int_field(const nlohmann::json& j, const char* key) {
    const nlohmann::json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Rational rational_field(const nlohmann::json& j, const char* key) {
    try {
        return rat_from_string(string_field(j, key));
    } catch (const std::domain_error& e) {
        bad(std::string("field \"") + key + "\": " + e.what());
    }
}

nlohmann::json partition_to_json(const IntPartition& lam) {
    return nlohmann::json(lam.parts());
}

IntPartition partition_field(const nlohmann::json& j) {
    const nlohmann::json& v = field(j, "partition");
    if (!v.is_array()) bad("field \"partition\" must be an array");
    std::vector<int> parts;
    for (const nlohmann::json& p : v) {
        if (!p.is_number_integer() || p.get<int>() < 1)
            bad("partition parts must be positive integers");
        parts.push_back(p.get<int>());
    }
    return IntPartition(std::move(parts));
}

} // namespace

nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::domain_error("JSON parse error at line " + std::to_string(line) +
                                ", column " + std::to_string(col) + ": " + e.what());
    }
}

nlohmann::json zeta_expr_to_json(const ZetaExpr& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coef] : x.terms()) {
        nlohmann::json syms = nlohmann::json::object();
        for (const auto& [sym, exp] : mono) syms[symbol_name(sym)] = exp;
        terms.push_back({{"coef", rat_to_string(coef)}, {"syms", syms}});
    }
    return {{"terms", terms}};
}

ZetaExpr zeta_expr_from_json(const nlohmann::json& j) {
    const nlohmann::json& terms = field(j, "terms");
    if (!terms.is_array()) bad("field \"terms\" must be an array");
    ZetaExpr acc;
    for (const nlohmann::json& t : terms) {
        const Rational coef = rational_field(t, "coef");
        const nlohmann::json& syms = field(t, "syms");
        if (!syms.is_object()) bad("field \"syms\" must be an object");
        Monomial mono;
        for (const auto& [name, exp] : syms.items()) {
            if (!exp.is_number_integer() || exp.get<int>() == 0)
                bad("symbol exponents must be nonzero integers");
            int sym;
            try {
                sym = symbol_from_name(name);
            } catch (const std::domain_error& e) {
                bad(e.what());
            }
            if (sym != zsym::pi && exp.get<int>() < 0)
                bad("only pi may carry a negative exponent");
            mono[sym] = exp.get<int>();
        }
        acc = acc + ZetaExpr::term(mono, coef);
    }
    return acc;
}

nlohmann::json sym_poly_to_json(const SymPoly<Rational>& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, coef] : f.terms())
        terms.push_back({{"partition", partition_to_json(lam)}, {"coef", rat_to_string(coef)}});
    return {{"basis", basis_name(f.basis())}, {"terms", terms}};
}

SymPoly<Rational> sym_poly_from_json(const nlohmann::json& j) {
    Basis basis;
    try {
        basis = basis_from_string(string_field(j, "basis"));
    } catch (const std::domain_error& e) {
        bad(e.what());
    }
    const nlohmann::json& terms = field(j, "terms");
    if (!terms.is_array()) bad("field \"terms\" must be an array");
    SymPoly<Rational> f(basis);
    for (const nlohmann::json& t : terms)
        f.add_term(partition_field(t), rational_field(t, "coef"));
    return f;
}

nlohmann::json partition_vector_to_json(int dim, const PartitionMap<Rational>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [lam, value] : entries)
        out.push_back({{"partition", partition_to_json(lam)}, {"value", rat_to_string(value)}});
    return {{"dim", dim}, {"entries", out}};
}

std::pair<int, PartitionMap<Rational>> partition_vector_from_json(const nlohmann::json& j) {
    const int dim = int_field(j, "dim");
    const nlohmann::json& entries = field(j, "entries");
    if (!entries.is_array()) bad("field \"entries\" must be an array");
    PartitionMap<Rational> values;
    for (const nlohmann::json& entry : entries) {
        IntPartition lam = partition_field(entry);
        if (!values.emplace(lam, rational_field(entry, "value")).second)
            bad("duplicate partition " + lam.to_string());
    }
    return {dim, std::move(values)};
}

nlohmann::json table_to_json(const std::string& genus_name, int weight,
                             const PartitionMap<ZetaExpr>& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [lam, coef] : table) {
        const ZetaExpr reduced = coef.reduce_even();
        entries.push_back({{"partition", partition_to_json(lam)},
                           {"coef", zeta_expr_to_json(coef)},
                           {"reduced", reduced.is_rational() ? rat_to_string(reduced.rational_value())
                                                             : reduced.to_string()}});
    }
    return {{"genus", genus_name}, {"weight", weight}, {"entries", entries}};
}

} // namespace genera
