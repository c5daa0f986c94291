#include <doctest.h>

#include <string>

#include "genera/genus.hpp"
#include "genera/json_io.hpp"
#include "genera/zeta_values.hpp"

using namespace genera;
using nlohmann::json;

namespace {

json reparse(const json& j) { return parse_json_text(j.dump()); }

} // namespace

TEST_CASE("parse_json_text reports line and column on malformed input") {
    CHECK(parse_json_text("{\"a\": [1, 2]}")["a"][1] == 2);
    try {
        parse_json_text("{\n  \"a\": }");
        CHECK(false);
    } catch (const std::domain_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("column") != std::string::npos);
    }
}

TEST_CASE("ZetaExpr JSON: shape, round trip, validation") {
    ZetaExpr x = ZetaExpr::term(Monomial{{zsym::pi, 4}}, rat(7, 360));
    json j = zeta_expr_to_json(x);
    CHECK(j["terms"].size() == 1);
    CHECK(j["terms"][0]["coef"] == "7/360");
    CHECK(j["terms"][0]["syms"] == json{{"pi", 4}});
    CHECK(zeta_expr_from_json(reparse(j)) == x);

    for (const ZetaExpr& e : {ZetaExpr(0), ZetaExpr(rat(-3, 7)),
                              zeta_star_sym({2, 2}),
                              closed_form_td_half(IntPartition{2, 2}),
                              ZetaExpr::gamma().pow(2) * rat(1, 2) - ZetaExpr::zeta(2) * rat(1, 2),
                              ZetaExpr::zeta(3) * ZetaExpr::pi(-6) + ZetaExpr(1)}) {
        CHECK(zeta_expr_from_json(reparse(zeta_expr_to_json(e))) == e);
    }

    CHECK(zeta_expr_from_json(json::parse(R"({"terms":[]})")).is_zero());
    CHECK_THROWS_AS(zeta_expr_from_json(json::parse(R"({"no":1})")), std::domain_error);
    CHECK_THROWS_AS(zeta_expr_from_json(json::parse(R"({"terms":[{"coef":"1"}]})")),
                    std::domain_error);
    CHECK_THROWS_AS(
        zeta_expr_from_json(json::parse(R"({"terms":[{"coef":"1","syms":{"tau":1}}]})")),
        std::domain_error);
    CHECK_THROWS_AS(
        zeta_expr_from_json(json::parse(R"({"terms":[{"coef":"1","syms":{"pi":0}}]})")),
        std::domain_error);
    CHECK_THROWS_AS(
        zeta_expr_from_json(json::parse(R"({"terms":[{"coef":"1","syms":{"gamma":-1}}]})")),
        std::domain_error);
    CHECK_THROWS_AS(
        zeta_expr_from_json(json::parse(R"({"terms":[{"coef":"x","syms":{}}]})")),
        std::domain_error);
}

TEST_CASE("SymPoly JSON: shape and round trip in every basis") {
    SymPoly<Rational> f(Basis::P);
    f.add_term(IntPartition{1, 1}, rat(1, 2));
    f.add_term(IntPartition{2}, rat(-1, 2));
    json j = sym_poly_to_json(f);
    CHECK(j["basis"] == "P");
    CHECK(j["terms"][0]["partition"] == json::array({2}));
    CHECK(j["terms"][0]["coef"] == "-1/2");

    for (Basis b : {Basis::M, Basis::E, Basis::P, Basis::H}) {
        SymPoly<Rational> g(b);
        g.add_term(IntPartition{3, 1}, rat(5, 3));
        g.add_term(IntPartition{}, rat(-2));
        SymPoly<Rational> back = sym_poly_from_json(reparse(sym_poly_to_json(g)));
        CHECK(back.basis() == b);
        CHECK(back.terms() == g.terms());
    }

    CHECK_THROWS_AS(sym_poly_from_json(json::parse(R"({"basis":"Q","terms":[]})")),
                    std::domain_error);
    CHECK_THROWS_AS(
        sym_poly_from_json(json::parse(R"({"basis":"P","terms":[{"partition":[0],"coef":"1"}]})")),
        std::domain_error);
}

TEST_CASE("ChernVector JSON: canonical document and round trip") {
    ChernVector c(4, {{IntPartition{2, 2}, rat(828)}, {IntPartition{4}, rat(324)}});
    json j = chern_vector_to_json(c);
    json want = json::parse(
        R"({"dim":4,"entries":[{"partition":[4],"value":"324/1"},{"partition":[2,2],"value":"828/1"}]})");
    CHECK(j == want);

    ChernVector back = chern_vector_from_json<ChernVector>(reparse(j));
    CHECK(back.dim() == 4);
    CHECK(back.entries() == c.entries());
    // Entry order is free on input; only the emitted order is canonical.
    ChVector h = chern_vector_from_json<ChVector>(json::parse(
        R"({"dim":4,"entries":[{"partition":[2,2],"value":"828/1"},{"partition":[4],"value":"324/1"}]})"));
    CHECK(h.value(IntPartition{2, 2}) == rat(828));

    CHECK_THROWS_AS(chern_vector_from_json<ChernVector>(json::parse(R"({"dim":2,"entries":[
        {"partition":[2],"value":"1/1"},{"partition":[2],"value":"2/1"}]})")),
                    std::domain_error);
    CHECK_THROWS_AS(chern_vector_from_json<ChernVector>(json::parse(R"({"entries":[]})")),
                    std::domain_error);
    CHECK_THROWS_AS(chern_vector_from_json<ChernVector>(json::parse(R"({"dim":2,"entries":[
        {"partition":[3],"value":"1/1"}]})")),
                    std::domain_error);
}

TEST_CASE("table JSON carries both the raw coefficient and its reduction") {
    const GenusSpec half = builtin_genus("td_half", 4);
    json j = table_to_json("td_half", 4, coefficient_table(half, 4));
    CHECK(j["genus"] == "td_half");
    CHECK(j["weight"] == 4);
    bool found = false;
    for (const json& entry : j["entries"]) {
        if (entry["partition"] == json::array({2, 2})) {
            found = true;
            CHECK(entry["reduced"] == "7/5760");
            CHECK(zeta_expr_from_json(entry["coef"]) == ZetaExpr(rat(7, 5760)));
        }
    }
    CHECK(found);
    CHECK(reparse(j) == j);

    const GenusSpec gamma = builtin_genus("gamma", 1);
    json g = table_to_json("gamma", 1, coefficient_table(gamma, 1));
    CHECK(g["entries"][0]["reduced"] == "gamma");
}
