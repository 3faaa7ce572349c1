#include "doctest.h"

#include "qalex/format.hpp"
#include "test_util.hpp"

using namespace qalex;
using testutil::Rng;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_to_coeff(e, c);
    return p;
}

const LaurentPoly trefoil = lp({{-2, 1}, {0, -1}, {2, 1}});

} // namespace

TEST_CASE("exponent keys") {
    CHECK(exponent_key(-2, Var::q) == "-2");
    CHECK(exponent_key(-2, Var::t) == "-1");
    CHECK(exponent_key(-1, Var::t) == "-1/2");
    CHECK(exponent_key(3, Var::t) == "3/2");
    CHECK(parse_exponent_key("-1/2", Var::t) == -1);
    CHECK(parse_exponent_key("-1", Var::t) == -2);
    CHECK(parse_exponent_key("-1", Var::q) == -1);
    CHECK_THROWS_AS(parse_exponent_key("1/3", Var::t), InvalidInput);
    CHECK_THROWS_AS(parse_exponent_key("x", Var::q), InvalidInput);
    CHECK_THROWS_AS(parse_exponent_key("1/2", Var::q), InvalidInput);
}

TEST_CASE("poly json in q and t") {
    const nlohmann::json jq = poly_to_json(trefoil, Var::q);
    CHECK(jq == nlohmann::json({{"-2", "1"}, {"0", "-1"}, {"2", "1"}}));
    const nlohmann::json jt = poly_to_json(trefoil, Var::t);
    CHECK(jt == nlohmann::json({{"-1", "1"}, {"0", "-1"}, {"1", "1"}}));
    CHECK(poly_to_json(LaurentPoly(), Var::q) == nlohmann::json::object());
    // half-integer exponents for odd q-powers in t display
    const nlohmann::json half = poly_to_json(lp({{-1, 1}, {1, -1}}), Var::t);
    CHECK(half == nlohmann::json({{"-1/2", "1"}, {"1/2", "-1"}}));
}

TEST_CASE("json round trip is exact") {
    Rng rng(900);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly p = testutil::rand_poly(rng, 6, 9, 1000);
        for (Var var : {Var::q, Var::t}) {
            const nlohmann::json obj = poly_to_json(p, var);
            CHECK(poly_from_json(obj, var) == p);
            // through an actual serialization
            CHECK(poly_from_json(nlohmann::json::parse(obj.dump()), var) == p);
        }
    }
    // big coefficients survive as decimal strings
    LaurentPoly big;
    big.add_to_coeff(0, Int("123456789012345678901234567890"));
    CHECK(poly_from_json(poly_to_json(big, Var::q), Var::q) == big);
}

TEST_CASE("t and q renderings agree under exponent doubling") {
    Rng rng(901);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly p = testutil::rand_poly(rng);
        const nlohmann::json jq = poly_to_json(p, Var::q);
        const nlohmann::json jt = poly_to_json(p, Var::t);
        CHECK(jq.size() == jt.size());
        for (const auto& [key, value] : jt.items())
            CHECK(jq[std::to_string(parse_exponent_key(key, Var::t))] == value);
    }
}

TEST_CASE("csv rows ascending") {
    CHECK(poly_to_csv(trefoil, Var::t) == "-1,1\n0,-1\n1,1\n");
    CHECK(poly_to_csv(LaurentPoly(), Var::q).empty());
}

TEST_CASE("text rendering") {
    CHECK(poly_to_text(trefoil, Var::t) == "t^-1 - 1 + t");
    CHECK(poly_to_text(trefoil, Var::q) == "q^-2 - 1 + q^2");
    CHECK(poly_to_text(LaurentPoly(), Var::t) == "0");
    CHECK(poly_to_text(lp({{-1, 1}, {1, -1}}), Var::t) == "t^(-1/2) - t^(1/2)");
    CHECK(poly_to_text(lp({{0, 2}, {4, -3}}), Var::t) == "2 - 3*t^2");
}
