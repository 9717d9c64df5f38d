#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "klac/errors.hpp"
#include "klac/model_io.hpp"
#include "oracle.hpp"

using namespace klac;

TEST_CASE("scalar json round trips") {
    for (const Scalar& s : {Scalar(make_rational(-7, 3)), Scalar(0), Scalar::i(),
                            Scalar(make_rational(1, 2), make_rational(-2, 5))}) {
        Json j = scalar_to_json(s);
        CHECK(scalar_from_json(j, "$") == s);
    }
    CHECK(scalar_from_json(Json("3/4"), "$") == Scalar(make_rational(3, 4)));
    CHECK(scalar_from_json(Json(5), "$") == Scalar(5));
    CHECK_THROWS_AS(scalar_from_json(Json("x"), "$"), ParseError);
    CHECK_THROWS_AS(scalar_from_json(Json(1.5), "$"), ParseError);
}

TEST_CASE("model round trip on every algebroid preset") {
    std::mt19937 rng(7);
    std::vector<AlgebroidPresentation> models = {
        make_algebroid_preset("abelian-2m", 1), make_algebroid_preset("abelian-2m", 3),
        make_algebroid_preset("kt"),            make_algebroid_preset("affine-2"),
        make_algebroid_preset("e2r"),           oracle::random_abelian_kahler(rng, 2),
    };
    for (const auto& p : models) {
        const std::string text = serialize_model(p);
        auto q = parse_model_text(text);
        CHECK(serialize_model(q) == text);
        CHECK(model_hash(q) == model_hash(p));
        CHECK(q.fiber_rank == p.fiber_rank);
        CHECK(q.structure == p.structure);
        CHECK((q.metric.has_value() == p.metric.has_value()));
        if (p.metric) CHECK(*q.metric == *p.metric);
        if (p.omega) CHECK(q.omega->coeffs == p.omega->coeffs);
        if (p.eta) CHECK(*q.eta == *p.eta);
    }
}

TEST_CASE("model with an anchor round trips") {
    auto p = make_algebroid_preset("abelian-2m", 1);
    p.base_dim = 2;
    p.anchor = Matrix(2, 2);
    p.anchor.at(0, 0) = Scalar(1);
    p.anchor.at(1, 1) = Scalar(make_rational(1, 2));
    auto q = parse_model_text(serialize_model(p));
    CHECK(q.base_dim == 2);
    CHECK(q.anchor == p.anchor);
}

TEST_CASE("parse errors carry locations") {
    CHECK_THROWS_AS(parse_model_text("{"), ParseError);
    try {
        parse_model_text("{\n  \"rank\": 2,\n  junk\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.where).find("line 3") != std::string::npos);
    }
    // malformed index i = 0
    CHECK_THROWS_AS(
        parse_model_text(R"({"rank":2,"structure":[{"i":0,"j":2,"k":1,"c":"1"}]})"),
        ParseError);
    // i >= j
    CHECK_THROWS_AS(
        parse_model_text(R"({"rank":2,"structure":[{"i":2,"j":1,"k":1,"c":"1"}]})"),
        ParseError);
    // index beyond rank
    CHECK_THROWS_AS(
        parse_model_text(R"({"rank":2,"omega":[{"i":1,"j":3,"c":"1"}]})"), ParseError);
    // bad scalar
    CHECK_THROWS_AS(parse_model_text(R"({"rank":2,"eta":"1.5"})"), ParseError);
    // zero eta violates a type invariant
    CHECK_THROWS_AS(parse_model_text(R"({"rank":2,"eta":"0"})"), ParseError);
    // missing rank
    CHECK_THROWS_AS(parse_model_text(R"({"structure":[]})"), ParseError);
    try {
        parse_model_text(R"({"rank":2,"structure":[{"i":1,"j":2,"k":1,"c":"1/0"}]})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.where).find("structure[0]") != std::string::npos);
    }
}

TEST_CASE("bspec parsing") {
    auto spec = parse_bspec_text(R"({"bM": [1,0,1], "bZ": [1,1]})");
    CHECK(spec.betti_m == std::vector<int>{1, 0, 1});
    CHECK(spec.betti_z == std::vector<int>{1, 1});
    CHECK_THROWS_AS(parse_bspec_text(R"({"bM": [1]})"), ParseError);
    CHECK_THROWS_AS(parse_bspec_text(R"({"bM": [-1], "bZ": []})"), ParseError);
    CHECK_THROWS_AS(parse_bspec_text(R"({"bM": [0,1], "bZ": []})"), ParseError);
}

TEST_CASE("reports are deterministic") {
    auto p = make_algebroid_preset("kt");
    Json a = validation_to_json(validate_all(p));
    Json b = validation_to_json(validate_all(p));
    CHECK(a.dump() == b.dump());
    Json c1 = cohomology_to_json(cohomology(p), false, false);
    Json c2 = cohomology_to_json(cohomology(p), false, false);
    CHECK(c1.dump() == c2.dump());
    Json h1 = hl_to_json(hard_lefschetz_check(p));
    Json h2 = hl_to_json(hard_lefschetz_check(p));
    CHECK(h1.dump() == h2.dump());
    CHECK(serialize_model(p) == serialize_model(make_algebroid_preset("kt")));
}

TEST_CASE("report fragments carry the expected fields") {
    auto p = make_algebroid_preset("e2r");
    Json v = validation_to_json(validate_all(p));
    CHECK(v["jacobi"]["ok"] == true);
    CHECK(v["hodge_admissible"]["ok"] == true);
    Json c = cohomology_to_json(cohomology(p), true, false);
    CHECK(c["dims"] == Json::array({1, 2, 2, 2, 1}));
    CHECK(c.contains("bigraded"));
    Json o = obstruction_to_json(b_hard_lefschetz_obstruction(make_bmanifold_preset("b-sphere"), 1));
    CHECK(o["b_dims"] == Json::array({1, 1, 2}));
    CHECK(o["impossible"] == true);
}
