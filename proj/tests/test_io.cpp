#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "lueq/io.hpp"

using namespace lueq;

TEST_CASE("parse sc2q") {
    const StateValue v =
        parse_state_file(R"({"kind":"sc2q","c1":0.7,"c2":[0.2,0.0],"c4":0.3})");
    const auto& sc = std::get<SCCoefficients>(v);
    REQUIRE(sc.c1() == 0.7);
    REQUIRE(sc.c2() == Complex(0.2, 0.0));
    REQUIRE(sc.c4() == 0.3);
}

TEST_CASE("parse rejects a PSD violation as ValidationFailed") {
    try {
        parse_state_file(R"({"kind":"sc2q","c1":0.5,"c2":[0.6,0],"c4":0.5})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.kind() == ParseError::Kind::ValidationFailed);
        REQUIRE(std::string(e.what()).find("NotPSD") != std::string::npos);
    }
}

TEST_CASE("parse density") {
    const std::string bell = R"({"kind":"density","dims":[2,2],"matrix":[
        [[0.5,0],[0,0],[0,0],[0.5,0]],
        [[0,0],[0,0],[0,0],[0,0]],
        [[0,0],[0,0],[0,0],[0,0]],
        [[0.5,0],[0,0],[0,0],[0.5,0]]]})";
    const StateValue v = parse_state_file(bell);
    const auto& rho = std::get<DensityMatrix>(v);
    REQUIRE(rho.dim() == 4);
    REQUIRE(rho.matrix()(0, 3) == Complex(0.5, 0.0));
    REQUIRE(rho.dims() == BipartiteDims{2, 2});
}

TEST_CASE("parse pure") {
    const std::string s = R"({"kind":"pure","dims":[2,2],
        "coeffs":[[[0.7071067811865476,0],[0,0]],[[0,0],[0.7071067811865476,0]]]})";
    const StateValue v = parse_state_file(s);
    const auto& psi = std::get<PureState>(v);
    REQUIRE(psi.dims() == BipartiteDims{2, 2});
    REQUIRE(std::abs(psi.coefficients()(0, 0).real() - 0.7071067811865476) < 1e-15);
}

TEST_CASE("parse multi-level sc") {
    const std::string s = R"({"kind":"sc","levels":3,"parties":2,"c":[
        [[0.5,0],[0,0],[0,0]],
        [[0,0],[0.3,0],[0.05,0.02]],
        [[0,0],[0.05,-0.02],[0.2,0]]]})";
    const StateValue v = parse_state_file(s);
    const auto& sc = std::get<SCCoefficients>(v);
    REQUIRE(sc.levels() == 3);
    REQUIRE(sc.parties() == 2);
    REQUIRE(sc.coefficients()(1, 2) == Complex(0.05, 0.02));
}

TEST_CASE("parse errors carry kind and line information") {
    try {
        parse_state_file("{\"kind\":\"sc2q\",\n  \"c1\": nope}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.kind() == ParseError::Kind::MalformedSyntax);
        REQUIRE(e.line() == 2);
    }

    try {
        parse_state_file(R"({"kind":"werner","c1":0.5})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.kind() == ParseError::Kind::UnknownKind);
        REQUIRE(std::string(e.what()).find("werner") != std::string::npos);
    }

    // schema violations are syntax-level, not validation-level
    REQUIRE_THROWS_AS(parse_state_file(R"({"kind":"sc2q","c1":0.7,"c4":0.3})"), ParseError);
    REQUIRE_THROWS_AS(parse_state_file(R"({"kind":"sc2q","c1":0.7,"c2":[0.2],"c4":0.3})"),
                      ParseError);
    REQUIRE_THROWS_AS(parse_state_file(R"([1,2,3])"), ParseError);
}

TEST_CASE("serialize and parse round trip") {
    const char* fixtures[] = {
        R"({"kind":"sc2q","c1":0.7,"c2":[0.2,0.05],"c4":0.3})",
        R"({"kind":"density","dims":[2,2],"matrix":[
            [[0.5,0],[0,0],[0,0],[0.5,0]],
            [[0,0],[0,0],[0,0],[0,0]],
            [[0,0],[0,0],[0,0],[0,0]],
            [[0.5,0],[0,0],[0,0],[0.5,0]]]})",
        R"({"kind":"pure","dims":[2,2],
            "coeffs":[[[0.7071067811865476,0],[0,0]],[[0,0],[0.7071067811865476,0]]]})",
    };
    for (const char* text : fixtures) {
        const StateValue once = parse_state_file(text);
        const std::string serialized = serialize_state(once);
        const StateValue twice = parse_state_file(serialized);
        REQUIRE(serialized == serialize_state(twice));  // canonical after one pass
    }

    const SCCoefficients sc = random_sc(123, 3, 3);
    const StateValue reparsed = parse_state_file(serialize_state(sc));
    const auto& back = std::get<SCCoefficients>(reparsed);
    REQUIRE(back.parties() == 3);
    REQUIRE((back.coefficients() - sc.coefficients()).norm() < 1e-12);
}

TEST_CASE("json writer emits deterministic bytes") {
    JsonWriter w;
    w.begin_object();
    w.key("a").value(1);
    w.key("b").begin_array();
    w.value(1.5);
    w.value(true);
    w.value("x\"y");
    w.end_array();
    w.key("c").value(Complex(0.25, -1.0));
    w.end_object();
    REQUIRE(w.str() == R"({"a":1,"b":[1.5,true,"x\"y"],"c":[0.25,-1]})");
}

TEST_CASE("json number formatting") {
    REQUIRE(JsonWriter::format_number(0.1) == "0.1");
    REQUIRE(JsonWriter::format_number(1.0) == "1");
    REQUIRE(JsonWriter::format_number(-0.0) == "0");  // -0 collapses
    REQUIRE(JsonWriter::format_number(0.7549427179427943) == "0.754942717943");
    REQUIRE(JsonWriter::format_number(std::numeric_limits<double>::infinity()) == "\"inf\"");
    REQUIRE(JsonWriter::format_number(-std::numeric_limits<double>::infinity()) ==
            "\"-inf\"");
    REQUIRE(JsonWriter::format_number(std::numeric_limits<double>::quiet_NaN()) ==
            "\"nan\"");
}
