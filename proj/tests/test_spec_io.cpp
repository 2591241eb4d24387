#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace stratakit;

namespace {

std::string message_of(const char* text) {
    try {
        load_spec(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        return e.what();
    }
    FAIL("document was accepted");
    return {};
}

} // namespace

TEST_CASE("malformed JSON reports line and column") {
    const auto msg = message_of("{\n  \"n\": 3,,\n}");
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
}

TEST_CASE("schema errors name the field") {
    CHECK(message_of(R"({"finite_generators": []})").find("\"n\"") != std::string::npos);
    CHECK(message_of(R"({"n": 0})").find("n:") != std::string::npos);
    CHECK(message_of(R"({"n": 2, "finite_generators": [[[1, 0], [0, "x"]]]})").find("finite_generators[0][1][1]") !=
          std::string::npos);
    CHECK(message_of(R"({"n": 2, "finite_generators": [[[1, 0], [0, "1/0"]]]})").find("finite_generators[0][1][1]") !=
          std::string::npos);
    CHECK(message_of(R"({"n": 2, "torus": {"blocks": [[1, 3]], "weights": [[1]]}})").find("torus.blocks[0]") !=
          std::string::npos);
    CHECK(message_of(R"({"n": 1, "invariants": [{"name": "a", "terms": {"1": 1}}]})").find("invariants[0].terms") !=
          std::string::npos);
    CHECK(message_of(R"({"n": 1, "relations": [{"name": "r", "kind": "lt", "terms": {}}]})").find("relations[0].kind") !=
          std::string::npos);
}

TEST_CASE("rational matrix entries") {
    const auto spec = load_spec(R"({"n": 2, "finite_generators": [[["3/5", "4/5"], ["4/5", "-3/5"]]]})");
    CHECK(spec.finite_group().order() == 2);
    CHECK(spec.generators()[0](0, 1) == test::r("4/5"));
}

TEST_CASE("missing file is a parse error") {
    CHECK_THROWS_KIND(load_spec_file("/nonexistent/spec.json"), ErrorKind::ParseError);
}

TEST_CASE("non-invariant polynomials are rejected on load") {
    // x1 alone is not invariant under rotation of the (x1, x2) plane
    const char* text = R"({"n": 2, "torus": {"blocks": [[1, 2]], "weights": [[1]]},
                          "invariants": [{"name": "r", "terms": {"2,0,0,0": 1, "0,2,0,0": 1}},
                                         {"name": "bad", "terms": {"1,0,0,0": 1}}]})";
    try {
        load_spec(text);
        FAIL("accepted a non-invariant polynomial");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonInvariantPolynomial);
        CHECK(std::string(e.what()).find("bad") != std::string::npos);
    }
}

TEST_CASE("bundled specs load") {
    for (const char* name : test::kAllSpecs) {
        CAPTURE(name);
        CHECK_NOTHROW(test::bundled(name));
    }
    const auto example = test::bundled("example");
    CHECK(example.invariant_data().invariants.size() == 7);
    CHECK(example.invariant_data().relations.size() == 4);
    CHECK(example.invariant_data().region_fixture == "double-cone");
}
