#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "leximax/io.hpp"

using namespace leximax;

namespace {

const char* kInstanceDoc = R"({
  "candidates": ["c1", "c2"],
  "groups": ["G1", "G2"],
  "values": [[1, 0], [0, 1]],
  "k": 1
})";

const char* kFiniteDoc = R"({
  "solutions": ["S1", "S2"],
  "groups": ["G1", "G2"],
  "utilities": [[0, 1], [0.01, 0.01]]
})";

}  // namespace

TEST_CASE("instance documents parse") {
    const auto doc = parse_instance(kInstanceDoc);
    REQUIRE(std::holds_alternative<Instance>(doc));
    const auto& inst = std::get<Instance>(doc);
    CHECK(inst.candidate_ids == std::vector<std::string>{"c1", "c2"});
    CHECK(inst.group_ids == std::vector<std::string>{"G1", "G2"});
    CHECK(inst.values == std::vector<std::vector<Real>>{{1, 0}, {0, 1}});
    CHECK(inst.k == 1);
}

TEST_CASE("finite instance documents parse") {
    const auto doc = parse_instance(kFiniteDoc);
    REQUIRE(std::holds_alternative<FiniteInstance>(doc));
    const auto& inst = std::get<FiniteInstance>(doc);
    CHECK(inst.solution_ids == std::vector<std::string>{"S1", "S2"});
    CHECK(inst.utilities[1][0] == 0.01);
}

TEST_CASE("syntax errors are parse category") {
    CHECK_THROWS_WITH_AS(parse_instance("{not json"),
                         doctest::Contains("parse:"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_instance(R"({"groups": ["G1"]})"),
                         doctest::Contains("parse:"), std::invalid_argument);
}

TEST_CASE("value range errors name the offending cell") {
    const std::string bad = R"({
      "candidates": ["c1"],
      "groups": ["G1"],
      "values": [[1.5]],
      "k": 1
    })";
    try {
        parse_instance(bad);
        FAIL("expected a range error");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("range:") == 0);
        CHECK(what.find("c1") != std::string::npos);
        CHECK(what.find("G1") != std::string::npos);
    }
}

TEST_CASE("k out of range is rejected") {
    CHECK_THROWS_AS(parse_instance(R"({
      "candidates": ["c1"],
      "groups": ["G1"],
      "values": [[0.5]],
      "k": 2
    })"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({
      "candidates": ["c1"],
      "groups": ["G1"],
      "values": [[0.5]],
      "k": 0
    })"),
                    std::invalid_argument);
}

TEST_CASE("serialization round-trips to the canonical form") {
    const auto doc = parse_instance(kInstanceDoc);
    const std::string canonical = serialize(std::get<Instance>(doc));
    const auto reparsed = parse_instance(canonical);
    CHECK(serialize(std::get<Instance>(reparsed)) == canonical);
    CHECK(canonical.back() == '\n');

    const auto fdoc = parse_instance(kFiniteDoc);
    const std::string fc = serialize(std::get<FiniteInstance>(fdoc));
    CHECK(serialize(std::get<FiniteInstance>(parse_instance(fc))) == fc);
}

TEST_CASE("marginal vectors parse and serialize") {
    const auto mv = parse_marginals(R"({"x": [0.5, 0.5], "k": 1})");
    CHECK(mv.x == std::vector<Real>{0.5, 0.5});
    CHECK(mv.k == 1);
    const std::string s = serialize(mv);
    const auto again = parse_marginals(s);
    CHECK(again.x == mv.x);
    CHECK(serialize(again) == s);
    CHECK_THROWS_AS(parse_marginals(R"({"x": [0.5]})"), std::invalid_argument);
}

TEST_CASE("round12 truncates to 12 significant digits") {
    CHECK(round12(0.5) == 0.5);
    CHECK(round12(1.0 / 3.0) == 0.333333333333);
    CHECK(round12(1234567890123456.0) == 1234567890120000.0);
    CHECK(round12(0.0) == 0.0);
}
