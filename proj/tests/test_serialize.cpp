#include <random>

#include "doctest.h"
#include "icl/serialize.hpp"
#include "test_support.hpp"

using namespace icl;

TEST_CASE("problem JSON layout") {
    auto p = IndexCodingProblem::uniform(20, {4});
    auto j = nlohmann::json::parse(serialize_problem(p));
    CHECK(j["version"] == 1);
    CHECK(j["k"] == 20);
    REQUIRE(j["antidotes"].size() == 20);
    CHECK(j["antidotes"][0] == nlohmann::json::array({4}));
    CHECK(serialize_problem(p).rfind(R"({"version":1,"k":20,"antidotes":[[4],)", 0) == 0);
}

TEST_CASE("code JSON layout") {
    auto c = LinearIndexCode::make(6, {{5, 1}, {2, 6}});
    CHECK(serialize_code(c) == R"({"version":1,"k":6,"length":2,"symbols":[[1,5],[2,6]]})");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_problem(R"({"version":1,"k":5,"antidotes":[[0],[1],[1],[1],[1]]})"),
                         doctest::Contains("offset 0 out of range"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem("{not json"), doctest::Contains("malformed JSON"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"version":2,"k":1,"antidotes":[[]]})"), doctest::Contains("version"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_problem(R"({"version":1,"k":2,"antidotes":[[1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem(R"({"version":1,"k":2,"antidotes":[[1],["a"]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem(R"({"version":1,"k":2.5,"antidotes":[[1],[1]]})"), std::invalid_argument);

    CHECK_THROWS_WITH_AS(parse_code(R"({"version":1,"k":3,"length":2,"symbols":[[1,2]]})"),
                         doctest::Contains("length"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_code(R"({"version":1,"k":3,"length":2,"symbols":[[1,2],[4]]})"),
                         doctest::Contains("symbol 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code(R"([1,2,3])"), std::invalid_argument);
}

TEST_CASE("property: JSON round trip is the identity") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        auto p = icl::testing::random_problem(rng, 40, 6);
        REQUIRE(parse_problem(serialize_problem(p)) == p);
        auto c = icl::testing::random_code(rng, p.k());
        auto back = parse_code(serialize_code(c));
        REQUIRE(back == c);
        REQUIRE(back.symbols() == c.symbols());
    }
}

TEST_CASE("export_dot") {
    SUBCASE("smallest cyclic case") {
        CHECK(export_dot(IndexCodingProblem::uniform(2, {1})) ==
              "digraph side_information {\n  1;\n  2;\n  1 -> 2;\n  2 -> 1;\n}\n");
    }
    SUBCASE("example 1 has one edge per receiver") {
        const auto dot = export_dot(IndexCodingProblem::uniform(20, {4}));
        CHECK(std::count(dot.begin(), dot.end(), '>') == 20);
        CHECK(dot.find("  17 -> 1;\n") != std::string::npos);
        CHECK(std::count(dot.begin(), dot.end(), ';') == 40);
    }
    SUBCASE("no side information") {
        CHECK(export_dot(IndexCodingProblem::uniform(3, {})) == "digraph side_information {\n  1;\n  2;\n  3;\n}\n");
    }
    SUBCASE("edges sorted by target within a node") {
        const auto dot = export_dot(IndexCodingProblem::uniform(5, {1, 4}));
        CHECK(dot.find("  2 -> 1;\n  2 -> 3;\n") != std::string::npos);
    }
}

TEST_CASE("format_symbol") {
    CHECK(format_symbol({1, 5, 9}) == "x1+x5+x9");
    CHECK(format_symbol({7}) == "x7");
}
