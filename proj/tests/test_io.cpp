#include <doctest.h>

#include "ladder/invariants.hpp"
#include "ladder/io.hpp"
#include "ladder/render.hpp"

using namespace ladder;
using nlohmann::json;

TEST_CASE("spec parsing accepts ladders and raw skews") {
    const auto ladder_spec = parse_spec(json::parse(R"({"intervals": [[1,5],[3,6],[4,9]], "r": 2})"));
    REQUIRE(ladder_spec.intervals.has_value());
    CHECK(ladder_spec.r == 2);
    CHECK_FALSE(ladder_spec.skew.has_value());

    const auto defaulted = parse_spec(json::parse(R"({"intervals": [[1,2]]})"));
    CHECK(defaulted.r == 1);

    const auto skew_spec = parse_spec(json::parse(R"({"lambda": [4,3,3], "mu": [2,1,0]})"));
    REQUIRE(skew_spec.skew.has_value());
    CHECK(skew_spec.skew->lambda == std::vector<int>{4, 3, 3});
}

TEST_CASE("spec parsing rejects malformed objects") {
    CHECK_THROWS_AS(parse_spec(json::parse("[1,2]")), spec_error);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"intervals": [[1,2,3]]})")), spec_error);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"intervals": [[1,"2"]]})")), spec_error);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"intervals": []})")), spec_error);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"r": 2})")), spec_error);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"intervals": [[1,2]], "lambda": [1]})")), spec_error);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"intervals": [[1,2]], "r": 1.5})")), spec_error);
    CHECK_THROWS_AS(parse_spec(json::parse(R"({"intervals": [[1,2]]})"), true), spec_error);
}

TEST_CASE("reports round-trip through JSON") {
    for (const auto& shape : {validate_shape({{1, 5}, {3, 6}, {4, 9}}, 2),
                              validate_shape({{1, 1}}, 1),
                              validate_shape({{1, 7}, {7, 12}, {8, 13}, {9, 14}, {12, 17}, {14, 18}}, 3)}) {
        const auto report = invariant_report(shape);
        const auto j = report_to_json(report);
        const auto back = report_from_json(j);
        CHECK(report_to_json(back) == j);
        CHECK(back.e_L == report.e_L);
        CHECK(back.e_M == report.e_M);
        CHECK(back.skew == report.skew);
        CHECK(back.shape.intervals == report.shape.intervals);
    }
}

TEST_CASE("report JSON carries big integers as decimal strings") {
    const auto j = report_to_json(invariant_report(validate_shape({{1, 5}, {3, 6}, {4, 9}}, 2)));
    CHECK(j.at("e_L") == "3762");
    CHECK(j.at("e_M") == "48906");
    CHECK(j.at("si_closed_form").is_null());
}

TEST_CASE("rendering the figure tableau") {
    const auto shape = validate_shape({{1, 5}, {3, 6}, {4, 9}}, 1);
    const auto tableau =
        chain_to_tableau(shape, chain_from_positions(shape, {1, 3, 2, 3, 1, 2, 3, 1, 2, 3, 1, 3}));
    CHECK(render_skew_tableau(tableau) ==
          "░░  2  4  7 10 12\n"
          "░░  3  6  9\n"
          " 1  5  8 11\n");
}

TEST_CASE("rendering hook grids and shapes") {
    CHECK(render_hook_grid({6, 4, 4}) ==
          "8 7 6 5 2 1\n"
          "5 4 3 2\n"
          "4 3 2 1\n");
    CHECK(render_skew_shape(make_skew({3, 2}, {1, 0})) ==
          "░ · ·\n"
          "· ·\n");
    CHECK(render_skew_shape(make_skew({0}, {0})) == "(empty diagram)\n");
}
