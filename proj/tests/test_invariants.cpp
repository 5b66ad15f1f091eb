#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ladder/errors.hpp"
#include "ladder/invariants.hpp"
#include "random_shapes.hpp"

using namespace ladder;

namespace {

const LadderShape& example_shape_r2() {
    static const LadderShape shape = validate_shape({{1, 5}, {3, 6}, {4, 9}}, 2);
    return shape;
}

LadderShape wide_shape(int r = 1) {
    // [1,7],[7,12],[8,13],[9,14],[12,17],[14,18]: mixed offsets (6,1,1,3,2).
    return validate_shape({{1, 7}, {7, 12}, {8, 13}, {9, 14}, {12, 17}, {14, 18}}, r);
}

// Rounds in which each row moves, from the greedy construction.
std::map<int, std::set<int>> appearance_sets(const GreedyChain& greedy) {
    std::map<int, std::set<int>> out;
    for (size_t k = 0; k < greedy.rounds.size(); ++k)
        for (int p : greedy.rounds[k]) out[p].insert(static_cast<int>(k) + 1);
    return out;
}

std::set<int> interval_set(int lo, int hi) {
    std::set<int> out;
    for (int k = lo; k <= hi; ++k) out.insert(k);
    return out;
}

} // namespace

TEST_CASE("greedy construction on the 3x9 ladder, r=2") {
    const auto greedy = greedy_chain(example_shape_r2());
    const std::vector<std::vector<int>> expected_rounds{
        {1, 3, 4}, {2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 3}};
    CHECK(greedy.rounds == expected_rounds);
    CHECK(greedy.sequence_index == 5);
    CHECK(greedy.chain.positions.entries ==
          std::vector<int>{1, 3, 4, 2, 3, 1, 2, 3, 1, 2, 3, 1, 3});
    CHECK(greedy.chain.length() == 14);
    CHECK(greedy.chain.points.front() == LatticePoint{{1, 3, 4, 1}});
    CHECK(greedy.chain.points[4] == LatticePoint{{2, 4, 5, 2}});
    CHECK(greedy.chain.points.back() == LatticePoint{{5, 6, 9, 2}});
}

TEST_CASE("greedy construction on the 3x9 ladder, r=1") {
    auto shape = example_shape_r2();
    shape.r = 1;
    const auto greedy = greedy_chain(shape);
    CHECK(greedy.chain.positions.entries == std::vector<int>{1, 3, 2, 3, 1, 2, 3, 1, 2, 3, 1, 3});
    CHECK(greedy.sequence_index == 5);
}

TEST_CASE("greedy construction on the one-point lattice") {
    const auto greedy = greedy_chain(validate_shape({{1, 1}}, 1));
    CHECK(greedy.rounds.empty());
    CHECK(greedy.sequence_index == 0);
    CHECK(greedy.chain.length() == 1);
}

TEST_CASE("greedy rounds never ascend across a boundary") {
    std::mt19937 rng(1729);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = std::uniform_int_distribution<int>(1, 3)(rng);
        const auto greedy = greedy_chain(testgen::random_shape(rng, 10, r));
        for (size_t k = 0; k + 1 < greedy.rounds.size(); ++k) {
            CHECK(greedy.rounds[k].back() >= greedy.rounds[k + 1].front());
            CHECK(std::is_sorted(greedy.rounds[k].begin(), greedy.rounds[k].end()));
        }
    }
}

TEST_CASE("analytic spread") {
    CHECK(analytic_spread(example_shape_r2()) == std::pair<int, int>{13, 14});
    CHECK(analytic_spread(validate_shape({{1, 1}}, 1)) == std::pair<int, int>{1, 1});
    for (int n = 1; n <= 4; ++n)
        for (int m = n; m <= n + 4; ++m)
            CHECK(analytic_spread(generic_shape(n, m)).first == n * (m - n) + 1);
}

TEST_CASE("regularity, a-invariant, reduction number of the running example") {
    const auto& shape = example_shape_r2();
    CHECK(regularity(shape) == 8);
    CHECK(a_invariant(shape) == -6);
    CHECK(reduction_number(shape) == 8);
    CHECK(poset_stats(shape) == std::pair<int, int>{13, 4});
}

TEST_CASE("regularity of the wide mixed-offset ladder across r") {
    CHECK(analytic_spread(wide_shape()).first == 31);
    CHECK(sequence_index_A1(wide_shape()) == 7);
    CHECK(regularity(wide_shape()) == 23);
    for (int r = 2; r <= 8; ++r) CHECK(regularity(wide_shape(r)) == r + 22);
    for (int r = 9; r <= 10; ++r) CHECK(regularity(wide_shape(r)) == 30);
}

TEST_CASE("closed-form si on the wide ladder uses the block decomposition") {
    const auto blocks = vu_decomposition(wide_shape());
    CHECK(blocks.v_blocks == std::vector<std::pair<int, int>>{{1, 1}, {4, 6}});
    CHECK(blocks.u_blocks == std::vector<std::pair<int, int>>{{2, 3}});
    const auto closed = si_closed_form(wide_shape());
    REQUIRE(closed.has_value());
    CHECK(closed->value == 7);
    CHECK(closed->provenance == "extended");
}

TEST_CASE("closed-form si with uniform offsets") {
    // Offsets all >= 2, deltas (3,5,2).
    const auto spread = validate_shape({{1, 4}, {4, 9}, {8, 10}}, 1);
    const auto closed = si_closed_form(spread);
    REQUIRE(closed.has_value());
    CHECK(closed->value == 5);
    CHECK(closed->provenance == "uniform-eps-ge2");
    CHECK(closed->value == sequence_index_A1(spread));

    for (int n = 1; n <= 4; ++n) {
        for (int m = n; m <= n + 4; ++m) {
            const auto generic = generic_shape(n, m);
            const auto form = si_closed_form(generic);
            REQUIRE(form.has_value());
            if (n >= 2) {
                CHECK(form->provenance == "uniform-eps-eq1");
                if (m > n) CHECK(form->value == m - 1);
            }
            CHECK(form->value == sequence_index_A1(generic));
        }
    }
}

TEST_CASE("closed-form si is absent when a block boundary misbehaves") {
    // Offsets (2,1): the leading v-block has eps=2 < width+2=3 and delta != eps-1.
    CHECK_FALSE(si_closed_form(example_shape_r2()).has_value());
}

TEST_CASE("closed-form si equals the construction whenever present") {
    std::mt19937 rng(60221);
    using testgen::OffsetStyle;
    for (OffsetStyle style : {OffsetStyle::AllGe2, OffsetStyle::AllEq1, OffsetStyle::Any}) {
        for (int trial = 0; trial < 80; ++trial) {
            const auto shape = testgen::random_shape(rng, 12, 1, style);
            const auto closed = si_closed_form(shape);
            if (style != OffsetStyle::Any) REQUIRE(closed.has_value());
            if (closed) CHECK(closed->value == sequence_index_A1(shape));
        }
    }
}

TEST_CASE("row appearance intervals under uniform offsets") {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = std::uniform_int_distribution<int>(1, 3)(rng);
        const bool wide_offsets = trial % 2 == 0;
        const auto shape = testgen::random_shape(
            rng, 9, r, wide_offsets ? testgen::OffsetStyle::AllGe2 : testgen::OffsetStyle::AllEq1);
        const auto greedy = greedy_chain(shape);
        const auto rounds = appearance_sets(greedy);
        for (int i = 1; i <= shape.n; ++i) {
            const auto it = rounds.find(i);
            const auto actual = it == rounds.end() ? std::set<int>{} : it->second;
            const auto expected = wide_offsets
                                      ? interval_set(1, shape.delta(i))
                                      : interval_set(shape.n - i + 1, shape.delta(i) + shape.n - i);
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("row appearance sets on the wide ladder follow the block rules") {
    const auto greedy = greedy_chain(wide_shape());
    const auto rounds = appearance_sets(greedy);
    const auto app = [&](int i) {
        const auto it = rounds.find(i);
        return it == rounds.end() ? std::set<int>{} : it->second;
    };

    // Rows of the trailing v-block fill [1, delta_i].
    for (int i = 4; i <= 6; ++i) CHECK(app(i) == interval_set(1, wide_shape().delta(i)));

    // u-block rows [2,3] sit behind the v-row 4: shifted full intervals.
    const int h = 3;
    for (int t = 2; t <= 3; ++t)
        CHECK(app(t) == interval_set(h - t + 2, wide_shape().delta(t) + h - t + 1));

    // Interval recurrence: row i-1's appearances from row i's interval.
    const auto shape = wide_shape();
    for (int i = 2; i <= shape.n; ++i) {
        const auto ai = app(i);
        if (ai.empty()) continue;
        const int lo = *ai.begin();
        const int hi = *ai.rbegin();
        if (static_cast<int>(ai.size()) != hi - lo + 1) continue; // not one interval
        const int eps = shape.epsilon(i - 1);
        std::set<int> expected = interval_set(1, eps - 1);
        const int cap = shape.delta(i - 1) + std::max(lo - eps + 1, 0);
        for (int k = lo + 1; k <= cap; ++k) expected.insert(k);
        CHECK(app(i - 1) == expected);
    }
}

TEST_CASE("interval appearance recurrence holds on random mixed shapes") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 150; ++trial) {
        const int r = std::uniform_int_distribution<int>(1, 3)(rng);
        const auto shape = testgen::random_shape(rng, 12, r);
        const auto rounds = appearance_sets(greedy_chain(shape));
        for (int i = 2; i <= shape.n; ++i) {
            const auto it = rounds.find(i);
            if (it == rounds.end()) continue;
            const auto& ai = it->second;
            const int lo = *ai.begin();
            const int hi = *ai.rbegin();
            if (static_cast<int>(ai.size()) != hi - lo + 1) continue; // not one interval
            const int eps = shape.epsilon(i - 1);
            std::set<int> expected = interval_set(1, eps - 1);
            const int cap = shape.delta(i - 1) + std::max(lo - eps + 1, 0);
            for (int k = lo + 1; k <= cap; ++k) expected.insert(k);
            const auto below = rounds.find(i - 1);
            const auto actual = below == rounds.end() ? std::set<int>{} : below->second;
            CHECK(actual == expected);
        }
    }
}

TEST_CASE("sequence index of the greedy chain is minimal over all chains") {
    std::mt19937 rng(3141);
    for (int trial = 0; trial < 25; ++trial) {
        const int r = std::uniform_int_distribution<int>(1, 3)(rng);
        const auto shape = testgen::random_small_shape(rng, 7, r, 2500);
        const int si_ar = sequence_index_Ar(shape);
        CHECK(si_ar == greedy_chain(shape).sequence_index);

        int min_si = shape.r + shape.sum_delta();
        int max_ascents = 0;
        for_each_maximal_chain(shape, kDefaultCap, [&](const MaximalChain& c) {
            min_si = std::min(min_si, c.positions.sequence_index());
            max_ascents = std::max(max_ascents, static_cast<int>(ascent_indices(c).size()));
            CHECK(static_cast<int>(ascent_indices(c).size()) ==
                  c.length() - 1 - c.positions.sequence_index());
        });
        CHECK(min_si == si_ar);
        CHECK(max_ascents == regularity(shape));
    }
}

TEST_CASE("report identities hold on random shapes") {
    std::mt19937 rng(8675309);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = std::uniform_int_distribution<int>(1, 4)(rng);
        const auto report = invariant_report(testgen::random_shape(rng, 10, r));
        CHECK(report.ell_M == report.ell_L + report.shape.r - 1);
        CHECK(report.si_Ar == std::max(report.shape.r - 1, report.si_A1));
        CHECK(report.reg == report.ell_M - 1 - report.si_Ar);
        CHECK(report.a_inv == report.reg - report.ell_M);
        CHECK(report.a_inv == -1 - report.si_Ar);
        CHECK(report.red_num == report.reg);
        CHECK(report.poset_card == report.ell_M - 1);
        CHECK(report.poset_rank == report.si_Ar - 1);
        CHECK(report.e_M ==
              binomial(report.ell_L + report.shape.r - 2, report.shape.r - 1) * report.e_L);
        CHECK(report.skew.cells() == report.ell_L - 1);
        if (report.closed_si) CHECK(report.closed_si->value == report.si_A1);
    }
}

TEST_CASE("degenerate one-point report") {
    const auto report = invariant_report(validate_shape({{1, 1}}, 1));
    CHECK(report.degenerate);
    CHECK(report.ell_L == 1);
    CHECK(report.ell_M == 1);
    CHECK(report.si_Ar == 0);
    CHECK(report.reg == 0);
    CHECK(report.a_inv == -1);
    CHECK(report.red_num == 0);
    CHECK(report.poset_card == 0);
    CHECK(report.poset_rank == -1);
    CHECK(report.e_L == 1);
    CHECK(report.e_M == 1);
}

TEST_CASE("generic shapes match their closed forms") {
    const std::vector<std::pair<int, int>> sizes{{2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {1, 4}};
    for (const auto& [n, m] : sizes) {
        const auto report = invariant_report(generic_shape(n, m));
        CHECK(report.ell_L == n * (m - n) + 1);
        CHECK(report.reg == (n - 1) * (m - n - 1));
        CHECK(report.a_inv == -m);
    }
    CHECK(invariant_report(generic_shape(1, 6)).reg == 0);
    CHECK_THROWS_AS(generic_shape(3, 2), bound_violation);
}

TEST_CASE("sparse two-row shapes match the worked example") {
    const auto report = invariant_report(sparse_2xm_shape(6, 2, 1));
    CHECK(report.ell_L == 6);
    CHECK(report.reg == 2);
    CHECK(report.a_inv == -4);

    CHECK_THROWS_AS(sparse_2xm_shape(6, 0, 1), bound_violation);
    CHECK_THROWS_AS(sparse_2xm_shape(6, 2, -1), bound_violation);
    CHECK_THROWS_AS(sparse_2xm_shape(4, 2, 2), bound_violation);
}

TEST_CASE("running the construction at r agrees with the r-1 shortcut") {
    std::mt19937 rng(1234321);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = std::uniform_int_distribution<int>(1, 5)(rng);
        const auto shape = testgen::random_shape(rng, 10, r);
        CHECK(greedy_chain(shape).sequence_index ==
              std::max(shape.r - 1, sequence_index_A1(shape)));
    }
}
