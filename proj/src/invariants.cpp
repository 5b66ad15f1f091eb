#include "ladder/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ladder/errors.hpp"
#include "ladder/lattice.hpp"

namespace ladder {

GreedyChain greedy_chain(const LadderShape& shape) {
    GreedyChain result;
    std::vector<LatticePoint> points{bottom(shape)};
    for (;;) {
        const auto round = step_positions(shape, points.back());
        if (round.empty()) break;
        for (int p : round) {
            LatticePoint next = points.back();
            ++next.coords[static_cast<size_t>(p - 1)];
            if (!is_lattice_point(shape, next))
                throw std::logic_error("greedy round left the lattice at " +
                                       to_string(points.back()));
            points.push_back(std::move(next));
        }
        result.rounds.push_back(round);
    }
    result.sequence_index = static_cast<int>(result.rounds.size());
    result.chain = chain_from_points(shape, std::move(points));

    // The rounds must be exactly the maximal increasing runs of the tuple.
    const auto runs = result.chain.positions.runs();
    if (static_cast<int>(runs.size()) != result.sequence_index)
        throw std::logic_error("greedy rounds disagree with the run decomposition");
    return result;
}

int sequence_index_A1(const LadderShape& shape) {
    if (shape.r == 1) return greedy_chain(shape).sequence_index;
    LadderShape base = shape;
    base.r = 1;
    return greedy_chain(base).sequence_index;
}

int sequence_index_Ar(const LadderShape& shape) {
    const int si = std::max(shape.r - 1, sequence_index_A1(shape));
    assert(si == greedy_chain(shape).sequence_index);
    return si;
}

std::pair<int, int> analytic_spread(const LadderShape& shape) {
    const int sum = shape.sum_delta();
    return {1 + sum, shape.r + sum};
}

int regularity(const LadderShape& shape) {
    return analytic_spread(shape).second - 1 - sequence_index_Ar(shape);
}

int a_invariant(const LadderShape& shape) {
    return -1 - sequence_index_Ar(shape);
}

int reduction_number(const LadderShape& shape) {
    return regularity(shape);
}

std::pair<int, int> poset_stats(const LadderShape& shape) {
    return {analytic_spread(shape).second - 1, sequence_index_Ar(shape) - 1};
}

VUDecomposition vu_decomposition(const LadderShape& shape) {
    std::vector<bool> in_v(static_cast<size_t>(shape.n) + 1, false);
    in_v[static_cast<size_t>(shape.n)] = true;
    for (int i = 1; i < shape.n; ++i)
        if (shape.epsilon(i) >= 2) in_v[static_cast<size_t>(i)] = true;

    VUDecomposition out;
    int i = 1;
    while (i <= shape.n) {
        const bool v = in_v[static_cast<size_t>(i)];
        int j = i;
        while (j < shape.n && in_v[static_cast<size_t>(j + 1)] == v) ++j;
        (v ? out.v_blocks : out.u_blocks).emplace_back(i, j);
        i = j + 1;
    }
    return out;
}

std::optional<ClosedSi> si_closed_form(const LadderShape& shape) {
    const int n = shape.n;
    const bool all_ge2 =
        std::all_of(shape.epsilons.begin(), shape.epsilons.end(), [](int e) { return e >= 2; });
    const bool all_eq1 =
        std::all_of(shape.epsilons.begin(), shape.epsilons.end(), [](int e) { return e == 1; });

    if (all_ge2) {
        // Row i is played in rounds 1..delta_i, so the last active round is
        // the largest delta.
        int value = 0;
        for (int d : shape.deltas) value = std::max(value, d);
        return ClosedSi{value, "uniform-eps-ge2"};
    }
    if (all_eq1) {
        // Row i is played in rounds n-i+1 .. delta_i+n-i; rows with delta_i=0
        // are never played and contribute nothing.
        int value = 0;
        for (int i = 1; i <= n; ++i)
            if (shape.delta(i) >= 1) value = std::max(value, shape.delta(i) + n - i);
        return ClosedSi{value, "uniform-eps-eq1"};
    }

    const auto blocks = vu_decomposition(shape);
    // Each v-block boundary must hand off cleanly to the u-block after it.
    for (size_t j = 0; j + 1 < blocks.v_blocks.size(); ++j) {
        const int h = blocks.v_blocks[j].second;
        const auto u_it =
            std::find_if(blocks.u_blocks.begin(), blocks.u_blocks.end(),
                         [&](const std::pair<int, int>& b) { return b.first == h + 1; });
        if (u_it == blocks.u_blocks.end())
            throw std::logic_error("v-block not followed by a u-block");
        const int width = u_it->second - u_it->first + 1;
        if (!(shape.epsilon(h) >= width + 2 || shape.delta(h) == shape.epsilon(h) - 1))
            return std::nullopt;
    }

    int value = 0;
    for (const auto& [g, h] : blocks.v_blocks)
        for (int i = g; i <= h; ++i) value = std::max(value, shape.delta(i));
    for (const auto& [g, h] : blocks.u_blocks)
        for (int t = g; t <= h; ++t)
            if (shape.delta(t) >= 1) value = std::max(value, shape.delta(t) + h - t + 1);
    return ClosedSi{value, "extended"};
}

LadderShape generic_shape(int n, int m, int r) {
    if (n < 1 || m < n) throw bound_violation("generic shape needs 1 <= n <= m");
    std::vector<Interval> intervals;
    intervals.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) intervals.emplace_back(i, m - n + i);
    return validate_shape(intervals, r);
}

LadderShape sparse_2xm_shape(int m, int eps, int s, int r) {
    if (eps < 1) throw bound_violation("sparse shape needs eps >= 1");
    if (s < 0) throw bound_violation("sparse shape needs s >= 0");
    if (m - eps - s <= 0) throw bound_violation("sparse shape needs m - eps - s > 0");
    return validate_shape({{1, eps + s}, {eps + 1, m}}, r);
}

InvariantReport invariant_report(const LadderShape& shape) {
    InvariantReport report;
    report.shape = shape;
    std::tie(report.ell_L, report.ell_M) = analytic_spread(shape);
    report.si_A1 = sequence_index_A1(shape);
    report.si_Ar = std::max(shape.r - 1, report.si_A1);
    report.reg = report.ell_M - 1 - report.si_Ar;
    report.a_inv = -1 - report.si_Ar;
    report.red_num = report.reg;
    report.closed_si = si_closed_form(shape);
    const auto mult = multiplicity(shape);
    report.e_L = mult.e_L;
    report.e_M = mult.e_M;
    std::tie(report.poset_card, report.poset_rank) = poset_stats(shape);
    report.skew = ladder_skew_shape(shape);
    report.degenerate = shape.degenerate();
    return report;
}

} // namespace ladder
