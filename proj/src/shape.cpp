#include "ladder/shape.hpp"

#include <numeric>
#include <sstream>

#include "ladder/errors.hpp"

namespace ladder {

int LadderShape::sum_delta() const {
    return std::accumulate(deltas.begin(), deltas.end(), 0);
}

std::string interval_list_to_string(const std::vector<Interval>& intervals) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < intervals.size(); ++i) {
        if (i) out << ',';
        out << '[' << intervals[i].first << ',' << intervals[i].second << ']';
    }
    out << ']';
    return out.str();
}

LadderShape validate_shape(const std::vector<Interval>& intervals, int r) {
    if (intervals.empty()) throw bound_violation("interval list is empty");
    if (r < 1) throw bound_violation("copy count r must be >= 1");

    const int n = static_cast<int>(intervals.size());
    if (intervals[0].first != 1)
        throw bound_violation("u_1 must be 1, got " + std::to_string(intervals[0].first));

    for (int i = 1; i <= n; ++i) {
        const auto [u, v] = intervals[static_cast<size_t>(i - 1)];
        if (u > v)
            throw empty_interval("row " + std::to_string(i) + " is empty: u=" +
                                 std::to_string(u) + " > v=" + std::to_string(v));
        if (i >= 2) {
            const auto [up, vp] = intervals[static_cast<size_t>(i - 2)];
            if (up >= u)
                throw strictness_violation("u_" + std::to_string(i - 1) + "=" + std::to_string(up) +
                                           " >= u_" + std::to_string(i) + "=" + std::to_string(u));
            if (vp >= v)
                throw strictness_violation("v_" + std::to_string(i - 1) + "=" + std::to_string(vp) +
                                           " >= v_" + std::to_string(i) + "=" + std::to_string(v));
            if (u > vp + 1)
                throw gap_violation("u_" + std::to_string(i) + "=" + std::to_string(u) +
                                    " > v_" + std::to_string(i - 1) + "+1=" + std::to_string(vp + 1) +
                                    ": disconnected ladder");
        }
    }

    LadderShape shape;
    shape.n = n;
    shape.m = intervals.back().second;
    shape.r = r;
    shape.intervals = intervals;
    shape.deltas.reserve(static_cast<size_t>(n));
    for (const auto& [u, v] : intervals) shape.deltas.push_back(v - u);
    shape.epsilons.reserve(static_cast<size_t>(n - 1));
    for (int i = 1; i < n; ++i)
        shape.epsilons.push_back(intervals[static_cast<size_t>(i)].first -
                                 intervals[static_cast<size_t>(i - 1)].first);

    // Consequences of the primary invariants; a failure here is a bug.
    for (int i = 1; i < n; ++i) {
        if (shape.delta(i) < shape.epsilon(i) - 1)
            throw gap_violation("delta_" + std::to_string(i) + " < epsilon_" + std::to_string(i) + " - 1");
        if (shape.delta(i) > shape.delta(i + 1) + shape.epsilon(i) - 1)
            throw strictness_violation("delta_" + std::to_string(i) + " > delta_" +
                                       std::to_string(i + 1) + " + epsilon_" + std::to_string(i) +
                                       " - 1");
    }
    return shape;
}

std::vector<Interval> normalize_shape(std::vector<Interval> intervals) {
    if (intervals.empty()) throw bound_violation("interval list is empty");
    const int n = static_cast<int>(intervals.size());

    for (int i = 1; i < n; ++i) {
        auto& cur = intervals[static_cast<size_t>(i)];
        const auto& prev = intervals[static_cast<size_t>(i - 1)];
        if (prev.first >= cur.first) cur.first = prev.first + 1;
    }
    for (int i = n - 1; i >= 1; --i) {
        auto& prev = intervals[static_cast<size_t>(i - 1)];
        const auto& cur = intervals[static_cast<size_t>(i)];
        if (prev.second >= cur.second) prev.second = cur.second - 1;
    }

    for (int i = 1; i <= n; ++i) {
        const auto [u, v] = intervals[static_cast<size_t>(i - 1)];
        if (u > v)
            throw degenerate_ladder("row " + std::to_string(i) +
                                    " has no admissible column after normalization");
        if (i >= 2 && u > intervals[static_cast<size_t>(i - 2)].second + 1)
            throw gap_violation("rows " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                " leave uncovered columns");
    }
    return intervals;
}

} // namespace ladder
