#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ladder {

using Interval = std::pair<int, int>; // (u, v), 1-based inclusive column bounds

/// A validated staircase of row intervals [u_i, v_i] inside an n x m grid,
/// together with the copy count r of the module and the derived row data:
/// deltas[i] = v_i - u_i and epsilons[j] = u_{j+2} - u_{j+1} (0-based storage,
/// 1-based semantics throughout).
///
/// Invariants (enforced by validate_shape):
///   u_1 = 1, v_n = m, u_i <= v_i, u and v strictly increasing,
///   u_i <= v_{i-1} + 1 (the rows cover [m] without gaps).
struct LadderShape {
    int n = 0;
    int m = 0;
    int r = 1;
    std::vector<Interval> intervals;
    std::vector<int> deltas;   // size n
    std::vector<int> epsilons; // size n-1

    int u(int i) const { return intervals[static_cast<size_t>(i - 1)].first; }
    int v(int i) const { return intervals[static_cast<size_t>(i - 1)].second; }
    int delta(int i) const { return deltas[static_cast<size_t>(i - 1)]; }
    int epsilon(int j) const { return epsilons[static_cast<size_t>(j - 1)]; }

    int sum_delta() const;

    // True when the lattice has a single point (r = 1 and every row is pinned).
    bool degenerate() const { return r == 1 && sum_delta() == 0; }
};

/// Checks all shape invariants and fills in the derived data.
/// Throws strictness_violation, gap_violation, empty_interval, or
/// bound_violation naming the first offending row.
LadderShape validate_shape(const std::vector<Interval>& intervals, int r);

/// Repairs weakly monotone interval lists into strictly increasing ones:
/// a left-to-right pass bumps u_i to u_{i-1}+1, then a right-to-left pass cuts
/// v_{i-1} to v_i - 1. The set of strictly increasing column tuples through
/// the rows is unchanged. Idempotent.
/// Throws degenerate_ladder when a row squeezes shut, gap_violation when the
/// result (or input) leaves uncovered columns.
std::vector<Interval> normalize_shape(std::vector<Interval> intervals);

std::string interval_list_to_string(const std::vector<Interval>& intervals);

} // namespace ladder
