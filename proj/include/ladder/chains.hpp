#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ladder/lattice.hpp"
#include "ladder/shape.hpp"

namespace ladder {

/// The sequence of incremented coordinates along a maximal chain. Entries lie
/// in [1, limit] where limit = n + 1; as a multiset they are forced by the
/// shape: i appears delta_i times for i <= n, and n+1 appears r-1 times.
struct PositionTuple {
    std::vector<int> entries;
    int limit = 1;

    bool operator==(const PositionTuple&) const = default;

    /// Maximal strictly increasing runs, as half-open index ranges.
    std::vector<std::pair<int, int>> runs() const;

    /// Number of maximal strictly increasing runs; 0 for the empty tuple.
    int sequence_index() const;
};

std::string to_string(const PositionTuple& t);

/// A maximal chain of the lattice: points listed bottom-to-top, consecutive
/// points differing by one unit step. points.size() == r + sum(delta), and
/// positions records the steps.
struct MaximalChain {
    std::vector<LatticePoint> points;
    PositionTuple positions;

    bool operator==(const MaximalChain&) const = default;
    int length() const { return static_cast<int>(points.size()); }
};

/// The multiset of step positions every maximal chain realizes, sorted.
std::vector<int> full_position_multiset(const LadderShape& shape);

/// Validates a bottom-to-top point list as a maximal chain and extracts its
/// position tuple. Throws not_a_chain on bad endpoints, non-unit steps, or a
/// point outside the lattice.
MaximalChain chain_from_points(const LadderShape& shape, std::vector<LatticePoint> points);

PositionTuple position_tuple(const LadderShape& shape, const std::vector<LatticePoint>& points);

/// Replays a position tuple from the bottom point. The entry multiset is
/// checked first (wrong_multiset); then each step must stay in the lattice
/// (invalid_step with the 1-based index of the first failure). Inverse of
/// position_tuple.
MaximalChain chain_from_positions(const LadderShape& shape, const std::vector<int>& entries);

/// Precedence of maximal chains as generator ranks: scan both point lists
/// from the top; at the first index where they differ, the chain whose point
/// outranks the other's wins. Total order; equal only for identical chains.
std::strong_ordering chain_precedence(const MaximalChain& a, const MaximalChain& b);

/// Depth-first enumeration of all maximal chains, steps explored in ascending
/// position order (so chains arrive in lexicographic position-tuple order).
/// Throws cap_exceeded past the cap.
void for_each_maximal_chain(const LadderShape& shape, std::uint64_t cap,
                            const std::function<void(const MaximalChain&)>& fn);

std::vector<MaximalChain> enumerate_maximal_chains(const LadderShape& shape,
                                                   std::uint64_t cap = kDefaultCap);

std::uint64_t count_maximal_chains(const LadderShape& shape, std::uint64_t cap = kDefaultCap);

/// Interior points b^s whose incoming step position is smaller than the
/// outgoing one (an ascent). Returns the 1-based point indices s, ascending;
/// there are exactly length - 1 - sequence_index of them.
std::vector<int> ascent_indices(const MaximalChain& chain);

/// Deletes the entries equal to n+1 (= limit); the result is the position
/// tuple of a maximal chain of the same ladder with r = 1, and its sequence
/// index never exceeds the original.
PositionTuple project_positions_to_r1(const PositionTuple& positions);

struct LinearQuotientsReport {
    bool pass = true;
    std::uint64_t chain_count = 0;
    std::uint64_t pairs_checked = 0;
    std::string counterexample; // empty when pass
};

/// Exhaustive check of the linear-quotient structure over all maximal chains:
/// for every chain B, the ascent points of B must coincide with the points
/// removable by a single swap to a higher-precedence chain, and for every
/// pair A > B some such swap must remove a point of B \ A. Quadratic in the
/// number of chains.
LinearQuotientsReport verify_linear_quotients(const LadderShape& shape,
                                              std::uint64_t cap = kDefaultCap);

} // namespace ladder
