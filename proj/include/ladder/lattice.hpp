#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ladder/shape.hpp"

namespace ladder {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// A point of the lattice attached to a shape: n strictly increasing column
/// indices followed by a copy index. coords.size() == n + 1, all values
/// 1-based.
struct LatticePoint {
    std::vector<int> coords;

    int column(int i) const { return coords[static_cast<size_t>(i - 1)]; }
    int copy() const { return coords.back(); }

    bool operator==(const LatticePoint&) const = default;
};

std::string to_string(const LatticePoint& p);

/// The unique minimum (u_1, ..., u_n, 1) and maximum (v_1, ..., v_n, r).
LatticePoint bottom(const LadderShape& shape);
LatticePoint top(const LadderShape& shape);

bool is_lattice_point(const LadderShape& shape, const LatticePoint& p);

/// Plain lexicographic comparison of coordinate tuples.
std::strong_ordering lex_compare(const LatticePoint& a, const LatticePoint& b);

/// Precedence of points as chain entries / generator ranks: a outranks b
/// exactly when a's first differing coordinate is smaller. The bottom point
/// outranks everything; within a chain, listing points bottom-to-top lists
/// them in descending precedence.
std::strong_ordering point_precedence(const LatticePoint& a, const LatticePoint& b);

/// True when a <= b in every coordinate.
bool componentwise_le(const LatticePoint& a, const LatticePoint& b);

/// Componentwise min / max. The staircase structure keeps both inside the
/// lattice; closure is asserted.
LatticePoint meet(const LadderShape& shape, const LatticePoint& a, const LatticePoint& b);
LatticePoint join(const LadderShape& shape, const LatticePoint& a, const LatticePoint& b);

/// The coordinates p for which p + e_p stays in the lattice, ascending.
/// p < n needs a gap above row p and headroom in row p; p = n needs headroom;
/// p = n+1 needs copy < r.
std::vector<int> step_positions(const LadderShape& shape, const LatticePoint& p);

/// The upper covers a + e_p, in ascending position order.
std::vector<LatticePoint> covers(const LadderShape& shape, const LatticePoint& a);

/// All lattice points in descending precedence (= ascending lexicographic)
/// order. Throws cap_exceeded past the cap.
std::vector<LatticePoint> enumerate_lattice(const LadderShape& shape,
                                            std::uint64_t cap = kDefaultCap);

std::uint64_t lattice_size(const LadderShape& shape, std::uint64_t cap = kDefaultCap);

} // namespace ladder
