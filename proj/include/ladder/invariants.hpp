#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladder/bigint.hpp"
#include "ladder/chains.hpp"
#include "ladder/shape.hpp"
#include "ladder/tableaux.hpp"

namespace ladder {

/// The distinguished maximal chain built round by round: each round collects
/// every admissible step position at the round's start and plays them in
/// ascending order. Its sequence index (= number of rounds) is minimal among
/// all maximal chains.
struct GreedyChain {
    MaximalChain chain;
    std::vector<std::vector<int>> rounds; // ascending within each round
    int sequence_index = 0;               // == rounds.size()
};

GreedyChain greedy_chain(const LadderShape& shape);

/// Sequence index of the greedy chain at r = 1 (runs the construction on a
/// copy of the shape with r = 1).
int sequence_index_A1(const LadderShape& shape);

/// Sequence index of the greedy chain at the shape's own r, computed as
/// max(r - 1, sequence_index_A1); agrees with running the construction at r.
int sequence_index_Ar(const LadderShape& shape);

/// (ell_L, ell_M) = (1 + sum(delta), r + sum(delta)): the dimensions of the
/// fiber rings of L and of the r-fold module.
std::pair<int, int> analytic_spread(const LadderShape& shape);

int regularity(const LadderShape& shape);       // ell_M - 1 - si(A^r)
int a_invariant(const LadderShape& shape);      // -1 - si(A^r)
int reduction_number(const LadderShape& shape); // equals the regularity

/// (cardinality, rank) of the poset of join-irreducibles of the lattice:
/// (ell_M - 1, si(A^r) - 1). The empty poset has rank -1.
std::pair<int, int> poset_stats(const LadderShape& shape);

/// Rows split into maximal blocks: v_blocks collects the rows followed by an
/// offset >= 2 (plus the last row), u_blocks the rows followed by an offset
/// of exactly 1. Intervals are 1-based and ascending.
struct VUDecomposition {
    std::vector<std::pair<int, int>> v_blocks;
    std::vector<std::pair<int, int>> u_blocks;
};

VUDecomposition vu_decomposition(const LadderShape& shape);

struct ClosedSi {
    int value = 0;
    // "uniform-eps-ge2" | "uniform-eps-eq1" | "extended"
    std::string provenance;
};

/// Closed form for sequence_index_A1 when the shape's offsets allow one:
/// all offsets >= 2 -> max(delta); all offsets = 1 -> max(delta_i + n - i)
/// over rows that move at all; otherwise the block-decomposition formula when
/// each v-block boundary satisfies its side condition. Advisory: callers fall
/// back to the construction, and the two are cross-checked in tests.
std::optional<ClosedSi> si_closed_form(const LadderShape& shape);

/// Row intervals [i, m-n+i]: the ladder of a fully generic n x m matrix.
LadderShape generic_shape(int n, int m, int r = 1);

/// Rows [1, eps+s], [eps+1, m]: the 2 x m two-block staircase. Requires
/// eps >= 1, s >= 0, m - eps - s > 0.
LadderShape sparse_2xm_shape(int m, int eps, int s, int r = 1);

/// Everything the engine knows about one shape, with exact multiplicities.
struct InvariantReport {
    LadderShape shape;
    int ell_L = 0;
    int ell_M = 0;
    int si_A1 = 0;
    int si_Ar = 0;
    int reg = 0;
    int a_inv = 0;
    int red_num = 0;
    std::optional<ClosedSi> closed_si;
    BigInt e_L;
    BigInt e_M;
    int poset_card = 0;
    int poset_rank = 0;
    SkewShape skew;
    bool degenerate = false;
};

InvariantReport invariant_report(const LadderShape& shape);

} // namespace ladder
