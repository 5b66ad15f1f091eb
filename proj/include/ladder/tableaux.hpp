#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ladder/bigint.hpp"
#include "ladder/chains.hpp"
#include "ladder/shape.hpp"

namespace ladder {

/// A skew partition lambda/mu. Both parts have the same length; entries are
/// weakly decreasing, 0 <= mu_i <= lambda_i. Rows with lambda_i = mu_i are
/// allowed (and empty).
struct SkewShape {
    std::vector<int> lambda;
    std::vector<int> mu;

    bool operator==(const SkewShape&) const = default;

    int rows() const { return static_cast<int>(lambda.size()); }
    int cells() const; // K = sum(lambda_i - mu_i)
    int mu_cells() const;

    bool in_lambda(int row, int col) const;
    bool in_skew(int row, int col) const;
};

/// Validates and canonicalizes (mu padded with zeros to lambda's length).
SkewShape make_skew(std::vector<int> lambda, std::vector<int> mu);

/// The skew partition attached to a ladder: mu_i = sum_{j <= n-i}(eps_j - 1),
/// lambda_i = mu_i + delta_{n+1-i}. Its cell count is sum(delta); r plays no
/// role here.
SkewShape ladder_skew_shape(const LadderShape& shape);

/// Arm + leg + 1 of a cell of the straight shape lambda. Throws cell_outside.
int hook_length(const std::vector<int>& lambda, int row, int col);

/// A standard filling: rows[i] lists row i+1's entries left to right.
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    bool operator==(const SkewTableau&) const = default;
};

/// A diagram reachable from the mu cells by excited moves (an active cell
/// (i,j) — one with (i+1,j), (i,j+1), (i+1,j+1) all free inside lambda —
/// slides to (i+1,j+1)). Cells are kept sorted.
struct ExcitedDiagram {
    std::vector<std::pair<int, int>> cells;

    bool operator==(const ExcitedDiagram&) const = default;
    auto operator<=>(const ExcitedDiagram&) const = default;
};

/// Breadth-first closure of the mu diagram under excited moves, deduplicated
/// and returned sorted. cap = 0 means unbounded.
std::vector<ExcitedDiagram> enumerate_excited_diagrams(const SkewShape& shape,
                                                       std::uint64_t cap = 0);

/// sum over excited diagrams D of 1 / prod_{c in lambda \ D} hook(c),
/// as an exact rational.
BigRat skew_hook_sum(const SkewShape& shape);

/// K! * skew_hook_sum: the number of standard fillings of the skew shape,
/// via the excited-diagram hook formula. The rational sum must clear to an
/// integer; anything else throws.
BigInt count_skew_syt_hooks(const SkewShape& shape);

/// Independent count of the standard fillings by direct backtracking over
/// placements of 1..K. Throws cap_exceeded past the cap.
std::uint64_t count_skew_syt_backtracking(const SkewShape& shape,
                                          std::uint64_t cap = kDefaultCap);

void for_each_skew_syt(const SkewShape& shape, std::uint64_t cap,
                       const std::function<void(const SkewTableau&)>& fn);

/// For r = 1 chains: the occurrences of step position i, in order, fill row
/// n-i+1 of the ladder's skew shape left to right. Lands on a standard
/// tableau (not_standard if not, which would be a bug).
SkewTableau chain_to_tableau(const LadderShape& shape, const MaximalChain& chain);

/// Inverse direction: entry k in row n-i+1 forces step k to use position i.
/// Throws not_standard / not_a_chain on invalid input.
MaximalChain tableau_to_chain(const SkewTableau& tableau, const LadderShape& shape);

struct Multiplicity {
    BigInt e_L; // number of maximal chains at r = 1
    BigInt e_M; // binomial(ell_L + r - 2, r - 1) * e_L
};

Multiplicity multiplicity(const LadderShape& shape);

} // namespace ladder
