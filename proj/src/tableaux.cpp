#include "ladder/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "ladder/errors.hpp"

namespace ladder {

int SkewShape::cells() const {
    int k = 0;
    for (size_t i = 0; i < lambda.size(); ++i) k += lambda[i] - mu[i];
    return k;
}

int SkewShape::mu_cells() const {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

bool SkewShape::in_lambda(int row, int col) const {
    return row >= 1 && row <= rows() && col >= 1 && col <= lambda[static_cast<size_t>(row - 1)];
}

bool SkewShape::in_skew(int row, int col) const {
    return in_lambda(row, col) && col > mu[static_cast<size_t>(row - 1)];
}

SkewShape make_skew(std::vector<int> lambda, std::vector<int> mu) {
    if (lambda.empty()) throw error("empty outer partition");
    if (mu.size() > lambda.size()) throw error("inner partition longer than outer");
    mu.resize(lambda.size(), 0);
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0 || mu[i] < 0) throw error("negative part in a partition");
        if (mu[i] > lambda[i])
            throw error("inner partition exceeds outer in row " + std::to_string(i + 1));
        if (i > 0 && (lambda[i] > lambda[i - 1] || mu[i] > mu[i - 1]))
            throw error("partition parts must be non-increasing");
    }
    return SkewShape{std::move(lambda), std::move(mu)};
}

SkewShape ladder_skew_shape(const LadderShape& shape) {
    const int n = shape.n;
    std::vector<int> mu(static_cast<size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        int sum = 0;
        for (int j = 1; j <= n - i; ++j) sum += shape.epsilon(j) - 1;
        mu[static_cast<size_t>(i - 1)] = sum;
    }
    std::vector<int> lambda(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        lambda[static_cast<size_t>(i - 1)] = mu[static_cast<size_t>(i - 1)] + shape.delta(n + 1 - i);
    return make_skew(std::move(lambda), std::move(mu));
}

int hook_length(const std::vector<int>& lambda, int row, int col) {
    const int k = static_cast<int>(lambda.size());
    if (row < 1 || row > k || col < 1 || col > lambda[static_cast<size_t>(row - 1)])
        throw cell_outside("cell (" + std::to_string(row) + "," + std::to_string(col) +
                           ") lies outside the diagram");
    const int arm = lambda[static_cast<size_t>(row - 1)] - col;
    int leg = 0;
    for (int i = row + 1; i <= k; ++i)
        if (lambda[static_cast<size_t>(i - 1)] >= col) ++leg;
    return arm + leg + 1;
}

std::vector<ExcitedDiagram> enumerate_excited_diagrams(const SkewShape& shape, std::uint64_t cap) {
    ExcitedDiagram start;
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = 1; j <= shape.mu[static_cast<size_t>(i - 1)]; ++j)
            start.cells.emplace_back(i, j);

    std::set<ExcitedDiagram> seen{start};
    std::vector<ExcitedDiagram> queue{start};
    for (size_t head = 0; head < queue.size(); ++head) {
        const ExcitedDiagram current = queue[head];
        auto occupied = [&](int r, int c) {
            return std::binary_search(current.cells.begin(), current.cells.end(),
                                      std::make_pair(r, c));
        };
        auto free_in_lambda = [&](int r, int c) { return shape.in_lambda(r, c) && !occupied(r, c); };
        for (size_t idx = 0; idx < current.cells.size(); ++idx) {
            const auto [i, j] = current.cells[idx];
            if (!free_in_lambda(i + 1, j) || !free_in_lambda(i, j + 1) ||
                !free_in_lambda(i + 1, j + 1))
                continue;
            ExcitedDiagram next = current;
            next.cells[idx] = {i + 1, j + 1};
            std::sort(next.cells.begin(), next.cells.end());
            if (seen.insert(next).second) {
                if (cap && seen.size() > cap)
                    throw cap_exceeded("more than " + std::to_string(cap) + " excited diagrams",
                                       cap);
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<ExcitedDiagram> out(seen.begin(), seen.end());
    return out;
}

BigRat skew_hook_sum(const SkewShape& shape) {
    const auto diagrams = enumerate_excited_diagrams(shape);
    BigRat total = 0;
    for (const auto& d : diagrams) {
        BigInt prod = 1;
        for (int i = 1; i <= shape.rows(); ++i) {
            for (int j = 1; j <= shape.lambda[static_cast<size_t>(i - 1)]; ++j) {
                if (std::binary_search(d.cells.begin(), d.cells.end(), std::make_pair(i, j)))
                    continue;
                prod *= hook_length(shape.lambda, i, j);
            }
        }
        total += BigRat(1, prod);
    }
    return total;
}

BigInt count_skew_syt_hooks(const SkewShape& shape) {
    const BigRat total = factorial(static_cast<unsigned>(shape.cells())) * skew_hook_sum(shape);
    if (boost::multiprecision::denominator(total) != 1)
        throw std::logic_error("hook sum did not clear to an integer");
    return boost::multiprecision::numerator(total);
}

namespace {

template <typename Emit>
std::uint64_t backtrack_syt(const SkewShape& shape, std::uint64_t cap, Emit&& emit) {
    const int k = shape.cells();
    const int nrows = shape.rows();
    std::vector<int> filled(static_cast<size_t>(nrows), 0);
    std::vector<std::vector<int>> rows(static_cast<size_t>(nrows));
    for (int i = 0; i < nrows; ++i)
        rows[static_cast<size_t>(i)].assign(
            static_cast<size_t>(shape.lambda[static_cast<size_t>(i)] - shape.mu[static_cast<size_t>(i)]), 0);

    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int value) -> void {
        if (value > k) {
            if (count >= cap)
                throw cap_exceeded("more than " + std::to_string(cap) + " standard fillings", cap);
            ++count;
            emit(rows);
            return;
        }
        for (int i = 0; i < nrows; ++i) {
            const int mu_i = shape.mu[static_cast<size_t>(i)];
            const int col = mu_i + filled[static_cast<size_t>(i)] + 1;
            if (col > shape.lambda[static_cast<size_t>(i)]) continue;
            if (i > 0) {
                const int mu_above = shape.mu[static_cast<size_t>(i - 1)];
                // The cell above is part of the skew shape iff col > mu_above;
                // it must already be filled for the column to stay increasing.
                if (col > mu_above && filled[static_cast<size_t>(i - 1)] < col - mu_above) continue;
            }
            rows[static_cast<size_t>(i)][static_cast<size_t>(filled[static_cast<size_t>(i)])] = value;
            ++filled[static_cast<size_t>(i)];
            self(self, value + 1);
            --filled[static_cast<size_t>(i)];
        }
    };
    rec(rec, 1);
    return count;
}

} // namespace

std::uint64_t count_skew_syt_backtracking(const SkewShape& shape, std::uint64_t cap) {
    return backtrack_syt(shape, cap, [](const std::vector<std::vector<int>>&) {});
}

void for_each_skew_syt(const SkewShape& shape, std::uint64_t cap,
                       const std::function<void(const SkewTableau&)>& fn) {
    backtrack_syt(shape, cap, [&](const std::vector<std::vector<int>>& rows) {
        fn(SkewTableau{shape, rows});
    });
}

namespace {

void validate_standard(const SkewTableau& tableau) {
    const auto& shape = tableau.shape;
    const int k = shape.cells();
    if (static_cast<int>(tableau.rows.size()) != shape.rows())
        throw not_standard("row count does not match the shape");
    std::vector<bool> used(static_cast<size_t>(k) + 1, false);
    for (int i = 1; i <= shape.rows(); ++i) {
        const auto& row = tableau.rows[static_cast<size_t>(i - 1)];
        const int width = shape.lambda[static_cast<size_t>(i - 1)] - shape.mu[static_cast<size_t>(i - 1)];
        if (static_cast<int>(row.size()) != width)
            throw not_standard("row " + std::to_string(i) + " has the wrong length");
        for (size_t j = 0; j < row.size(); ++j) {
            const int e = row[j];
            if (e < 1 || e > k || used[static_cast<size_t>(e)])
                throw not_standard("entries must biject onto 1..K");
            used[static_cast<size_t>(e)] = true;
            if (j > 0 && row[j - 1] >= e)
                throw not_standard("row " + std::to_string(i) + " is not increasing");
        }
    }
    for (int i = 2; i <= shape.rows(); ++i) {
        const int mu_above = shape.mu[static_cast<size_t>(i - 2)];
        const int mu_here = shape.mu[static_cast<size_t>(i - 1)];
        const auto& above = tableau.rows[static_cast<size_t>(i - 2)];
        const auto& here = tableau.rows[static_cast<size_t>(i - 1)];
        for (size_t j = 0; j < here.size(); ++j) {
            const int col = mu_here + static_cast<int>(j) + 1;
            if (col <= mu_above) continue;
            const size_t j_above = static_cast<size_t>(col - mu_above - 1);
            if (j_above < above.size() && above[j_above] >= here[j])
                throw not_standard("column " + std::to_string(col) + " is not increasing");
        }
    }
}

} // namespace

SkewTableau chain_to_tableau(const LadderShape& shape, const MaximalChain& chain) {
    if (shape.r != 1) throw error("chain_to_tableau requires r = 1");
    SkewTableau tableau;
    tableau.shape = ladder_skew_shape(shape);
    tableau.rows.resize(static_cast<size_t>(shape.n));
    const auto& entries = chain.positions.entries;
    for (size_t idx = 0; idx < entries.size(); ++idx) {
        const int i = entries[idx];
        const int row = shape.n - i + 1;
        tableau.rows[static_cast<size_t>(row - 1)].push_back(static_cast<int>(idx) + 1);
    }
    validate_standard(tableau);
    return tableau;
}

MaximalChain tableau_to_chain(const SkewTableau& tableau, const LadderShape& shape) {
    if (shape.r != 1) throw error("tableau_to_chain requires r = 1");
    if (tableau.shape != ladder_skew_shape(shape))
        throw not_standard("tableau shape does not match the ladder's skew shape");
    validate_standard(tableau);
    const int k = tableau.shape.cells();
    std::vector<int> entries(static_cast<size_t>(k), 0);
    for (int row = 1; row <= shape.n; ++row) {
        for (int e : tableau.rows[static_cast<size_t>(row - 1)])
            entries[static_cast<size_t>(e - 1)] = shape.n - row + 1;
    }
    try {
        return chain_from_positions(shape, entries);
    } catch (const error& e) {
        throw not_a_chain(std::string("tableau does not encode a maximal chain: ") + e.what());
    }
}

Multiplicity multiplicity(const LadderShape& shape) {
    Multiplicity result;
    result.e_L = count_skew_syt_hooks(ladder_skew_shape(shape));
    const int ell_L = 1 + shape.sum_delta();
    result.e_M = binomial(ell_L + shape.r - 2, shape.r - 1) * result.e_L;
    return result;
}

} // namespace ladder
