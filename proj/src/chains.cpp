#include "ladder/chains.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ladder/errors.hpp"

namespace ladder {

std::vector<std::pair<int, int>> PositionTuple::runs() const {
    std::vector<std::pair<int, int>> out;
    const int len = static_cast<int>(entries.size());
    int start = 0;
    for (int i = 1; i <= len; ++i) {
        if (i == len || entries[static_cast<size_t>(i)] <= entries[static_cast<size_t>(i - 1)]) {
            out.emplace_back(start, i);
            start = i;
        }
    }
    return out;
}

int PositionTuple::sequence_index() const {
    return static_cast<int>(runs().size());
}

std::string to_string(const PositionTuple& t) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < t.entries.size(); ++i) {
        if (i) out << ',';
        out << t.entries[i];
    }
    out << ')';
    return out.str();
}

std::vector<int> full_position_multiset(const LadderShape& shape) {
    std::vector<int> out;
    for (int i = 1; i <= shape.n; ++i)
        out.insert(out.end(), static_cast<size_t>(shape.delta(i)), i);
    out.insert(out.end(), static_cast<size_t>(shape.r - 1), shape.n + 1);
    return out;
}

PositionTuple position_tuple(const LadderShape& shape, const std::vector<LatticePoint>& points) {
    if (points.empty()) throw not_a_chain("empty point list");
    if (points.front() != bottom(shape))
        throw not_a_chain("chain does not start at the bottom point");
    if (points.back() != top(shape))
        throw not_a_chain("chain does not end at the top point");

    PositionTuple tuple;
    tuple.limit = shape.n + 1;
    tuple.entries.reserve(points.size() - 1);
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        const auto& a = points[i];
        const auto& b = points[i + 1];
        if (!is_lattice_point(shape, b))
            throw not_a_chain("point " + to_string(b) + " is outside the lattice");
        int step = 0;
        for (size_t j = 0; j < a.coords.size(); ++j) {
            const int d = b.coords[j] - a.coords[j];
            if (d == 0) continue;
            if (d != 1 || step != 0)
                throw not_a_chain("step " + std::to_string(i + 1) + " from " + to_string(a) +
                                  " to " + to_string(b) + " is not a unit step");
            step = static_cast<int>(j) + 1;
        }
        if (step == 0)
            throw not_a_chain("repeated point " + to_string(a));
        tuple.entries.push_back(step);
    }
    return tuple;
}

MaximalChain chain_from_points(const LadderShape& shape, std::vector<LatticePoint> points) {
    MaximalChain chain;
    chain.positions = position_tuple(shape, points);
    chain.points = std::move(points);
    return chain;
}

MaximalChain chain_from_positions(const LadderShape& shape, const std::vector<int>& entries) {
    std::vector<int> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != full_position_multiset(shape))
        throw wrong_multiset("position entries do not match the multiset forced by the shape");

    MaximalChain chain;
    chain.positions.limit = shape.n + 1;
    chain.positions.entries = entries;
    chain.points.reserve(entries.size() + 1);
    chain.points.push_back(bottom(shape));
    for (size_t i = 0; i < entries.size(); ++i) {
        const int p = entries[i];
        const auto& cur = chain.points.back();
        const auto admissible = step_positions(shape, cur);
        if (!std::binary_search(admissible.begin(), admissible.end(), p))
            throw invalid_step("step " + std::to_string(i + 1) + " (position " + std::to_string(p) +
                                   ") leaves the lattice at " + to_string(cur),
                               static_cast<int>(i + 1));
        LatticePoint next = cur;
        ++next.coords[static_cast<size_t>(p - 1)];
        chain.points.push_back(std::move(next));
    }
    return chain;
}

std::strong_ordering chain_precedence(const MaximalChain& a, const MaximalChain& b) {
    if (a.points.size() != b.points.size())
        throw error("comparing chains of different lengths");
    for (size_t i = a.points.size(); i-- > 0;) {
        if (a.points[i] != b.points[i]) return point_precedence(a.points[i], b.points[i]);
    }
    return std::strong_ordering::equal;
}

void for_each_maximal_chain(const LadderShape& shape, std::uint64_t cap,
                            const std::function<void(const MaximalChain&)>& fn) {
    const LatticePoint goal = top(shape);
    const size_t length = static_cast<size_t>(shape.r + shape.sum_delta());

    MaximalChain chain;
    chain.positions.limit = shape.n + 1;
    chain.points.reserve(length);
    chain.points.push_back(bottom(shape));
    std::uint64_t count = 0;

    auto rec = [&](auto&& self) -> void {
        const auto steps = step_positions(shape, chain.points.back());
        if (steps.empty()) {
            if (chain.points.back() != goal || chain.points.size() != length)
                throw std::logic_error("chain stalled before the top point");
            if (count >= cap)
                throw cap_exceeded("more than " + std::to_string(cap) + " maximal chains", cap);
            ++count;
            fn(chain);
            return;
        }
        for (int p : steps) {
            LatticePoint next = chain.points.back();
            ++next.coords[static_cast<size_t>(p - 1)];
            chain.points.push_back(std::move(next));
            chain.positions.entries.push_back(p);
            self(self);
            chain.points.pop_back();
            chain.positions.entries.pop_back();
        }
    };
    rec(rec);
}

std::vector<MaximalChain> enumerate_maximal_chains(const LadderShape& shape, std::uint64_t cap) {
    std::vector<MaximalChain> out;
    for_each_maximal_chain(shape, cap, [&](const MaximalChain& c) { out.push_back(c); });
    return out;
}

std::uint64_t count_maximal_chains(const LadderShape& shape, std::uint64_t cap) {
    std::uint64_t count = 0;
    for_each_maximal_chain(shape, cap, [&](const MaximalChain&) { ++count; });
    return count;
}

std::vector<int> ascent_indices(const MaximalChain& chain) {
    std::vector<int> out;
    const auto& p = chain.positions.entries;
    // Point b^s (1-based, interior: 2 <= s <= length-1) has incoming step
    // p[s-2] and outgoing step p[s-1].
    for (size_t s = 2; s <= p.size(); ++s)
        if (p[s - 2] < p[s - 1]) out.push_back(static_cast<int>(s));
    return out;
}

PositionTuple project_positions_to_r1(const PositionTuple& positions) {
    PositionTuple out;
    out.limit = positions.limit;
    for (int e : positions.entries)
        if (e != positions.limit) out.entries.push_back(e);
    return out;
}

namespace {

// Index of the unique point of B \ C, if |B \ C| = 1; chains store their
// points in ascending lexicographic order, so a merge walk suffices.
std::optional<size_t> single_difference_index(const MaximalChain& b, const MaximalChain& c) {
    std::optional<size_t> found;
    size_t i = 0, j = 0;
    while (i < b.points.size()) {
        const auto cmp = j >= c.points.size() ? std::strong_ordering::less
                                              : lex_compare(b.points[i], c.points[j]);
        if (cmp == std::strong_ordering::equal) {
            ++i;
            ++j;
        } else if (cmp == std::strong_ordering::less) {
            if (found) return std::nullopt;
            found = i++;
        } else {
            ++j;
        }
    }
    return found;
}

bool contains_point(const MaximalChain& chain, const LatticePoint& p) {
    return std::binary_search(chain.points.begin(), chain.points.end(), p,
                              [](const LatticePoint& a, const LatticePoint& b) {
                                  return lex_compare(a, b) == std::strong_ordering::less;
                              });
}

} // namespace

LinearQuotientsReport verify_linear_quotients(const LadderShape& shape, std::uint64_t cap) {
    LinearQuotientsReport report;
    const auto chains = enumerate_maximal_chains(shape, cap);
    report.chain_count = chains.size();

    // Per-chain ascent points, and the points removable by a single swap to a
    // higher-precedence chain; the two sets must agree.
    std::vector<std::vector<LatticePoint>> ascent_points(chains.size());
    for (size_t bi = 0; bi < chains.size(); ++bi) {
        for (int s : ascent_indices(chains[bi]))
            ascent_points[bi].push_back(chains[bi].points[static_cast<size_t>(s - 1)]);

        std::vector<LatticePoint> removable;
        for (size_t ci = 0; ci < chains.size(); ++ci) {
            if (ci == bi) continue;
            const auto ord = chain_precedence(chains[ci], chains[bi]);
            if (ord == std::strong_ordering::equal) {
                report.pass = false;
                report.counterexample = "distinct chains compare equal: " +
                                        to_string(chains[ci].positions) + " vs " +
                                        to_string(chains[bi].positions);
                return report;
            }
            if (ord != std::strong_ordering::greater) continue;
            if (const auto diff = single_difference_index(chains[bi], chains[ci]))
                removable.push_back(chains[bi].points[*diff]);
        }

        auto expected = ascent_points[bi];
        auto lex_less = [](const LatticePoint& a, const LatticePoint& b) {
            return lex_compare(a, b) == std::strong_ordering::less;
        };
        std::sort(expected.begin(), expected.end(), lex_less);
        std::sort(removable.begin(), removable.end(), lex_less);
        if (expected != removable) {
            report.pass = false;
            report.counterexample = "ascent points of " + to_string(chains[bi].positions) +
                                    " differ from its single-swap removable points";
            return report;
        }
    }

    // For every ordered pair A > B some single swap must remove a point of
    // B \ A, i.e. some ascent point of B must lie outside A.
    for (size_t ai = 0; ai < chains.size(); ++ai) {
        for (size_t bi = 0; bi < chains.size(); ++bi) {
            if (ai == bi) continue;
            if (chain_precedence(chains[ai], chains[bi]) != std::strong_ordering::greater)
                continue;
            ++report.pairs_checked;
            bool found = false;
            for (const auto& w : ascent_points[bi]) {
                if (!contains_point(chains[ai], w)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                report.pass = false;
                report.counterexample =
                    "no single-point quotient witness for the pair A=" +
                    to_string(chains[ai].positions) + " > B=" + to_string(chains[bi].positions);
                return report;
            }
        }
    }
    return report;
}

} // namespace ladder
