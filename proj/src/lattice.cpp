#include "ladder/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ladder/errors.hpp"

namespace ladder {

std::string to_string(const LatticePoint& p) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < p.coords.size(); ++i) {
        if (i) out << ',';
        out << p.coords[i];
    }
    out << ')';
    return out.str();
}

LatticePoint bottom(const LadderShape& shape) {
    LatticePoint p;
    p.coords.reserve(static_cast<size_t>(shape.n) + 1);
    for (const auto& [u, v] : shape.intervals) p.coords.push_back(u);
    p.coords.push_back(1);
    return p;
}

LatticePoint top(const LadderShape& shape) {
    LatticePoint p;
    p.coords.reserve(static_cast<size_t>(shape.n) + 1);
    for (const auto& [u, v] : shape.intervals) p.coords.push_back(v);
    p.coords.push_back(shape.r);
    return p;
}

bool is_lattice_point(const LadderShape& shape, const LatticePoint& p) {
    if (p.coords.size() != static_cast<size_t>(shape.n) + 1) return false;
    for (int i = 1; i <= shape.n; ++i) {
        const int c = p.column(i);
        if (c < shape.u(i) || c > shape.v(i)) return false;
        if (i < shape.n && c >= p.column(i + 1)) return false;
    }
    return p.copy() >= 1 && p.copy() <= shape.r;
}

std::strong_ordering lex_compare(const LatticePoint& a, const LatticePoint& b) {
    if (a.coords.size() != b.coords.size())
        throw error("comparing points of different lengths");
    for (size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] != b.coords[i])
            return a.coords[i] < b.coords[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering point_precedence(const LatticePoint& a, const LatticePoint& b) {
    const auto lex = lex_compare(a, b);
    if (lex == std::strong_ordering::less) return std::strong_ordering::greater;
    if (lex == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

bool componentwise_le(const LatticePoint& a, const LatticePoint& b) {
    if (a.coords.size() != b.coords.size())
        throw error("comparing points of different lengths");
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] > b.coords[i]) return false;
    return true;
}

namespace {

LatticePoint combine(const LadderShape& shape, const LatticePoint& a, const LatticePoint& b,
                     bool take_min, const char* what) {
    if (a.coords.size() != b.coords.size())
        throw error("points of different lengths");
    LatticePoint out;
    out.coords.resize(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i)
        out.coords[i] = take_min ? std::min(a.coords[i], b.coords[i])
                                 : std::max(a.coords[i], b.coords[i]);
    if (!is_lattice_point(shape, out))
        throw std::logic_error(std::string(what) + " of " + to_string(a) + " and " +
                               to_string(b) + " left the lattice: " + to_string(out));
    return out;
}

} // namespace

LatticePoint meet(const LadderShape& shape, const LatticePoint& a, const LatticePoint& b) {
    return combine(shape, a, b, true, "meet");
}

LatticePoint join(const LadderShape& shape, const LatticePoint& a, const LatticePoint& b) {
    return combine(shape, a, b, false, "join");
}

std::vector<int> step_positions(const LadderShape& shape, const LatticePoint& p) {
    std::vector<int> out;
    for (int q = 1; q < shape.n; ++q)
        if (p.column(q + 1) - p.column(q) > 1 && p.column(q) < shape.v(q)) out.push_back(q);
    if (p.column(shape.n) < shape.v(shape.n)) out.push_back(shape.n);
    if (p.copy() < shape.r) out.push_back(shape.n + 1);
    return out;
}

std::vector<LatticePoint> covers(const LadderShape& shape, const LatticePoint& a) {
    std::vector<LatticePoint> out;
    for (int p : step_positions(shape, a)) {
        LatticePoint b = a;
        ++b.coords[static_cast<size_t>(p - 1)];
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

template <typename Fn>
void walk_lattice(const LadderShape& shape, Fn&& fn) {
    LatticePoint p;
    p.coords.assign(static_cast<size_t>(shape.n) + 1, 0);
    // Columns chosen row by row in ascending order, then the copy index:
    // visits points in ascending lexicographic order.
    auto rec = [&](auto&& self, int i) -> void {
        if (i > shape.n) {
            for (int c = 1; c <= shape.r; ++c) {
                p.coords.back() = c;
                fn(p);
            }
            return;
        }
        const int lo = std::max(shape.u(i), i > 1 ? p.column(i - 1) + 1 : 1);
        for (int c = lo; c <= shape.v(i); ++c) {
            p.coords[static_cast<size_t>(i - 1)] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
}

} // namespace

std::vector<LatticePoint> enumerate_lattice(const LadderShape& shape, std::uint64_t cap) {
    std::vector<LatticePoint> out;
    walk_lattice(shape, [&](const LatticePoint& p) {
        if (out.size() >= cap)
            throw cap_exceeded("lattice larger than cap " + std::to_string(cap), cap);
        out.push_back(p);
    });
    return out;
}

std::uint64_t lattice_size(const LadderShape& shape, std::uint64_t cap) {
    std::uint64_t count = 0;
    walk_lattice(shape, [&](const LatticePoint&) {
        if (count >= cap)
            throw cap_exceeded("lattice larger than cap " + std::to_string(cap), cap);
        ++count;
    });
    return count;
}

} // namespace ladder
