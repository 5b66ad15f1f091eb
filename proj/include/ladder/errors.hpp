#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ladder {

// Base class for all contract violations raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// u or v fails to be strictly increasing; callers wanting repair should
// normalize first.
class strictness_violation : public error {
public:
    using error::error;
};

// u_i > v_{i-1} + 1: the row intervals do not cover a contiguous range.
class gap_violation : public error {
public:
    using error::error;
};

// u_i > v_i.
class empty_interval : public error {
public:
    using error::error;
};

// u_1 != 1, or some other global bound is inconsistent.
class bound_violation : public error {
public:
    using error::error;
};

// Normalization squeezed some interval to nothing: the shape admits no
// strictly increasing column tuple through that row.
class degenerate_ladder : public error {
public:
    using error::error;
};

// A point list is not a maximal chain (bad endpoints, a non-unit step, or a
// point outside the lattice).
class not_a_chain : public error {
public:
    using error::error;
};

// Replaying a position tuple left the lattice at a specific step.
class invalid_step : public error {
public:
    invalid_step(const std::string& what, int step) : error(what), step_index(step) {}
    int step_index; // 1-based index of the first failing step
};

// A position tuple does not have the multiset of entries forced by the shape.
class wrong_multiset : public error {
public:
    using error::error;
};

// An enumeration exceeded its cap; partial_count results were seen so far.
class cap_exceeded : public error {
public:
    cap_exceeded(const std::string& what, std::uint64_t count)
        : error(what), partial_count(count) {}
    std::uint64_t partial_count;
};

// A cell address lies outside the diagram.
class cell_outside : public error {
public:
    using error::error;
};

// A filling violates row/column strictness.
class not_standard : public error {
public:
    using error::error;
};

} // namespace ladder
