#pragma once

#include <string>
#include <vector>

#include "ladder/tableaux.hpp"

namespace ladder {

/// Skew diagram outline: mu cells as shaded blocks, skew cells as dots.
std::string render_skew_shape(const SkewShape& shape);

/// Standard filling with entries right-aligned in fixed-width fields and mu
/// cells shaded.
std::string render_skew_tableau(const SkewTableau& tableau);

/// Every cell of the straight shape lambda filled with its hook length.
std::string render_hook_grid(const std::vector<int>& lambda);

} // namespace ladder
