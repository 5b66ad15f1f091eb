#include "ladder/render.hpp"

#include <algorithm>
#include <sstream>

namespace ladder {

namespace {

int digit_width(int value) {
    int w = 1;
    while (value >= 10) {
        value /= 10;
        ++w;
    }
    return w;
}

std::string shaded(int width) {
    std::string s;
    for (int i = 0; i < width; ++i) s += "░";
    return s;
}

std::string padded(const std::string& text, int width) {
    std::string s;
    for (int i = static_cast<int>(text.size()); i < width; ++i) s += ' ';
    return s + text;
}

} // namespace

std::string render_skew_shape(const SkewShape& shape) {
    if (shape.cells() == 0) return "(empty diagram)\n";
    std::ostringstream out;
    for (int i = 1; i <= shape.rows(); ++i) {
        const int lam = shape.lambda[static_cast<size_t>(i - 1)];
        const int mu = shape.mu[static_cast<size_t>(i - 1)];
        if (lam == 0) continue;
        for (int j = 1; j <= lam; ++j) {
            if (j > 1) out << ' ';
            out << (j <= mu ? shaded(1) : "·");
        }
        out << '\n';
    }
    return out.str();
}

std::string render_skew_tableau(const SkewTableau& tableau) {
    const auto& shape = tableau.shape;
    if (shape.cells() == 0) return "(empty diagram)\n";
    const int width = digit_width(shape.cells());
    std::ostringstream out;
    for (int i = 1; i <= shape.rows(); ++i) {
        const int lam = shape.lambda[static_cast<size_t>(i - 1)];
        const int mu = shape.mu[static_cast<size_t>(i - 1)];
        if (lam == 0) continue;
        for (int j = 1; j <= lam; ++j) {
            if (j > 1) out << ' ';
            if (j <= mu)
                out << shaded(width);
            else
                out << padded(std::to_string(
                                  tableau.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - mu - 1)]),
                              width);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_hook_grid(const std::vector<int>& lambda) {
    if (lambda.empty() || lambda[0] == 0) return "(empty diagram)\n";
    int max_hook = 0;
    for (size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > 0) max_hook = std::max(max_hook, hook_length(lambda, static_cast<int>(i) + 1, 1));
    const int width = digit_width(max_hook);
    std::ostringstream out;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0) continue;
        for (int j = 1; j <= lambda[i]; ++j) {
            if (j > 1) out << ' ';
            out << padded(std::to_string(hook_length(lambda, static_cast<int>(i) + 1, j)), width);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ladder
