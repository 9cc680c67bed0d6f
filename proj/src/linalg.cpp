#include "dwindex/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace dwindex::linalg {

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::optional<std::vector<double>> solve(std::vector<double> a, std::vector<double> b,
                                         std::size_t n, double pivot_tol) {
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return std::nullopt;
    const double threshold = pivot_tol * scale;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (std::abs(a[pivot * n + col]) < threshold) return std::nullopt;
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / a[col * n + col];
            if (factor == 0.0) continue;
            for (std::size_t k = col; k < n; ++k) a[r * n + k] -= factor * a[col * n + k];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
        x[i] = s / a[i * n + i];
    }
    return x;
}

std::size_t rank(std::vector<double> a, std::size_t rows, std::size_t cols, double rel_tol) {
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0;
    const double threshold = rel_tol * scale;

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (std::abs(a[i * cols + col]) > std::abs(a[pivot * cols + col])) pivot = i;
        if (std::abs(a[pivot * cols + col]) <= threshold) continue;
        if (pivot != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[r * cols + k], a[pivot * cols + k]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const double factor = a[i * cols + col] / a[r * cols + col];
            for (std::size_t k = col; k < cols; ++k) a[i * cols + k] -= factor * a[r * cols + k];
        }
        ++r;
    }
    return r;
}

} // namespace dwindex::linalg
