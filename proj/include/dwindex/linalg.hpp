#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dwindex::linalg {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b);

// Solves the dense n x n system (row-major) by Gaussian elimination with
// partial pivoting. Returns nullopt when a pivot falls below pivot_tol times
// the largest entry of the matrix.
std::optional<std::vector<double>> solve(std::vector<double> a, std::vector<double> b,
                                         std::size_t n, double pivot_tol = 1e-12);

// Numerical rank of a rows x cols row-major matrix.
std::size_t rank(std::vector<double> a, std::size_t rows, std::size_t cols,
                 double rel_tol = 1e-10);

} // namespace dwindex::linalg
