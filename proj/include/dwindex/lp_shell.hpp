#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dwindex::shell {

using Complex = std::complex<double>;

// Dense complex d x d matrix, row-major.
class ComplexOperator {
public:
    ComplexOperator() = default;
    ComplexOperator(std::size_t dim, std::vector<Complex> entries);

    static ComplexOperator identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<Complex>& entries() const { return entries_; }
    Complex at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    void apply(std::span<const Complex> x, std::span<Complex> out) const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

double lp_norm(std::span<const Complex> x, double p);

// The unique norming functional of a unit vector of complex l_p:
// g_j = |x_j|^(p-2) conj(x_j), paired as g(y) = sum_j g_j y_j.
// Throws BadParameter for p outside (1, inf), NotUnitNorm if |x|_p != 1.
std::vector<Complex> lp_support_functional(std::span<const Complex> x, double p);

struct ShellPoint {
    double w_re = 0.0;
    double w_im = 0.0;
    double s = 0.0;
};

struct ShellSample {
    std::vector<ShellPoint> points;
    double p = 2.0;
    std::uint64_t seed = 0;
    std::size_t count = 0;
};

// Points (g(Tx), |Tx|_p^2) for complex Gaussian x normalized in l_p.
// Deterministic given seed; independent of the thread count.
ShellSample sample_shell(const ComplexOperator& t, double p, std::size_t samples, std::uint64_t seed);

// sqrt(max |w|^2 + s^2) over the sample: a lower estimate of dw(T).
double shell_dw_estimate(const ShellSample& sample);

struct BlockConditions {
    bool trace_zero = false;       // a + d = 0
    bool equal_moduli = false;     // |b| = |c|
    bool cross_term_zero = false;  // Re(b) Im(c) + Re(c) Im(b) = 0

    bool all() const { return trace_zero && equal_moduli && cross_term_zero; }
};

BlockConditions check_block_conditions(double a, Complex b, Complex c, double d, double tol = 1e-12);

// [[1, e^{i pi/4}], [e^{-i pi/4}, -1]] padded with zeros to n x n. Its
// Davis-Wielandt shell on l_p^n, p != 1, 2, inf, is not convex.
ComplexOperator nonconvex_block_operator(int n);

// Static 3-d k-d tree over shell points.
class PointCloudIndex {
public:
    explicit PointCloudIndex(std::span<const ShellPoint> points);

    // Euclidean distance from q to the nearest indexed point.
    double nearest_distance(const ShellPoint& q) const;
    // Nearest other point (self excluded by index).
    double nearest_other_distance(std::size_t index) const;

    std::size_t size() const { return points_.size(); }

private:
    struct Node {
        std::size_t point = 0;
        int axis = 0;
        int left = -1;
        int right = -1;
    };

    int build(std::vector<std::size_t>& ids, std::size_t lo, std::size_t hi, int depth);
    void search(int node, const double q[3], std::size_t skip, double& best_sq) const;

    std::vector<ShellPoint> points_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

double median_nearest_neighbor_distance(const ShellSample& sample);

struct ConvexityWitness {
    ShellPoint first;
    ShellPoint second;
    ShellPoint midpoint;
    double gap = 0.0;  // distance from the midpoint to the nearest sample point
};

struct WitnessSearchOptions {
    std::size_t random_pairs = 20000;
    std::size_t directions = 64;  // extreme points are collected along these
    std::uint64_t seed = 7;
};

// Looks for two sample points whose midpoint is farther than tol from every
// sample point; returns the pair with the largest such gap. A witness is
// evidence of non-convexity at resolution tol, not a proof.
std::optional<ConvexityWitness> convexity_witness(const ShellSample& sample, double tol,
                                                  const WitnessSearchOptions& options = {});

} // namespace dwindex::shell
