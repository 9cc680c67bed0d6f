#pragma once

#include "dwindex/polytope.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dwindex {

// Dense real d x d matrix, row-major.
class Operator {
public:
    Operator() = default;
    Operator(std::size_t dim, std::vector<double> entries);

    static Operator identity(std::size_t dim);
    static Operator zero(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<double>& entries() const { return entries_; }
    double at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    void apply(std::span<const double> x, std::span<double> out) const;
    Point apply(const Point& x) const;

    Operator scaled(double c) const;
    Operator operator+(const Operator& other) const;

private:
    std::size_t dim_ = 0;
    std::vector<double> entries_;
};

enum class RadiusKind { OperatorNorm, NumericalRadius, DW, DWStar };

std::string to_string(RadiusKind kind);
// Accepts "opnorm", "w", "dw", "dwstar". Throws BadParameter otherwise.
RadiusKind parse_radius_kind(const std::string& name);

// Value together with the extreme pairs attaining it (within kWitnessTol).
struct RadiusReport {
    double value = 0.0;
    std::vector<ExtremePair> witnesses;
};

inline constexpr double kWitnessTol = 1e-7;

// The real Davis-Wielandt set at x: the horizontal segment from (lo, level)
// to (hi, level).
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    double level = 0.0;
};

RadiusReport operator_norm(const PolyhedralSpace& space, const Operator& t);
RadiusReport numerical_radius(const PolyhedralSpace& space, const Operator& t);
RadiusReport dw_radius(const PolyhedralSpace& space, const Operator& t);
RadiusReport dw_star_radius(const PolyhedralSpace& space, const Operator& t);
RadiusReport radius(const PolyhedralSpace& space, const Operator& t, RadiusKind kind);

Segment dw_set_at(const PolyhedralSpace& space, const Operator& t, const Point& x);

// max over extreme pairs (v, f) of sqrt(f(Tv)^2 + |T|^4).
double dw_upper_bound_G(const PolyhedralSpace& space, const Operator& t);

struct SampledRadii {
    double w = 0.0;
    double dw = 0.0;
    double dw_star = 0.0;
};

// Monte-Carlo lower estimates over random unit vectors and their support
// functionals. Deterministic given seed and independent of the thread count.
SampledRadii sampled_radii(const PolyhedralSpace& space, const Operator& t, std::size_t samples,
                           std::uint64_t seed);
double sampled_dw(const PolyhedralSpace& space, const Operator& t, RadiusKind kind, std::size_t samples,
                  std::uint64_t seed);

// Allocation-free evaluation of a radius on a raw matrix, used by the index
// search. Exploits v <-> -v symmetry: only one vertex of each pair is visited.
class RadiusEvaluator {
public:
    explicit RadiusEvaluator(const PolyhedralSpace& space);

    // Radius of kind `kind` of matrix / scale.
    double evaluate(std::span<const double> matrix, RadiusKind kind, double scale = 1.0);
    double operator_norm(std::span<const double> matrix);
    // Radius of matrix / operator_norm(matrix); +inf for the zero matrix.
    double normalized(std::span<const double> matrix, RadiusKind kind);

private:
    void image_norms(std::span<const double> matrix);

    std::size_t dim_;
    std::vector<double> vertices_;   // representative vertices, row-major
    std::vector<double> facets_;     // representative facets, row-major
    std::vector<double> pair_funcs_; // functional of each pair, row-major
    std::vector<std::size_t> pair_vertex_;  // index into representatives
    std::vector<double> images_;     // T v for each representative
    std::vector<double> image_norms_;
};

} // namespace dwindex
