#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dwindex {

inline constexpr double kDefaultTol = 1e-9;
// Two facet functionals closer than this in max-coordinate distance are merged.
inline constexpr double kFunctionalMergeTol = 1e-7;

struct Point {
    std::vector<double> coords;

    std::size_t dim() const { return coords.size(); }
};

struct Functional {
    std::vector<double> coeffs;

    std::size_t dim() const { return coeffs.size(); }
    double operator()(std::span<const double> x) const;
    double operator()(const Point& x) const { return (*this)(std::span<const double>(x.coords)); }
};

struct Facet {
    Functional functional;
    std::vector<std::size_t> vertex_ids;
};

struct SupportSet {
    Point base_point;
    std::vector<Functional> functionals;
    std::vector<std::size_t> facet_ids;
};

struct ExtremePair {
    std::size_t vertex_id;
    std::size_t facet_id;
};

struct ExtremePairSet {
    std::vector<ExtremePair> pairs;
};

// Finite-dimensional real normed space whose closed unit ball is the convex
// hull of a symmetric finite vertex set. Immutable once built.
class PolyhedralSpace {
public:
    std::size_t dim() const { return dim_; }
    double tol() const { return tol_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    // Index of -v for vertex i (resp. -f for facet j).
    std::size_t vertex_negation(std::size_t i) const { return vertex_neg_[i]; }
    std::size_t facet_negation(std::size_t j) const { return facet_neg_[j]; }

    // Unchecked Minkowski functional: max over facet functionals.
    double norm_of(std::span<const double> x) const;

    friend PolyhedralSpace build_space(const std::vector<Point>& vertices, double tol);

private:
    PolyhedralSpace() = default;

    std::size_t dim_ = 0;
    double tol_ = kDefaultTol;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::size_t> vertex_neg_;
    std::vector<std::size_t> facet_neg_;
    std::vector<double> facet_matrix_;  // facets_.size() x dim_, row-major
};

// Validates the vertex set and enumerates facets by solving for the
// hyperplane through every d-subset of vertices.
// Throws Error{NonSymmetric | Degenerate | NotExtreme | BadParameter}.
PolyhedralSpace build_space(const std::vector<Point>& vertices, double tol = kDefaultTol);

double norm(const PolyhedralSpace& space, const Point& x);
double dual_norm(const PolyhedralSpace& space, const Functional& f);

// J(x) restricted to its extreme members: the facet functionals attaining 1 at x.
SupportSet support_set(const PolyhedralSpace& space, const Point& x);
bool is_smooth_point(const PolyhedralSpace& space, const Point& x);

ExtremePairSet extreme_pairs(const PolyhedralSpace& space);

} // namespace dwindex
