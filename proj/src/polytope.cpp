#include "dwindex/polytope.hpp"

#include "dwindex/error.hpp"
#include "dwindex/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace dwindex {

namespace {

std::size_t find_negation(const std::vector<Point>& pts, std::size_t i, double tol) {
    const auto& v = pts[i].coords;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        const auto& w = pts[j].coords;
        bool match = true;
        for (std::size_t k = 0; k < v.size() && match; ++k) match = std::abs(v[k] + w[k]) <= tol;
        if (match) return j;
    }
    return pts.size();
}

// Calls visit(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void validate_points(const std::vector<Point>& vertices) {
    if (vertices.empty()) throw Error(ErrorCode::BadParameter, "vertex list is empty");
    const std::size_t d = vertices.front().dim();
    if (d < 2) throw Error(ErrorCode::BadParameter, "space dimension must be at least 2");
    for (const auto& v : vertices) {
        if (v.dim() != d)
            throw Error(ErrorCode::DimensionMismatch, "vertices have inconsistent dimensions");
        for (double c : v.coords)
            if (!std::isfinite(c)) throw Error(ErrorCode::BadParameter, "non-finite vertex coordinate");
    }
}

} // namespace

double Functional::operator()(std::span<const double> x) const {
    return linalg::dot(coeffs, x);
}

double PolyhedralSpace::norm_of(std::span<const double> x) const {
    double best = 0.0;
    const double* row = facet_matrix_.data();
    for (std::size_t j = 0; j < facets_.size(); ++j, row += dim_) {
        double s = 0.0;
        for (std::size_t k = 0; k < dim_; ++k) s += row[k] * x[k];
        best = std::max(best, s);
    }
    return best;
}

PolyhedralSpace build_space(const std::vector<Point>& vertices, double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorCode::BadParameter, "tol must be positive");
    validate_points(vertices);
    const std::size_t d = vertices.front().dim();
    const std::size_t m = vertices.size();

    PolyhedralSpace space;
    space.dim_ = d;
    space.tol_ = tol;
    space.vertices_ = vertices;

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (linalg::max_abs_diff(vertices[i].coords, vertices[j].coords) <= tol)
                throw Error(ErrorCode::NotExtreme,
                            "vertex " + std::to_string(j) + " duplicates vertex " + std::to_string(i));

    space.vertex_neg_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = find_negation(vertices, i, tol);
        if (j == m)
            throw Error(ErrorCode::NonSymmetric, "negation of vertex " + std::to_string(i) + " is missing");
        space.vertex_neg_[i] = j;
    }

    std::vector<double> flat;
    flat.reserve(m * d);
    for (const auto& v : vertices) flat.insert(flat.end(), v.coords.begin(), v.coords.end());
    if (linalg::rank(flat, m, d) < d)
        throw Error(ErrorCode::Degenerate, "vertices do not span the space");

    std::vector<Functional> found;
    for_each_subset(m, d, [&](const std::vector<std::size_t>& subset) {
        std::vector<double> a;
        a.reserve(d * d);
        for (std::size_t id : subset) a.insert(a.end(), vertices[id].coords.begin(), vertices[id].coords.end());
        auto f = linalg::solve(std::move(a), std::vector<double>(d, 1.0), d);
        if (!f) return;
        for (const auto& v : vertices)
            if (linalg::dot(*f, v.coords) > 1.0 + tol) return;
        for (const auto& g : found)
            if (linalg::max_abs_diff(g.coeffs, *f) < kFunctionalMergeTol) return;
        found.push_back(Functional{std::move(*f)});
    });

    for (auto& f : found) {
        Facet facet{std::move(f), {}};
        for (std::size_t i = 0; i < m; ++i)
            if (std::abs(facet.functional(vertices[i]) - 1.0) <= tol) facet.vertex_ids.push_back(i);
        space.facets_.push_back(std::move(facet));
    }

    const std::size_t nf = space.facets_.size();
    space.facet_matrix_.reserve(nf * d);
    for (const auto& f : space.facets_)
        space.facet_matrix_.insert(space.facet_matrix_.end(), f.functional.coeffs.begin(), f.functional.coeffs.end());

    space.facet_neg_.assign(nf, nf);
    for (std::size_t j = 0; j < nf; ++j) {
        for (std::size_t k = 0; k < nf; ++k) {
            bool match = true;
            for (std::size_t c = 0; c < d && match; ++c)
                match = std::abs(space.facets_[j].functional.coeffs[c] + space.facets_[k].functional.coeffs[c]) <
                        kFunctionalMergeTol;
            if (match) {
                space.facet_neg_[j] = k;
                break;
            }
        }
        if (space.facet_neg_[j] == nf)
            throw Error(ErrorCode::NonSymmetric, "facet set is not closed under negation");
    }

    // A vertex is extreme iff it lies on the boundary and the functionals of
    // its incident facets span the dual space.
    for (std::size_t i = 0; i < m; ++i) {
        const double value = space.norm_of(vertices[i].coords);
        if (value < 1.0 - tol)
            throw Error(ErrorCode::NotExtreme, "vertex " + std::to_string(i) + " lies inside the hull");
        std::vector<double> incident;
        std::size_t count = 0;
        for (const auto& f : space.facets_) {
            if (std::abs(f.functional(vertices[i]) - 1.0) <= tol) {
                incident.insert(incident.end(), f.functional.coeffs.begin(), f.functional.coeffs.end());
                ++count;
            }
        }
        if (linalg::rank(incident, count, d) < d)
            throw Error(ErrorCode::NotExtreme,
                        "vertex " + std::to_string(i) + " lies in the relative interior of a face");
    }
    return space;
}

double norm(const PolyhedralSpace& space, const Point& x) {
    if (x.dim() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
    return space.norm_of(x.coords);
}

double dual_norm(const PolyhedralSpace& space, const Functional& f) {
    if (f.dim() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "functional dimension mismatch");
    double best = 0.0;
    for (const auto& v : space.vertices()) best = std::max(best, f(v));
    return best;
}

SupportSet support_set(const PolyhedralSpace& space, const Point& x) {
    const double n = norm(space, x);
    if (std::abs(n - 1.0) > space.tol()) throw Error(ErrorCode::NotUnitNorm, "point is not of unit norm");
    SupportSet out{x, {}, {}};
    for (std::size_t j = 0; j < space.facets().size(); ++j) {
        const auto& f = space.facets()[j].functional;
        if (std::abs(f(x) - 1.0) <= space.tol()) {
            out.functionals.push_back(f);
            out.facet_ids.push_back(j);
        }
    }
    return out;
}

bool is_smooth_point(const PolyhedralSpace& space, const Point& x) {
    return support_set(space, x).functionals.size() == 1;
}

ExtremePairSet extreme_pairs(const PolyhedralSpace& space) {
    ExtremePairSet out;
    for (std::size_t j = 0; j < space.facets().size(); ++j)
        for (std::size_t i : space.facets()[j].vertex_ids) out.pairs.push_back({i, j});
    std::sort(out.pairs.begin(), out.pairs.end(), [](const ExtremePair& a, const ExtremePair& b) {
        return a.vertex_id != b.vertex_id ? a.vertex_id < b.vertex_id : a.facet_id < b.facet_id;
    });
    return out;
}

} // namespace dwindex
