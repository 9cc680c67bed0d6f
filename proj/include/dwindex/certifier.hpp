#pragma once

#include "dwindex/polytope.hpp"

#include <cstddef>
#include <vector>

namespace dwindex {

// Lower-bound contribution of one extreme point v: with f_1..f_k the
// functionals of all facets through v,
//   xi = sqrt(t*^2 + 1),  t* = min over unit x of max_r |f_r(x)|.
// Every unit-norm operator attains its norm at some vertex v_j and then has
// dw(T) >= xi_j, so the minimum of xi over vertices bounds the index below.
struct VertexCertificate {
    std::size_t vertex_id = 0;
    double xi = 1.0;
    double t_star = 0.0;
    std::vector<std::size_t> functionals_used;  // facet ids incident to the vertex
    Point minimizer;                             // unit-norm point attaining t*
    std::size_t minimizer_facet = 0;             // facet containing the minimizer
};

// Solves min t s.t. -t <= f_r(sum_k lambda_k u_k) <= t, lambda in the simplex,
// where u_k are the vertices of one facet. Returns (t*, minimizer).
struct FacetMinimax {
    double t = 0.0;
    Point minimizer;
};
FacetMinimax facet_minimax(const PolyhedralSpace& space, std::size_t facet_id,
                           const std::vector<std::size_t>& functional_facets);

VertexCertificate vertex_certificate(const PolyhedralSpace& space, std::size_t vertex_id);

// Certificates for one vertex of each +-v pair, in vertex order.
std::vector<VertexCertificate> vertex_certificates(const PolyhedralSpace& space);

double index_lower_bound(const PolyhedralSpace& space);

} // namespace dwindex
