#include "dwindex/certifier.hpp"

#include "dwindex/error.hpp"
#include "dwindex/parallel.hpp"
#include "dwindex/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dwindex {

namespace {

double max_abs_pairing(const PolyhedralSpace& space, const std::vector<std::size_t>& facet_ids, const Point& x) {
    double best = 0.0;
    for (std::size_t j : facet_ids) best = std::max(best, std::abs(space.facets()[j].functional(x)));
    return best;
}

} // namespace

FacetMinimax facet_minimax(const PolyhedralSpace& space, std::size_t facet_id,
                           const std::vector<std::size_t>& functional_facets) {
    const auto& corners = space.facets().at(facet_id).vertex_ids;
    const std::size_t k = corners.size();
    const std::size_t d = space.dim();

    // Variables: lambda_0 .. lambda_{k-1}, t.
    lp::LinearProgram program;
    program.objective.assign(k + 1, 0.0);
    program.objective[k] = 1.0;
    for (std::size_t j : functional_facets) {
        const auto& f = space.facets()[j].functional;
        std::vector<double> row(k + 1);
        for (std::size_t c = 0; c < k; ++c) row[c] = f(space.vertices()[corners[c]]);
        row[k] = -1.0;
        program.constraints.push_back({row, lp::Relation::LessEqual, 0.0});
        for (std::size_t c = 0; c < k; ++c) row[c] = -row[c];
        program.constraints.push_back({row, lp::Relation::LessEqual, 0.0});
    }
    std::vector<double> simplex_row(k + 1, 1.0);
    simplex_row[k] = 0.0;
    program.constraints.push_back({simplex_row, lp::Relation::Equal, 1.0});

    const auto solution = lp::solve(program);
    if (solution.status != lp::Status::Optimal)
        throw Error(ErrorCode::LPFailure, "facet minimax program on facet " + std::to_string(facet_id) +
                                              " did not reach an optimum");

    FacetMinimax out;
    out.minimizer.coords.assign(d, 0.0);
    double total = 0.0;
    for (std::size_t c = 0; c < k; ++c) total += solution.x[c];
    for (std::size_t c = 0; c < k; ++c) {
        const double lambda = solution.x[c] / total;
        const auto& u = space.vertices()[corners[c]].coords;
        for (std::size_t i = 0; i < d; ++i) out.minimizer.coords[i] += lambda * u[i];
    }
    out.t = max_abs_pairing(space, functional_facets, out.minimizer);
    return out;
}

VertexCertificate vertex_certificate(const PolyhedralSpace& space, std::size_t vertex_id) {
    if (vertex_id >= space.vertices().size())
        throw Error(ErrorCode::BadParameter, "vertex id " + std::to_string(vertex_id) + " out of range");

    VertexCertificate cert;
    cert.vertex_id = vertex_id;
    for (std::size_t j = 0; j < space.facets().size(); ++j) {
        const auto& ids = space.facets()[j].vertex_ids;
        if (std::find(ids.begin(), ids.end(), vertex_id) != ids.end()) cert.functionals_used.push_back(j);
    }

    // max_r |f_r(x)| is even in x, so facets F and -F share the same optimum.
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < space.facets().size(); ++j) {
        if (space.facet_negation(j) < j) continue;
        auto result = facet_minimax(space, j, cert.functionals_used);
        if (result.t < best) {
            best = result.t;
            cert.minimizer = std::move(result.minimizer);
            cert.minimizer_facet = j;
        }
    }
    cert.t_star = best;
    cert.xi = std::sqrt(best * best + 1.0);
    return cert;
}

std::vector<VertexCertificate> vertex_certificates(const PolyhedralSpace& space) {
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < space.vertices().size(); ++i)
        if (space.vertex_negation(i) > i) reps.push_back(i);
    std::vector<VertexCertificate> out(reps.size());
    parallel_for(reps.size(), [&](std::size_t k) { out[k] = vertex_certificate(space, reps[k]); });
    return out;
}

double index_lower_bound(const PolyhedralSpace& space) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : vertex_certificates(space)) best = std::min(best, c.xi);
    return best;
}

} // namespace dwindex
