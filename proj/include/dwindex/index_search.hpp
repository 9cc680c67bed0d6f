#pragma once

#include "dwindex/metrics.hpp"
#include "dwindex/polytope.hpp"

#include <cstdint>

namespace dwindex {

// Upper estimate of n(X) (kind w), eta_dw(X) (kind dw) or eta_dw*(X)
// (kind dwstar): the smallest radius found over unit-norm operators.
struct IndexEstimate {
    RadiusKind kind = RadiusKind::DW;
    double value = 0.0;
    Operator witness;  // operator norm 1
    int restarts_used = 0;
    std::uint64_t seed = 0;
    bool converged = false;
};

struct IndexSearchOptions {
    int restarts = 64;
    std::uint64_t seed = 42;
    double tol = 1e-6;
    double initial_step = 0.25;
    // Per-restart cap on objective evaluations; hitting it clears `converged`.
    std::size_t max_evaluations = 2'000'000;
};

// Default restart count: 64 for planar spaces, 256 otherwise.
int default_restarts(const PolyhedralSpace& space);

IndexEstimate estimate_index(const PolyhedralSpace& space, RadiusKind kind, const IndexSearchOptions& options);
IndexEstimate estimate_index(const PolyhedralSpace& space, RadiusKind kind, int restarts, std::uint64_t seed,
                             double tol);

struct IndexBracket {
    double lower = 0.0;
    double upper = 0.0;
    IndexEstimate estimate;
};

// Lower end from the vertex certificates, upper end from estimate_index.
// Only kinds dw and dwstar are accepted.
IndexBracket index_bracket(const PolyhedralSpace& space, RadiusKind kind, int restarts, std::uint64_t seed,
                           double tol);

} // namespace dwindex
