#include "dwindex/index_search.hpp"

#include "dwindex/certifier.hpp"
#include "dwindex/error.hpp"
#include "dwindex/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace dwindex {

namespace {

// Forcing function: an accepted trial must beat the incumbent by more than
// rounding noise, otherwise renormalization lets moves cycle forever.
double sufficient_decrease(double step) { return 1e-13 + 1e-3 * step * std::sqrt(step); }

struct RestartResult {
    double value = 0.0;
    std::vector<double> matrix;
    bool converged = false;
};

RestartResult run_restart(const PolyhedralSpace& space, RadiusKind kind, const IndexSearchOptions& options,
                          std::uint64_t stream_seed) {
    const std::size_t n = space.dim() * space.dim();
    RadiusEvaluator eval(space);
    std::mt19937_64 rng(stream_seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);

    std::vector<double> m(n);
    double best = 0.0;
    do {
        for (auto& e : m) e = uniform(rng);
        best = eval.normalized(m, kind);
    } while (!std::isfinite(best));

    double step = options.initial_step;
    std::size_t evaluations = 1;
    bool converged = false;
    std::vector<double> cycle_start(n), trial(n), direction(n);
    auto normalize = [&](std::vector<double>& x) {
        const double scale = eval.operator_norm(x);
        for (auto& e : x) e /= scale;
    };
    while (evaluations < options.max_evaluations) {
        cycle_start = m;
        bool improved = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (double sign : {1.0, -1.0}) {
                const double saved = m[i];
                m[i] = saved + sign * step;
                const double v = eval.normalized(m, kind);
                ++evaluations;
                if (v < best - sufficient_decrease(step)) {
                    best = v;
                    improved = true;
                    break;
                }
                m[i] = saved;
            }
        }
        // Keep the iterate on the unit sphere so the step size stays meaningful.
        normalize(m);
        best = eval.normalized(m, kind);
        if (!improved) {
            step *= 0.5;
            if (step < options.tol) {
                converged = true;
                break;
            }
            continue;
        }
        // Pattern move: extrapolate along the net displacement of the cycle,
        // doubling while it keeps paying off.
        for (std::size_t i = 0; i < n; ++i) direction[i] = m[i] - cycle_start[i];
        while (evaluations < options.max_evaluations) {
            for (std::size_t i = 0; i < n; ++i) trial[i] = m[i] + direction[i];
            const double v = eval.normalized(trial, kind);
            ++evaluations;
            if (!(v < best - sufficient_decrease(step))) break;
            m = trial;
            normalize(m);
            best = eval.normalized(m, kind);
            for (auto& e : direction) e *= 2.0;
        }
    }
    return {best, std::move(m), converged};
}

} // namespace

int default_restarts(const PolyhedralSpace& space) { return space.dim() <= 2 ? 64 : 256; }

IndexEstimate estimate_index(const PolyhedralSpace& space, RadiusKind kind, const IndexSearchOptions& options) {
    if (kind == RadiusKind::OperatorNorm)
        throw Error(ErrorCode::BadParameter, "index search supports kinds w, dw and dwstar");
    if (options.restarts < 1) throw Error(ErrorCode::BadParameter, "restarts must be at least 1");
    if (!(options.tol > 0.0)) throw Error(ErrorCode::BadParameter, "tol must be positive");
    if (!(options.initial_step > 0.0)) throw Error(ErrorCode::BadParameter, "initial step must be positive");

    std::vector<RestartResult> results(static_cast<std::size_t>(options.restarts));
    parallel_for(results.size(), [&](std::size_t r) {
        results[r] = run_restart(space, kind, options, substream_seed(options.seed, r));
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r)
        if (results[r].value < results[best].value - options.tol) best = r;

    const std::size_t d = space.dim();
    Operator raw(d, results[best].matrix);
    const Operator witness = raw.scaled(1.0 / operator_norm(space, raw).value);

    IndexEstimate out;
    out.kind = kind;
    out.value = radius(space, witness, kind).value;
    out.witness = witness;
    out.restarts_used = options.restarts;
    out.seed = options.seed;
    out.converged = results[best].converged;
    return out;
}

IndexEstimate estimate_index(const PolyhedralSpace& space, RadiusKind kind, int restarts, std::uint64_t seed,
                             double tol) {
    IndexSearchOptions options;
    options.restarts = restarts;
    options.seed = seed;
    options.tol = tol;
    return estimate_index(space, kind, options);
}

IndexBracket index_bracket(const PolyhedralSpace& space, RadiusKind kind, int restarts, std::uint64_t seed,
                           double tol) {
    if (kind != RadiusKind::DW && kind != RadiusKind::DWStar)
        throw Error(ErrorCode::BadParameter, "index bracket supports kinds dw and dwstar");
    IndexBracket out;
    out.estimate = estimate_index(space, kind, restarts, seed, tol);
    out.upper = out.estimate.value;
    out.lower = index_lower_bound(space);
    return out;
}

} // namespace dwindex
