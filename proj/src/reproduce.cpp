#include "dwindex/reproduce.hpp"

#include "dwindex/certifier.hpp"
#include "dwindex/gallery.hpp"
#include "dwindex/index_search.hpp"
#include "dwindex/io.hpp"
#include "dwindex/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace dwindex {

namespace {

constexpr double kIndexTol = 1e-6;

double polygon_index(int n) {
    const double angle = std::numbers::pi / (2.0 * n);
    const double t = n % 2 == 1 ? std::sin(angle) : std::tan(angle);
    return std::sqrt(t * t + 1.0);
}

double hexagon_gamma_bound(double gamma) {
    if (gamma <= 0.5) {
        const double q = 3.0 - 2.0 * gamma;
        return std::sqrt(1.0 / (q * q) + 1.0);
    }
    return std::sqrt((1.0 - gamma) * (1.0 - gamma) + 1.0);
}

double octagon_xi_bound(double xi) {
    if (xi > (1.0 - xi) / (1.0 + xi)) return std::sqrt(1.0 / ((2.0 + xi) * (2.0 + xi)) + 1.0);
    const double r = (1.0 + xi) / (3.0 + xi);
    return std::sqrt(r * r + 1.0);
}

Operator random_operator(std::mt19937_64& rng, std::size_t d) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> e(d * d);
    for (auto& x : e) x = u(rng);
    return Operator(d, std::move(e));
}

Point random_unit_point(const PolyhedralSpace& space, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Point x{std::vector<double>(space.dim())};
    double n = 0.0;
    while (!(n > 0.0)) {
        for (auto& c : x.coords) c = normal(rng);
        n = space.norm_of(x.coords);
    }
    for (auto& c : x.coords) c /= n;
    return x;
}

ReproduceRow equality_row(std::string key, std::string check, double expected, double observed, double tol) {
    return {std::move(key), std::move(check), std::abs(observed - expected) <= tol, expected, observed, tol};
}

ReproduceRow bound_row(std::string key, std::string check, double bound, double observed, double tol) {
    return {std::move(key), std::move(check), observed >= bound - tol, bound, observed, tol};
}

} // namespace

bool ReproduceReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReproduceRow& r) { return r.pass; });
}

ReproduceReport reproduce(const ReproduceOptions& options) {
    ReproduceReport report;
    auto& rows = report.rows;
    const auto seed = options.seed;
    auto estimate = [&](const PolyhedralSpace& s, RadiusKind kind) {
        return estimate_index(s, kind, default_restarts(s), seed, kIndexTol).value;
    };

    for (int n : {2, 3, 4, 5}) {
        const auto s = regular_polygon_space(n);
        rows.push_back(equality_row("polygon-index/n=" + std::to_string(n), "dw index of the regular 2n-gon",
                                    polygon_index(n), estimate(s, RadiusKind::DW), 1e-3));
    }

    const double root5_half = std::sqrt(5.0) / 2.0;
    {
        const auto s = pyramid_prism_space(options.pyramid_apex_height);
        const double est = estimate(s, RadiusKind::DW);
        const double lb = index_lower_bound(s);
        ReproduceRow row = equality_row("pyramid-prism-index", "dw index of the pyramid prism", root5_half, est, 5e-3);
        row.pass = row.pass && lb <= est + 1e-6;
        rows.push_back(row);
    }
    rows.push_back(equality_row("drum-index/n=3", "dw index of the drum space", root5_half,
                                estimate(drum_space(3), RadiusKind::DW), 5e-3));
    for (double h : {1.0, 2.0})
        rows.push_back(equality_row("prism-index/h=" + std::to_string(static_cast<int>(h)),
                                    "dw index of the hexagonal prism (height independent)", root5_half,
                                    estimate(prism_space(regular_polygon_space(3), h), RadiusKind::DW), 5e-3));

    for (double gamma : {0.3, 0.5, 0.75}) {
        const auto s = prism_space(hexagon_gamma_space(gamma), 1.0);
        const double lb = index_lower_bound(s);
        ReproduceRow row = bound_row("hexagon-gamma-bound/gamma=" + io::Json(gamma).dump(),
                                     "vertex-certificate bound on the hexagon-gamma prism", hexagon_gamma_bound(gamma),
                                     lb, 1e-4);
        row.pass = row.pass && lb <= estimate(s, RadiusKind::DW) + 1e-6;
        rows.push_back(row);
    }
    for (double xi : {0.25, 0.5}) {
        const auto s = prism_space(octagon_xi_space(xi), 1.0);
        const double lb = index_lower_bound(s);
        ReproduceRow row = bound_row("octagon-xi-bound/xi=" + io::Json(xi).dump(),
                                     "vertex-certificate bound on the octagon-xi prism", octagon_xi_bound(xi), lb, 1e-4);
        row.pass = row.pass && lb <= estimate(s, RadiusKind::DW) + 1e-6;
        rows.push_back(row);
    }

    for (int n : {2, 3, 4, 5})
        rows.push_back(equality_row("modified-index/polygon-n=" + std::to_string(n),
                                    "dw* index equals the dw closed form", polygon_index(n),
                                    estimate(regular_polygon_space(n), RadiusKind::DWStar), 5e-3));
    rows.push_back(equality_row("modified-index/pyramid-prism", "dw* index equals the dw closed form", root5_half,
                                estimate(pyramid_prism_space(options.pyramid_apex_height), RadiusKind::DWStar), 5e-3));
    rows.push_back(equality_row("modified-index/drum-n=3", "dw* index equals the dw closed form", root5_half,
                                estimate(drum_space(3), RadiusKind::DWStar), 5e-3));
    for (double h : {1.0, 2.0})
        rows.push_back(equality_row("modified-index/prism-h=" + std::to_string(static_cast<int>(h)),
                                    "dw* index equals the dw closed form", root5_half,
                                    estimate(prism_space(regular_polygon_space(3), h), RadiusKind::DWStar), 5e-3));
    {
        const auto square = regular_polygon_space(2);
        rows.push_back(equality_row("square-numerical-index", "numerical index of the square", 1.0,
                                    estimate(square, RadiusKind::NumericalRadius), 1e-3));
        rows.push_back(equality_row("square-index", "dw index of the square", std::sqrt(2.0),
                                    estimate(square, RadiusKind::DW), 1e-3));
    }

    // Property suites over the whole gallery.
    const auto gallery = standard_gallery();
    std::mt19937_64 rng(seed);
    bool segment_ok = true, smooth_ok = true, norm_ok = true, bound_ok = true, chain_ok = true, sound_ok = true;
    double worst_chain = 0.0;
    for (const auto& [name, s] : gallery) {
        const std::size_t d = s.dim();
        for (int k = 0; k < 20; ++k) {
            const Point x = k < 4 ? s.vertices()[static_cast<std::size_t>(k) % s.vertices().size()]
                                  : random_unit_point(s, rng);
            const auto support = support_set(s, x);
            const Operator t = random_operator(rng, d);
            const auto seg = dw_set_at(s, t, x);
            const Point y = t.apply(x);
            std::gamma_distribution<double> weight(1.0, 1.0);
            for (int c = 0; c < 20; ++c) {
                double total = 0.0, value = 0.0;
                for (const auto& f : support.functionals) {
                    const double lambda = weight(rng);
                    total += lambda;
                    value += lambda * f(y);
                }
                value /= total;
                segment_ok = segment_ok && value >= seg.lo - 1e-9 && value <= seg.hi + 1e-9;
            }
            if (support.functionals.size() == 1) smooth_ok = smooth_ok && seg.hi - seg.lo <= 1e-12;
        }
        for (int k = 0; k < 50; ++k) {
            const Operator t1 = random_operator(rng, d);
            const Operator t2 = random_operator(rng, d);
            const double n1 = operator_norm(s, t1).value;
            const double s1 = dw_star_radius(s, t1).value;
            const double s2 = dw_star_radius(s, t2).value;
            norm_ok = norm_ok && n1 <= s1 + 1e-9 && s1 <= std::sqrt(2.0) * n1 + 1e-9;
            norm_ok = norm_ok && std::abs(dw_star_radius(s, t1.scaled(-2.5)).value - 2.5 * s1) <= 1e-9 * (1.0 + s1);
            norm_ok = norm_ok && dw_star_radius(s, t1 + t2).value <= s1 + s2 + 1e-9;
            bound_ok = bound_ok && dw_upper_bound_G(s, t1) >= dw_radius(s, t1).value - 1e-9;
        }
        norm_ok = norm_ok && std::abs(dw_star_radius(s, Operator::identity(d)).value - std::sqrt(2.0)) <= 1e-12;

        const double n_hat = estimate(s, RadiusKind::NumericalRadius);
        const double eta_hat = estimate(s, RadiusKind::DW);
        const double ceiling = std::sqrt(n_hat * n_hat + 1.0);
        const bool chain = n_hat >= 0.0 && n_hat <= 1.0 + kIndexTol && eta_hat >= 1.0 - kIndexTol &&
                           eta_hat <= ceiling + kIndexTol && ceiling <= std::sqrt(2.0) + 5e-3;
        chain_ok = chain_ok && chain;
        worst_chain = std::max(worst_chain, eta_hat - ceiling);
        sound_ok = sound_ok && index_lower_bound(s) <= eta_hat + 1e-6;
    }
    rows.push_back({"segment-convexity", "convex combinations of support functionals stay in the segment", segment_ok,
                    1.0, segment_ok ? 1.0 : 0.0, 1e-9});
    rows.push_back({"smooth-point-singleton", "segment is a point exactly at smooth points", smooth_ok, 1.0,
                    smooth_ok ? 1.0 : 0.0, 1e-12});
    rows.push_back({"modified-radius-norm", "sandwich, homogeneity and triangle inequality for dw*", norm_ok, 1.0,
                    norm_ok ? 1.0 : 0.0, 1e-9});
    rows.push_back({"extreme-pair-upper-bound", "upper bound over extreme pairs dominates dw", bound_ok, 1.0,
                    bound_ok ? 1.0 : 0.0, 1e-9});
    rows.push_back({"index-chain", "0 <= n <= 1 <= eta_dw <= sqrt(n^2 + 1) <= sqrt 2", chain_ok, 0.0, worst_chain,
                    kIndexTol});
    rows.push_back({"certificate-soundness", "vertex-certificate bound never exceeds the search estimate", sound_ok,
                    1.0, sound_ok ? 1.0 : 0.0, 1e-6});
    return report;
}

std::string report_to_json(const ReproduceReport& report) {
    io::Json rows = io::Json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"key", r.key},
                        {"check", r.check},
                        {"status", r.pass ? "PASS" : "FAIL"},
                        {"expected", r.expected},
                        {"observed", r.observed},
                        {"tolerance", r.tolerance}});
    return io::Json{{"all_pass", report.all_pass()}, {"rows", rows}}.dump(2);
}

} // namespace dwindex
