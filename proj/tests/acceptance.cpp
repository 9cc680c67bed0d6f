// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Details for each criterion follow its status line.
#include "dwindex/certifier.hpp"
#include "dwindex/gallery.hpp"
#include "dwindex/index_search.hpp"
#include "dwindex/lp_shell.hpp"
#include "dwindex/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dwindex;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kSearchTol = 1e-6;
const double kRoot5Half = std::sqrt(5.0) / 2.0;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        detail << "    " << (ok ? "ok   " : "FAIL ") << what << '\n';
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double polygon_formula(int n) {
    const double a = std::numbers::pi / (2.0 * n);
    const double t = n % 2 == 1 ? std::sin(a) : std::tan(a);
    return std::sqrt(t * t + 1.0);
}

double estimate(const PolyhedralSpace& s, RadiusKind kind, int restarts) {
    return estimate_index(s, kind, restarts, kSeed, kSearchTol).value;
}

Operator random_operator(std::mt19937_64& rng, std::size_t d) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> e(d * d);
    for (auto& x : e) x = u(rng);
    return Operator(d, e);
}

Point random_unit(const PolyhedralSpace& s, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Point x{std::vector<double>(s.dim())};
    double n = 0.0;
    while (!(n > 0.0)) {
        for (auto& c : x.coords) c = normal(rng);
        n = s.norm_of(x.coords);
    }
    for (auto& c : x.coords) c /= n;
    return x;
}

void closed_form_indices(Outcome& o, RadiusKind kind, double planar_tol) {
    for (int n = 2; n <= 5; ++n) {
        const double v = estimate(regular_polygon_space(n), kind, 64);
        const double target = polygon_formula(n);
        o.require(std::abs(v - target) <= planar_tol,
                  "polygon n=" + std::to_string(n) + ": " + fmt(v) + " vs formula " + fmt(target));
    }
}

void three_d_indices(Outcome& o, RadiusKind kind, bool with_lower_bound) {
    const auto pyramid = pyramid_prism_space();
    const double p = estimate(pyramid, kind, 256);
    o.require(std::abs(p - kRoot5Half) <= 5e-3, "pyramid prism: " + fmt(p));
    if (with_lower_bound) {
        const double lb = index_lower_bound(pyramid);
        o.require(lb <= p + 1e-6, "pyramid prism lower bound " + fmt(lb) + " <= estimate");
    }
}

void drum_and_prism(Outcome& o, RadiusKind kind) {
    const double drum = estimate(drum_space(3), kind, 256);
    o.require(std::abs(drum - kRoot5Half) <= 5e-3, "drum n=3: " + fmt(drum));
    for (double h : {1.0, 2.0}) {
        const double v = estimate(prism_space(regular_polygon_space(3), h), kind, 256);
        o.require(std::abs(v - kRoot5Half) <= 5e-3, "hexagonal prism h=" + fmt(h) + ": " + fmt(v));
    }
}

Outcome criterion_1() {
    Outcome o;
    closed_form_indices(o, RadiusKind::DW, 1e-3);
    return o;
}

Outcome criterion_2() {
    Outcome o;
    three_d_indices(o, RadiusKind::DW, true);
    return o;
}

Outcome criterion_3() {
    Outcome o;
    drum_and_prism(o, RadiusKind::DW);
    return o;
}

Outcome criterion_4() {
    Outcome o;
    for (double gamma : {0.3, 0.5, 0.75}) {
        const auto s = prism_space(hexagon_gamma_space(gamma), 1.0);
        const double formula = gamma <= 0.5 ? std::sqrt(1.0 / ((3 - 2 * gamma) * (3 - 2 * gamma)) + 1.0)
                                            : std::sqrt((1 - gamma) * (1 - gamma) + 1.0);
        const double lb = index_lower_bound(s);
        const double est = estimate(s, RadiusKind::DW, 256);
        o.require(lb >= formula - 1e-4, "gamma=" + fmt(gamma) + ": bound " + fmt(lb) + " >= " + fmt(formula));
        o.require(lb <= est + 1e-6, "gamma=" + fmt(gamma) + ": bound <= estimate " + fmt(est));
    }
    return o;
}

Outcome criterion_5() {
    Outcome o;
    for (double xi : {0.25, 0.5}) {
        const auto s = prism_space(octagon_xi_space(xi), 1.0);
        const bool first_branch = xi > (1 - xi) / (1 + xi);
        const double r = first_branch ? 1.0 / (2.0 + xi) : (1.0 + xi) / (3.0 + xi);
        const double formula = std::sqrt(r * r + 1.0);
        const double lb = index_lower_bound(s);
        const double est = estimate(s, RadiusKind::DW, 256);
        o.require(lb >= formula - 1e-4, "xi=" + fmt(xi) + ": bound " + fmt(lb) + " >= " + fmt(formula));
        o.require(lb <= est + 1e-6, "xi=" + fmt(xi) + ": bound <= estimate " + fmt(est));
    }
    return o;
}

Outcome criterion_6() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> scalar(-3.0, 3.0);
    for (const auto& [name, s] : standard_gallery()) {
        int violations = 0;
        for (int k = 0; k < 200; ++k) {
            const Operator a = random_operator(rng, s.dim());
            const Operator b = random_operator(rng, s.dim());
            const double c = scalar(rng);
            const double na = operator_norm(s, a).value;
            const double da = dw_star_radius(s, a).value;
            const double db = dw_star_radius(s, b).value;
            if (!(na <= da + 1e-9 && da <= std::sqrt(2.0) * na + 1e-9)) ++violations;
            if (std::abs(dw_star_radius(s, a.scaled(c)).value - std::abs(c) * da) > 1e-9) ++violations;
            if (dw_star_radius(s, a + b).value > da + db + 1e-9) ++violations;
        }
        const double id = dw_star_radius(s, Operator::identity(s.dim())).value;
        o.require(violations == 0 && std::abs(id - std::sqrt(2.0)) <= 1e-12,
                  name + ": " + std::to_string(violations) + " violations, dw*(I) - sqrt2 = " + sci(id - std::sqrt(2.0)));
    }
    return o;
}

Outcome criterion_7() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    for (const auto& [name, s] : standard_gallery()) {
        int below = 0, above = 0, g_fail = 0;
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const Operator raw = random_operator(rng, s.dim());
            const Operator t = raw.scaled(1.0 / operator_norm(s, raw).value);
            const double dw = dw_radius(s, t).value;
            if (dw_upper_bound_G(s, t) < dw - 1e-9) ++g_fail;
            const auto sampled = sampled_radii(s, t, 100000, kSeed + static_cast<std::uint64_t>(k));
            const double exact[] = {dw, dw_star_radius(s, t).value, numerical_radius(s, t).value};
            const double got[] = {sampled.dw, sampled.dw_star, sampled.w};
            for (int i = 0; i < 3; ++i) {
                if (got[i] > exact[i] + 1e-9) ++above;
                if (got[i] < exact[i] - 5e-3) ++below;
                worst = std::max(worst, exact[i] - got[i]);
            }
        }
        o.require(g_fail == 0 && above == 0 && below == 0,
                  name + ": G<dw " + std::to_string(g_fail) + ", oracle above " + std::to_string(above) +
                      ", oracle short by >5e-3 " + std::to_string(below) + "/300, largest shortfall " + sci(worst));
    }
    return o;
}

Outcome criterion_8() {
    Outcome o;
    for (const auto& [name, s] : standard_gallery()) {
        const int r = default_restarts(s);
        const double n_hat = estimate(s, RadiusKind::NumericalRadius, r);
        const double eta = estimate(s, RadiusKind::DW, r);
        const double ceiling = std::sqrt(n_hat * n_hat + 1.0);
        const bool ok = n_hat >= 0.0 && n_hat <= 1.0 + kSearchTol && eta >= 1.0 - kSearchTol &&
                        eta <= ceiling + kSearchTol && ceiling <= std::sqrt(2.0) + 5e-3;
        o.require(ok, name + ": n=" + fmt(n_hat) + " eta=" + fmt(eta) + " sqrt(n^2+1)=" + fmt(ceiling));
    }
    const auto sq = regular_polygon_space(2);
    const double n_sq = estimate(sq, RadiusKind::NumericalRadius, 64);
    const double eta_sq = estimate(sq, RadiusKind::DW, 64);
    o.require(std::abs(n_sq - 1.0) <= 1e-3 && std::abs(eta_sq - std::sqrt(2.0)) <= 1e-3,
              "square: n=" + fmt(n_sq) + " eta=" + fmt(eta_sq));
    return o;
}

Outcome criterion_9() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    std::gamma_distribution<double> weight(1.0, 1.0);
    for (const auto& [name, s] : standard_gallery()) {
        int outside = 0, smooth_bad = 0, checked = 0;
        for (int k = 0; k < 20; ++k) {
            // Every fourth point is a vertex so that non-singleton J(x) is exercised.
            const Point x = k % 4 == 0 ? s.vertices()[static_cast<std::size_t>(k / 4) % s.vertices().size()]
                                       : random_unit(s, rng);
            const auto support = support_set(s, x);
            const Operator t = random_operator(rng, s.dim());
            const auto seg = dw_set_at(s, t, x);
            const Point tx = t.apply(x);
            for (int c = 0; c < 100; ++c) {
                double total = 0.0, value = 0.0;
                for (const auto& f : support.functionals) {
                    const double l = weight(rng);
                    total += l;
                    value += l * f(tx);
                }
                value /= total;
                if (value < seg.lo - 1e-9 || value > seg.hi + 1e-9) ++outside;
                ++checked;
            }
            const bool smooth = is_smooth_point(s, x);
            if (smooth != (support.functionals.size() == 1)) ++smooth_bad;
            if (smooth && seg.lo != seg.hi) ++smooth_bad;
        }
        o.require(outside == 0 && smooth_bad == 0 && checked == 2000,
                  name + ": " + std::to_string(outside) + " outside, " + std::to_string(smooth_bad) +
                      " smoothness mismatches");
    }
    return o;
}

Outcome criterion_10() {
    Outcome o;
    using namespace dwindex::shell;
    const auto nonconvex = sample_shell(nonconvex_block_operator(2), 4.0, 100000, kSeed);
    const double threshold = 10.0 * median_nearest_neighbor_distance(nonconvex);
    const auto witness = convexity_witness(nonconvex, threshold);
    o.require(witness.has_value() && witness->gap > threshold,
              "p=4 witness gap " + (witness ? sci(witness->gap) : std::string("none")) + " > threshold " +
                  sci(threshold));
    const ComplexOperator normal(2, {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 1)});
    const auto control = sample_shell(normal, 2.0, 100000, kSeed);
    const auto none = convexity_witness(control, threshold);
    o.require(!none.has_value(), "p=2 diag(1,i) control: " +
                                     (none ? "witness gap " + sci(none->gap) : std::string("no witness")));
    return o;
}

Outcome criterion_11() {
    Outcome o;
    closed_form_indices(o, RadiusKind::DWStar, 5e-3);
    three_d_indices(o, RadiusKind::DWStar, false);
    drum_and_prism(o, RadiusKind::DWStar);
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 planar closed-form dw index", criterion_1},
        {"2 pyramid prism dw index and lower bound", criterion_2},
        {"3 drum and hexagonal prism dw index", criterion_3},
        {"4 hexagon-gamma prism lower bound", criterion_4},
        {"5 octagon-xi prism lower bound", criterion_5},
        {"6 modified radius is an equivalent norm", criterion_6},
        {"7 extreme-pair reduction against the sampled oracle", criterion_7},
        {"8 index chain and square spot check", criterion_8},
        {"9 segment membership and smooth singletons", criterion_9},
        {"10 l_p shell convexity witness", criterion_10},
        {"11 modified index closed forms", criterion_11},
    };
    int failed = 0;
    for (const auto& [label, run] : criteria) {
        const Outcome o = run();
        std::printf("%s %s\n%s", o.pass ? "PASS" : "FAIL", label.c_str(), o.detail.str().c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
