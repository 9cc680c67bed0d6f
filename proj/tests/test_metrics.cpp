#include "oracles.hpp"

#include "dwindex/error.hpp"
#include "dwindex/gallery.hpp"
#include "dwindex/metrics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dwindex;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Operator op2(double a, double b, double c, double d) { return Operator(2, {a, b, c, d}); }

Operator random_operator(std::mt19937_64& rng, std::size_t d) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> e(d * d);
    for (auto& x : e) x = u(rng);
    return Operator(d, e);
}

} // namespace

TEST_CASE("operator norm examples") {
    const auto hex = regular_polygon_space(3);
    const auto sq = regular_polygon_space(2);
    CHECK(operator_norm(hex, Operator::identity(2)).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(operator_norm(hex, op2(0, 1, 1, 0)).value == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(operator_norm(sq, op2(1, 0, 0, -1)).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("numerical radius examples") {
    const auto hex = regular_polygon_space(3);
    const auto sq = regular_polygon_space(2);
    CHECK(numerical_radius(hex, Operator::identity(2)).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(numerical_radius(sq, op2(0, -1, 1, 0)).value == doctest::Approx(1.0).epsilon(1e-12));
    // The quarter turn has norm 2/sqrt(3) on the hexagon; normalized it attains n(X) = 1/2.
    const Operator rot = op2(0, -1, 1, 0);
    CHECK(numerical_radius(hex, rot).value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    const Operator unit_rot = rot.scaled(1.0 / operator_norm(hex, rot).value);
    CHECK(numerical_radius(hex, unit_rot).value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("Davis-Wielandt radius examples") {
    const auto hex = regular_polygon_space(3);
    const auto sq = regular_polygon_space(2);
    CHECK(dw_radius(hex, Operator::identity(2)).value == doctest::Approx(kSqrt2).epsilon(1e-12));
    CHECK(dw_radius(hex, Operator::zero(2)).value == 0.0);
    CHECK(dw_radius(sq, op2(1, 0, 0, -1)).value == doctest::Approx(kSqrt2).epsilon(1e-12));
    const Operator swap = op2(0, 1, 1, 0);
    const double s = dw_star_radius(hex, swap).value;
    const double n = operator_norm(hex, swap).value;
    CHECK(s >= n - 1e-12);
    CHECK(s <= kSqrt2 * n + 1e-12);
    CHECK(dw_star_radius(hex, Operator::identity(2)).value == doctest::Approx(kSqrt2).epsilon(1e-12));
    CHECK(dw_upper_bound_G(hex, swap) >= dw_radius(hex, swap).value - 1e-12);
    CHECK(dw_upper_bound_G(hex, Operator::identity(2)) == doctest::Approx(kSqrt2).epsilon(1e-12));
    CHECK(dw_upper_bound_G(hex, Operator::zero(2)) == 0.0);
}

TEST_CASE("witnesses attain the reported value") {
    std::mt19937_64 rng(17);
    const auto s = pyramid_prism_space();
    for (int k = 0; k < 20; ++k) {
        const Operator t = random_operator(rng, 3);
        const auto report = dw_radius(s, t);
        REQUIRE_FALSE(report.witnesses.empty());
        for (const auto& w : report.witnesses) {
            const Point tv = t.apply(s.vertices()[w.vertex_id]);
            const double f = s.facets()[w.facet_id].functional(tv);
            const double n = s.norm_of(tv.coords);
            CHECK(std::abs(std::sqrt(f * f + n * n * n * n) - report.value) <= kWitnessTol);
        }
    }
}

TEST_CASE("segment at a point") {
    const auto hex = regular_polygon_space(3);
    const Point v{{1.0, 0.0}};
    const auto id = dw_set_at(hex, Operator::identity(2), v);
    CHECK(id.lo == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id.hi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id.level == doctest::Approx(1.0).epsilon(1e-12));
    const auto seg = dw_set_at(hex, op2(0, 0, 1, 0), v);
    // f((0,1)) over the two edges at (1,0): 1/sqrt(3) and -1/sqrt(3).
    CHECK(seg.lo == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(seg.hi == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    Point mid{{0.75, std::sqrt(3.0) / 4}};
    const double n = hex.norm_of(mid.coords);
    for (auto& c : mid.coords) c /= n;
    const auto smooth = dw_set_at(hex, op2(0.3, -1, 2, 0.5), mid);
    CHECK(smooth.lo == smooth.hi);
}

TEST_CASE("radius kinds parse and print") {
    for (const char* name : {"opnorm", "w", "dw", "dwstar"}) CHECK(to_string(parse_radius_kind(name)) == name);
    CHECK_THROWS_AS(parse_radius_kind("nope"), Error);
    CHECK_THROWS_AS(dw_radius(regular_polygon_space(3), Operator::identity(3)), Error);
}

TEST_CASE("sampled oracle never exceeds the exact value") {
    const auto hex = regular_polygon_space(3);
    const Operator swap = op2(0, 1, 1, 0);
    CHECK(sampled_dw(hex, Operator::identity(2), RadiusKind::DW, 100000, 42) ==
          doctest::Approx(kSqrt2).epsilon(1e-9));
    CHECK(sampled_dw(hex, Operator::identity(2), RadiusKind::DWStar, 100000, 42) ==
          doctest::Approx(kSqrt2).epsilon(1e-9));
    CHECK(sampled_dw(hex, swap, RadiusKind::DW, 100000, 42) <= dw_radius(hex, swap).value + 1e-9);
    std::mt19937_64 rng(23);
    for (const char* name : {"regular-polygon-3", "hexagon-gamma-0.5", "octagon-xi-0.5"}) {
        for (const auto& [n, s] : standard_gallery()) {
            if (n != name) continue;
            const Operator t = random_operator(rng, 2);
            const double exact = numerical_radius(s, t).value;
            CHECK(sampled_dw(s, t, RadiusKind::NumericalRadius, 100000, 42) <= exact + 1e-9);
            CHECK(sampled_dw(s, t, RadiusKind::NumericalRadius, 100000, 42) >= exact - 5e-3);
        }
    }
}

TEST_CASE("sampling does not depend on the thread count") {
    const auto s = drum_space(3);
    std::mt19937_64 rng(2);
    const Operator t = random_operator(rng, 3);
    const auto a = sampled_radii(s, t, 20000, 9);
    setenv("DWINDEX_THREADS", "3", 1);
    const auto b = sampled_radii(s, t, 20000, 9);
    unsetenv("DWINDEX_THREADS");
    CHECK(a.w == b.w);
    CHECK(a.dw == b.dw);
    CHECK(a.dw_star == b.dw_star);
}

// The extreme-pair reduction is checked against a sampler that knows
// nothing about facets or pairs: norming functionals come from finite
// differences of the norm and the supremum is polished by local ascent.
// The ascent approaches the maximizing vertex only through a thin wedge
// along a ridge, so its shortfall gets a looser pin than its overshoot.
TEST_CASE("extreme-pair reduction matches the polished oracle") {
    std::mt19937_64 rng(101);
    int checked = 0;
    for (const auto& [name, s] : standard_gallery()) {
        CAPTURE(name);
        for (int k = 0; k < 3; ++k) {
            const Operator t = random_operator(rng, s.dim());
            const std::pair<RadiusKind, oracle::Kind> kinds[] = {{RadiusKind::NumericalRadius, oracle::Kind::W},
                                                                 {RadiusKind::DW, oracle::Kind::DW},
                                                                 {RadiusKind::DWStar, oracle::Kind::DWStar}};
            for (const auto& [kind, okind] : kinds) {
                const double exact = radius(s, t, kind).value;
                const double polished = oracle::polished_radius(s, t, okind, 4000, 7 + k);
                CHECK(polished <= exact + 1e-6);
                CHECK(polished >= exact - 5e-4);
                ++checked;
            }
        }
    }
    CHECK(checked == 135);
}

TEST_CASE("evaluator agrees with the reference radii") {
    std::mt19937_64 rng(8);
    for (const auto& [name, s] : standard_gallery()) {
        RadiusEvaluator eval(s);
        for (int k = 0; k < 10; ++k) {
            const Operator t = random_operator(rng, s.dim());
            for (auto kind : {RadiusKind::NumericalRadius, RadiusKind::DW, RadiusKind::DWStar}) {
                const double norm = operator_norm(s, t).value;
                const double expected = radius(s, t.scaled(1.0 / norm), kind).value;
                CHECK(std::abs(eval.normalized(t.entries(), kind) - expected) <= 1e-12);
            }
            CHECK(std::abs(eval.operator_norm(t.entries()) - operator_norm(s, t).value) <= 1e-12);
        }
    }
}
