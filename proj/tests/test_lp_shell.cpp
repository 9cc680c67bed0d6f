#include "dwindex/error.hpp"
#include "dwindex/lp_shell.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace dwindex;
using namespace dwindex::shell;

namespace {

double brute_nearest(const std::vector<ShellPoint>& pts, const ShellPoint& q) {
    double best = INFINITY;
    for (const auto& p : pts)
        best = std::min(best, std::hypot(p.w_re - q.w_re, p.w_im - q.w_im, p.s - q.s));
    return best;
}

ComplexOperator diag_1_i() { return ComplexOperator(2, {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 1)}); }

} // namespace

TEST_CASE("support functional norms the point") {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> normal;
    for (double p : {1.5, 2.0, 3.0, 4.0, 10.0}) {
        for (int k = 0; k < 50; ++k) {
            std::vector<Complex> x(3);
            for (auto& c : x) c = Complex(normal(rng), normal(rng));
            const double n = lp_norm(x, p);
            for (auto& c : x) c /= n;
            const auto g = lp_support_functional(x, p);
            Complex value = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) value += g[i] * x[i];
            CHECK(std::abs(value - Complex(1.0, 0.0)) <= 1e-12);
            CHECK(lp_norm(g, p / (p - 1)) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    const std::vector<Complex> not_unit{Complex(2, 0), Complex(0, 0)};
    CHECK_THROWS_AS(lp_support_functional(not_unit, 4.0), Error);
    CHECK_THROWS_AS(lp_support_functional(std::vector<Complex>{Complex(1, 0)}, 1.0), Error);
}

TEST_CASE("block conditions of the non-convex operator") {
    const auto t = nonconvex_block_operator(2);
    CHECK(check_block_conditions(t.at(0, 0).real(), t.at(0, 1), t.at(1, 0), t.at(1, 1).real()).all());
    CHECK_FALSE(check_block_conditions(1.0, Complex(1, 0), Complex(1, 0), 1.0).all());
    const auto padded = nonconvex_block_operator(4);
    CHECK(padded.dim() == 4);
    CHECK(padded.at(3, 3) == Complex(0, 0));
}

TEST_CASE("sampling is deterministic and thread independent") {
    const auto t = nonconvex_block_operator(2);
    const auto a = sample_shell(t, 4.0, 10000, 42);
    setenv("DWINDEX_THREADS", "3", 1);
    const auto b = sample_shell(t, 4.0, 10000, 42);
    unsetenv("DWINDEX_THREADS");
    REQUIRE(a.points.size() == 10000);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].w_re == b.points[i].w_re);
        CHECK(a.points[i].s == b.points[i].s);
    }
}

TEST_CASE("identity shell is the single point (1, 0, 1)") {
    const auto s = sample_shell(ComplexOperator::identity(3), 3.0, 1000, 1);
    for (const auto& p : s.points) {
        CHECK(std::abs(p.w_re - 1.0) <= 1e-12);
        CHECK(std::abs(p.w_im) <= 1e-12);
        CHECK(std::abs(p.s - 1.0) <= 1e-12);
    }
    CHECK(shell_dw_estimate(s) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("k-d tree agrees with brute force") {
    const auto sample = sample_shell(nonconvex_block_operator(2), 4.0, 3000, 5);
    PointCloudIndex index(sample.points);
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 200; ++k) {
        const ShellPoint q{u(rng), u(rng), u(rng) + 2.0};
        CHECK(index.nearest_distance(q) == doctest::Approx(brute_nearest(sample.points, q)).epsilon(1e-12));
    }
    for (std::size_t i = 0; i < 100; ++i) {
        auto others = sample.points;
        others.erase(others.begin() + static_cast<long>(i));
        CHECK(index.nearest_other_distance(i) ==
              doctest::Approx(brute_nearest(others, sample.points[i])).epsilon(1e-12));
    }
}

TEST_CASE("convexity witness separates p = 4 from the Hilbert control") {
    const auto nonconvex = sample_shell(nonconvex_block_operator(2), 4.0, 100000, 42);
    const double threshold = 10.0 * median_nearest_neighbor_distance(nonconvex);
    const auto witness = convexity_witness(nonconvex, threshold);
    REQUIRE(witness.has_value());
    CHECK(witness->gap > threshold);

    // Calibration: the midpoint stays far from an independent 10^6-point
    // cloud, so the gap is a property of the shell rather than of sparse
    // sampling.
    const auto dense = sample_shell(nonconvex_block_operator(2), 4.0, 1000000, 4242);
    PointCloudIndex dense_index(dense.points);
    CHECK(dense_index.nearest_distance(witness->midpoint) > threshold);

    const auto control = sample_shell(diag_1_i(), 2.0, 100000, 42);
    CHECK_FALSE(convexity_witness(control, threshold).has_value());
    const auto hermitian_block = sample_shell(nonconvex_block_operator(2), 2.0, 100000, 42);
    CHECK_FALSE(convexity_witness(hermitian_block, threshold).has_value());
}
