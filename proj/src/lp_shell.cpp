#include "dwindex/lp_shell.hpp"

#include "dwindex/error.hpp"
#include "dwindex/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace dwindex::shell {

namespace {

constexpr std::size_t kSampleBlock = 4096;

void check_exponent(double p) {
    if (!std::isfinite(p) || !(p > 1.0)) throw Error(ErrorCode::BadParameter, "p must lie in (1, inf)");
}

double sq_distance(const ShellPoint& a, const double q[3]) {
    const double dx = a.w_re - q[0];
    const double dy = a.w_im - q[1];
    const double dz = a.s - q[2];
    return dx * dx + dy * dy + dz * dz;
}

double coord(const ShellPoint& p, int axis) { return axis == 0 ? p.w_re : axis == 1 ? p.w_im : p.s; }

} // namespace

ComplexOperator::ComplexOperator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
        throw Error(ErrorCode::DimensionMismatch, "operator entries do not form a square matrix");
    for (const auto& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw Error(ErrorCode::BadParameter, "non-finite operator entry");
}

ComplexOperator ComplexOperator::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return ComplexOperator(dim, std::move(e));
}

void ComplexOperator::apply(std::span<const Complex> x, std::span<Complex> out) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) s += entries_[r * dim_ + c] * x[c];
        out[r] = s;
    }
}

double lp_norm(std::span<const Complex> x, double p) {
    double s = 0.0;
    for (const auto& v : x) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

std::vector<Complex> lp_support_functional(std::span<const Complex> x, double p) {
    check_exponent(p);
    if (std::abs(lp_norm(x, p) - 1.0) > 1e-12) throw Error(ErrorCode::NotUnitNorm, "vector is not of unit l_p norm");
    std::vector<Complex> g(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double m = std::abs(x[j]);
        g[j] = m == 0.0 ? Complex{} : std::pow(m, p - 2.0) * std::conj(x[j]);
    }
    return g;
}

ShellSample sample_shell(const ComplexOperator& t, double p, std::size_t samples, std::uint64_t seed) {
    check_exponent(p);
    if (samples < 1) throw Error(ErrorCode::BadParameter, "samples must be at least 1");
    const std::size_t d = t.dim();
    if (d < 1) throw Error(ErrorCode::BadParameter, "operator dimension must be positive");

    ShellSample out;
    out.p = p;
    out.seed = seed;
    out.count = samples;
    out.points.resize(samples);

    const std::size_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
    parallel_for(blocks, [&](std::size_t b) {
        std::mt19937_64 rng(substream_seed(seed, b));
        std::normal_distribution<double> normal;
        std::vector<Complex> x(d), y(d);
        const std::size_t end = std::min(samples, (b + 1) * kSampleBlock);
        for (std::size_t i = b * kSampleBlock; i < end; ++i) {
            double n = 0.0;
            while (!(n > 0.0)) {
                for (auto& c : x) c = Complex(normal(rng), normal(rng));
                n = lp_norm(x, p);
            }
            for (auto& c : x) c /= n;
            const auto g = lp_support_functional(x, p);
            t.apply(x, y);
            Complex w = 0.0;
            for (std::size_t j = 0; j < d; ++j) w += g[j] * y[j];
            const double ny = lp_norm(y, p);
            out.points[i] = {w.real(), w.imag(), ny * ny};
        }
    });
    return out;
}

double shell_dw_estimate(const ShellSample& sample) {
    double best = 0.0;
    for (const auto& pt : sample.points)
        best = std::max(best, pt.w_re * pt.w_re + pt.w_im * pt.w_im + pt.s * pt.s);
    return std::sqrt(best);
}

BlockConditions check_block_conditions(double a, Complex b, Complex c, double d, double tol) {
    BlockConditions out;
    out.trace_zero = std::abs(a + d) <= tol;
    out.equal_moduli = std::abs(std::abs(b) - std::abs(c)) <= tol;
    out.cross_term_zero = std::abs(b.real() * c.imag() + c.real() * b.imag()) <= tol;
    return out;
}

ComplexOperator nonconvex_block_operator(int n) {
    if (n < 2) throw Error(ErrorCode::BadParameter, "operator dimension must be at least 2");
    const double a = 1.0;
    const double d = -1.0;
    const Complex b = std::polar(1.0, std::numbers::pi / 4.0);
    const Complex c = std::polar(1.0, -std::numbers::pi / 4.0);
    if (!check_block_conditions(a, b, c, d).all())
        throw Error(ErrorCode::BadParameter, "block entries violate the non-convexity conditions");
    const auto size = static_cast<std::size_t>(n);
    std::vector<Complex> e(size * size);
    e[0] = a;
    e[1] = b;
    e[size] = c;
    e[size + 1] = d;
    return ComplexOperator(size, std::move(e));
}

PointCloudIndex::PointCloudIndex(std::span<const ShellPoint> points) : points_(points.begin(), points.end()) {
    std::vector<std::size_t> ids(points_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    nodes_.reserve(points_.size());
    root_ = build(ids, 0, ids.size(), 0);
}

int PointCloudIndex::build(std::vector<std::size_t>& ids, std::size_t lo, std::size_t hi, int depth) {
    if (lo >= hi) return -1;
    const int axis = depth % 3;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(ids.begin() + static_cast<std::ptrdiff_t>(lo), ids.begin() + static_cast<std::ptrdiff_t>(mid),
                     ids.begin() + static_cast<std::ptrdiff_t>(hi), [&](std::size_t a, std::size_t b) {
                         return coord(points_[a], axis) < coord(points_[b], axis);
                     });
    const int index = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{ids[mid], axis, -1, -1});
    const int left = build(ids, lo, mid, depth + 1);
    const int right = build(ids, mid + 1, hi, depth + 1);
    nodes_[static_cast<std::size_t>(index)].left = left;
    nodes_[static_cast<std::size_t>(index)].right = right;
    return index;
}

void PointCloudIndex::search(int node, const double q[3], std::size_t skip, double& best_sq) const {
    if (node < 0) return;
    const Node& n = nodes_[static_cast<std::size_t>(node)];
    const ShellPoint& p = points_[n.point];
    if (n.point != skip) best_sq = std::min(best_sq, sq_distance(p, q));
    const double diff = q[n.axis] - coord(p, n.axis);
    const int near = diff < 0.0 ? n.left : n.right;
    const int far = diff < 0.0 ? n.right : n.left;
    search(near, q, skip, best_sq);
    if (diff * diff < best_sq) search(far, q, skip, best_sq);
}

double PointCloudIndex::nearest_distance(const ShellPoint& q) const {
    const double query[3] = {q.w_re, q.w_im, q.s};
    double best = std::numeric_limits<double>::infinity();
    search(root_, query, static_cast<std::size_t>(-1), best);
    return std::sqrt(best);
}

double PointCloudIndex::nearest_other_distance(std::size_t index) const {
    const ShellPoint& q = points_[index];
    const double query[3] = {q.w_re, q.w_im, q.s};
    double best = std::numeric_limits<double>::infinity();
    search(root_, query, index, best);
    return std::sqrt(best);
}

double median_nearest_neighbor_distance(const ShellSample& sample) {
    if (sample.points.size() < 2) return 0.0;
    PointCloudIndex index(sample.points);
    std::vector<double> d(sample.points.size());
    parallel_for(d.size(), [&](std::size_t i) { d[i] = index.nearest_other_distance(i); });
    const auto mid = d.begin() + static_cast<std::ptrdiff_t>(d.size() / 2);
    std::nth_element(d.begin(), mid, d.end());
    return *mid;
}

std::optional<ConvexityWitness> convexity_witness(const ShellSample& sample, double tol,
                                                  const WitnessSearchOptions& options) {
    const auto& pts = sample.points;
    if (pts.size() < 2) return std::nullopt;
    PointCloudIndex index(pts);

    // Candidate pairs: extreme points along a Fibonacci set of directions,
    // all pairs among them, plus uniformly random pairs.
    std::vector<std::size_t> extremes;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < options.directions; ++k) {
        const double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(options.directions);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double dir[3] = {r * std::cos(golden * static_cast<double>(k)), r * std::sin(golden * static_cast<double>(k)), z};
        std::size_t arg = 0;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double v = dir[0] * pts[i].w_re + dir[1] * pts[i].w_im + dir[2] * pts[i].s;
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        extremes.push_back(arg);
    }
    std::sort(extremes.begin(), extremes.end());
    extremes.erase(std::unique(extremes.begin(), extremes.end()), extremes.end());

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < extremes.size(); ++i)
        for (std::size_t j = i + 1; j < extremes.size(); ++j) pairs.emplace_back(extremes[i], extremes[j]);
    std::mt19937_64 rng(substream_seed(options.seed, sample.seed));
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (std::size_t k = 0; k < options.random_pairs; ++k) pairs.emplace_back(pick(rng), pick(rng));

    std::vector<double> gaps(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
        const auto& a = pts[pairs[k].first];
        const auto& b = pts[pairs[k].second];
        gaps[k] = index.nearest_distance({0.5 * (a.w_re + b.w_re), 0.5 * (a.w_im + b.w_im), 0.5 * (a.s + b.s)});
    });

    std::size_t best = 0;
    for (std::size_t k = 1; k < gaps.size(); ++k)
        if (gaps[k] > gaps[best]) best = k;
    if (!(gaps[best] > tol)) return std::nullopt;

    const auto& a = pts[pairs[best].first];
    const auto& b = pts[pairs[best].second];
    return ConvexityWitness{a, b, {0.5 * (a.w_re + b.w_re), 0.5 * (a.w_im + b.w_im), 0.5 * (a.s + b.s)}, gaps[best]};
}

} // namespace dwindex::shell
