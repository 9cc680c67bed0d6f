#include "dwindex/metrics.hpp"

#include "dwindex/error.hpp"
#include "dwindex/linalg.hpp"
#include "dwindex/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace dwindex {

namespace {

constexpr std::size_t kSampleBlock = 4096;

void check_dims(const PolyhedralSpace& space, const Operator& t) {
    if (t.dim() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "operator dimension mismatch");
}

double pair_value(RadiusKind kind, double pairing, double image_norm) {
    switch (kind) {
    case RadiusKind::NumericalRadius: return std::abs(pairing);
    case RadiusKind::DW: {
        const double sq = image_norm * image_norm;
        return std::sqrt(pairing * pairing + sq * sq);
    }
    case RadiusKind::DWStar: return std::sqrt(pairing * pairing + image_norm * image_norm);
    case RadiusKind::OperatorNorm: return image_norm;
    }
    return 0.0;
}

std::size_t argmax_facet(const PolyhedralSpace& space, std::span<const double> y) {
    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < space.facets().size(); ++j) {
        const double v = space.facets()[j].functional(y);
        if (v > best_value) {
            best_value = v;
            best = j;
        }
    }
    return best;
}

RadiusReport pair_radius(const PolyhedralSpace& space, const Operator& t, RadiusKind kind) {
    check_dims(space, t);
    const std::size_t m = space.vertices().size();
    std::vector<Point> images(m);
    std::vector<double> image_norms(m);
    for (std::size_t i = 0; i < m; ++i) {
        images[i] = t.apply(space.vertices()[i]);
        image_norms[i] = space.norm_of(images[i].coords);
    }
    const auto pairs = extreme_pairs(space);
    std::vector<double> values;
    values.reserve(pairs.pairs.size());
    double best = 0.0;
    for (const auto& p : pairs.pairs) {
        const double pairing = space.facets()[p.facet_id].functional(images[p.vertex_id]);
        values.push_back(pair_value(kind, pairing, image_norms[p.vertex_id]));
        best = std::max(best, values.back());
    }
    RadiusReport report{best, {}};
    for (std::size_t k = 0; k < values.size(); ++k)
        if (values[k] >= best - kWitnessTol) report.witnesses.push_back(pairs.pairs[k]);
    return report;
}

} // namespace

Operator::Operator(std::size_t dim, std::vector<double> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
        throw Error(ErrorCode::DimensionMismatch, "operator entries do not form a square matrix");
    for (double e : entries_)
        if (!std::isfinite(e)) throw Error(ErrorCode::BadParameter, "non-finite operator entry");
}

Operator Operator::identity(std::size_t dim) {
    std::vector<double> e(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return Operator(dim, std::move(e));
}

Operator Operator::zero(std::size_t dim) { return Operator(dim, std::vector<double>(dim * dim, 0.0)); }

void Operator::apply(std::span<const double> x, std::span<double> out) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) s += entries_[r * dim_ + c] * x[c];
        out[r] = s;
    }
}

Point Operator::apply(const Point& x) const {
    if (x.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
    Point out{std::vector<double>(dim_)};
    apply(x.coords, out.coords);
    return out;
}

Operator Operator::scaled(double c) const {
    auto e = entries_;
    for (double& v : e) v *= c;
    return Operator(dim_, std::move(e));
}

Operator Operator::operator+(const Operator& other) const {
    if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "operator dimension mismatch");
    auto e = entries_;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
    return Operator(dim_, std::move(e));
}

std::string to_string(RadiusKind kind) {
    switch (kind) {
    case RadiusKind::OperatorNorm: return "opnorm";
    case RadiusKind::NumericalRadius: return "w";
    case RadiusKind::DW: return "dw";
    case RadiusKind::DWStar: return "dwstar";
    }
    return "unknown";
}

RadiusKind parse_radius_kind(const std::string& name) {
    if (name == "opnorm") return RadiusKind::OperatorNorm;
    if (name == "w") return RadiusKind::NumericalRadius;
    if (name == "dw") return RadiusKind::DW;
    if (name == "dwstar") return RadiusKind::DWStar;
    throw Error(ErrorCode::BadParameter, "unknown radius kind '" + name + "'");
}

RadiusReport operator_norm(const PolyhedralSpace& space, const Operator& t) {
    check_dims(space, t);
    const std::size_t m = space.vertices().size();
    std::vector<Point> images(m);
    std::vector<double> norms(m);
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        images[i] = t.apply(space.vertices()[i]);
        norms[i] = space.norm_of(images[i].coords);
        best = std::max(best, norms[i]);
    }
    RadiusReport report{best, {}};
    for (std::size_t i = 0; i < m; ++i)
        if (norms[i] >= best - kWitnessTol) report.witnesses.push_back({i, argmax_facet(space, images[i].coords)});
    return report;
}

RadiusReport numerical_radius(const PolyhedralSpace& space, const Operator& t) {
    return pair_radius(space, t, RadiusKind::NumericalRadius);
}

RadiusReport dw_radius(const PolyhedralSpace& space, const Operator& t) {
    return pair_radius(space, t, RadiusKind::DW);
}

RadiusReport dw_star_radius(const PolyhedralSpace& space, const Operator& t) {
    return pair_radius(space, t, RadiusKind::DWStar);
}

RadiusReport radius(const PolyhedralSpace& space, const Operator& t, RadiusKind kind) {
    return kind == RadiusKind::OperatorNorm ? operator_norm(space, t) : pair_radius(space, t, kind);
}

Segment dw_set_at(const PolyhedralSpace& space, const Operator& t, const Point& x) {
    check_dims(space, t);
    const auto support = support_set(space, x);
    const Point y = t.apply(x);
    Segment seg{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0.0};
    for (const auto& f : support.functionals) {
        const double v = f(y);
        seg.lo = std::min(seg.lo, v);
        seg.hi = std::max(seg.hi, v);
    }
    const double n = space.norm_of(y.coords);
    seg.level = n * n;
    return seg;
}

double dw_upper_bound_G(const PolyhedralSpace& space, const Operator& t) {
    const double n = operator_norm(space, t).value;
    const double n4 = n * n * n * n;
    double best = 0.0;
    for (const auto& p : extreme_pairs(space).pairs) {
        const Point y = t.apply(space.vertices()[p.vertex_id]);
        const double pairing = space.facets()[p.facet_id].functional(y);
        best = std::max(best, std::sqrt(pairing * pairing + n4));
    }
    return best;
}

SampledRadii sampled_radii(const PolyhedralSpace& space, const Operator& t, std::size_t samples,
                           std::uint64_t seed) {
    check_dims(space, t);
    if (samples < 1) throw Error(ErrorCode::BadParameter, "samples must be at least 1");
    const std::size_t d = space.dim();
    const std::size_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<SampledRadii> partial(blocks);

    parallel_for(blocks, [&](std::size_t b) {
        std::mt19937_64 rng(substream_seed(seed, b));
        std::normal_distribution<double> normal;
        std::vector<double> x(d), y(d);
        SampledRadii acc;
        const std::size_t end = std::min(samples, (b + 1) * kSampleBlock);
        for (std::size_t s = b * kSampleBlock; s < end; ++s) {
            for (auto& c : x) c = normal(rng);
            const double n = space.norm_of(x);
            if (n == 0.0) continue;
            for (auto& c : x) c /= n;
            t.apply(x, y);
            const double ny = space.norm_of(y);
            for (const auto& facet : space.facets()) {
                if (std::abs(facet.functional(x) - 1.0) > space.tol()) continue;
                const double pairing = facet.functional(y);
                acc.w = std::max(acc.w, pair_value(RadiusKind::NumericalRadius, pairing, ny));
                acc.dw = std::max(acc.dw, pair_value(RadiusKind::DW, pairing, ny));
                acc.dw_star = std::max(acc.dw_star, pair_value(RadiusKind::DWStar, pairing, ny));
            }
        }
        partial[b] = acc;
    });

    SampledRadii out;
    for (const auto& p : partial) {
        out.w = std::max(out.w, p.w);
        out.dw = std::max(out.dw, p.dw);
        out.dw_star = std::max(out.dw_star, p.dw_star);
    }
    return out;
}

double sampled_dw(const PolyhedralSpace& space, const Operator& t, RadiusKind kind, std::size_t samples,
                  std::uint64_t seed) {
    const auto r = sampled_radii(space, t, samples, seed);
    switch (kind) {
    case RadiusKind::NumericalRadius: return r.w;
    case RadiusKind::DW: return r.dw;
    case RadiusKind::DWStar: return r.dw_star;
    case RadiusKind::OperatorNorm: break;
    }
    throw Error(ErrorCode::BadParameter, "sampled oracle supports w, dw and dwstar only");
}

RadiusEvaluator::RadiusEvaluator(const PolyhedralSpace& space) : dim_(space.dim()) {
    std::vector<std::size_t> rep_index(space.vertices().size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < space.vertices().size(); ++i) {
        if (space.vertex_negation(i) < i) continue;
        rep_index[i] = vertices_.size() / dim_;
        const auto& c = space.vertices()[i].coords;
        vertices_.insert(vertices_.end(), c.begin(), c.end());
    }
    for (std::size_t j = 0; j < space.facets().size(); ++j) {
        if (space.facet_negation(j) < j) continue;
        const auto& c = space.facets()[j].functional.coeffs;
        facets_.insert(facets_.end(), c.begin(), c.end());
    }
    for (const auto& p : extreme_pairs(space).pairs) {
        if (rep_index[p.vertex_id] == static_cast<std::size_t>(-1)) continue;
        pair_vertex_.push_back(rep_index[p.vertex_id]);
        const auto& c = space.facets()[p.facet_id].functional.coeffs;
        pair_funcs_.insert(pair_funcs_.end(), c.begin(), c.end());
    }
    images_.resize(vertices_.size());
    image_norms_.resize(vertices_.size() / dim_);
}

void RadiusEvaluator::image_norms(std::span<const double> matrix) {
    const std::size_t d = dim_;
    const std::size_t nv = image_norms_.size();
    const std::size_t nf = facets_.size() / d;
    for (std::size_t i = 0; i < nv; ++i) {
        const double* v = &vertices_[i * d];
        double* y = &images_[i * d];
        for (std::size_t r = 0; r < d; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < d; ++c) s += matrix[r * d + c] * v[c];
            y[r] = s;
        }
        double best = 0.0;
        for (std::size_t j = 0; j < nf; ++j) {
            const double* f = &facets_[j * d];
            double s = 0.0;
            for (std::size_t c = 0; c < d; ++c) s += f[c] * y[c];
            best = std::max(best, std::abs(s));
        }
        image_norms_[i] = best;
    }
}

double RadiusEvaluator::operator_norm(std::span<const double> matrix) {
    image_norms(matrix);
    return *std::max_element(image_norms_.begin(), image_norms_.end());
}

double RadiusEvaluator::evaluate(std::span<const double> matrix, RadiusKind kind, double scale) {
    image_norms(matrix);
    const double inv = 1.0 / scale;
    if (kind == RadiusKind::OperatorNorm)
        return *std::max_element(image_norms_.begin(), image_norms_.end()) * inv;
    const std::size_t d = dim_;
    double best = 0.0;
    for (std::size_t k = 0; k < pair_vertex_.size(); ++k) {
        const double* f = &pair_funcs_[k * d];
        const double* y = &images_[pair_vertex_[k] * d];
        double s = 0.0;
        for (std::size_t c = 0; c < d; ++c) s += f[c] * y[c];
        best = std::max(best, pair_value(kind, s * inv, image_norms_[pair_vertex_[k]] * inv));
    }
    return best;
}

double RadiusEvaluator::normalized(std::span<const double> matrix, RadiusKind kind) {
    const double n = operator_norm(matrix);
    if (!(n > 0.0)) return std::numeric_limits<double>::infinity();
    if (kind == RadiusKind::OperatorNorm) return 1.0;
    const double inv = 1.0 / n;
    const std::size_t d = dim_;
    double best = 0.0;
    for (std::size_t k = 0; k < pair_vertex_.size(); ++k) {
        const double* f = &pair_funcs_[k * d];
        const double* y = &images_[pair_vertex_[k] * d];
        double s = 0.0;
        for (std::size_t c = 0; c < d; ++c) s += f[c] * y[c];
        best = std::max(best, pair_value(kind, s * inv, image_norms_[pair_vertex_[k]] * inv));
    }
    return best;
}

} // namespace dwindex
