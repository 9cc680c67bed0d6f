#include "dwindex/dwindex.h"

#include "dwindex/certifier.hpp"
#include "dwindex/error.hpp"
#include "dwindex/gallery.hpp"
#include "dwindex/index_search.hpp"
#include "dwindex/io.hpp"
#include "dwindex/lp_shell.hpp"
#include "dwindex/metrics.hpp"
#include "dwindex/reproduce.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

struct dw_space {
    dwindex::PolyhedralSpace space;
};
struct dw_operator {
    dwindex::Operator op;
};
struct dw_complex_operator {
    dwindex::shell::ComplexOperator op;
};
struct dw_shell {
    dwindex::shell::ShellSample sample;
};

namespace {

thread_local std::string last_error;

dw_status status_of(dwindex::ErrorCode code) {
    using dwindex::ErrorCode;
    switch (code) {
    case ErrorCode::NonSymmetric: return DW_ERR_NON_SYMMETRIC;
    case ErrorCode::Degenerate: return DW_ERR_DEGENERATE;
    case ErrorCode::NotExtreme: return DW_ERR_NOT_EXTREME;
    case ErrorCode::DimensionMismatch: return DW_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotUnitNorm: return DW_ERR_NOT_UNIT_NORM;
    case ErrorCode::BadParameter: return DW_ERR_BAD_PARAMETER;
    case ErrorCode::LPFailure: return DW_ERR_LP_FAILURE;
    case ErrorCode::Parse: return DW_ERR_PARSE;
    case ErrorCode::Io: return DW_ERR_IO;
    }
    return DW_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes and recording the
// message for dw_last_error_message.
template <class F>
dw_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return DW_OK;
    } catch (const dwindex::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return DW_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return DW_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return DW_ERR_INTERNAL;
    }
}

dw_status null_argument() {
    last_error = "null argument";
    return DW_ERR_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

dwindex::RadiusKind kind_of(dw_radius_kind kind) {
    switch (kind) {
    case DW_KIND_OPNORM: return dwindex::RadiusKind::OperatorNorm;
    case DW_KIND_W: return dwindex::RadiusKind::NumericalRadius;
    case DW_KIND_DW: return dwindex::RadiusKind::DW;
    case DW_KIND_DWSTAR: return dwindex::RadiusKind::DWStar;
    }
    throw dwindex::Error(dwindex::ErrorCode::BadParameter, "unknown radius kind");
}

void check_dims(const dw_space* space, const dw_operator* op) {
    if (space->space.dim() != op->op.dim())
        throw dwindex::Error(dwindex::ErrorCode::DimensionMismatch, "operator and space dimensions differ");
}

} // namespace

extern "C" {

const char* dw_status_string(dw_status status) {
    switch (status) {
    case DW_OK: return "ok";
    case DW_ERR_NON_SYMMETRIC: return "non-symmetric vertex set";
    case DW_ERR_DEGENERATE: return "degenerate vertex set";
    case DW_ERR_NOT_EXTREME: return "point is not extreme";
    case DW_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case DW_ERR_NOT_UNIT_NORM: return "point is not of unit norm";
    case DW_ERR_BAD_PARAMETER: return "bad parameter";
    case DW_ERR_LP_FAILURE: return "linear program failure";
    case DW_ERR_PARSE: return "parse error";
    case DW_ERR_IO: return "i/o error";
    case DW_ERR_NULL_ARGUMENT: return "null argument";
    case DW_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* dw_last_error_message(void) { return last_error.c_str(); }

void dw_string_free(char* s) { std::free(s); }

dw_status dw_radius_kind_parse(const char* name, dw_radius_kind* out) {
    if (!name || !out) return null_argument();
    return guarded([&] {
        switch (dwindex::parse_radius_kind(name)) {
        case dwindex::RadiusKind::OperatorNorm: *out = DW_KIND_OPNORM; break;
        case dwindex::RadiusKind::NumericalRadius: *out = DW_KIND_W; break;
        case dwindex::RadiusKind::DW: *out = DW_KIND_DW; break;
        case dwindex::RadiusKind::DWStar: *out = DW_KIND_DWSTAR; break;
        }
    });
}

dw_status dw_space_build(const double* coords, size_t count, size_t dim, double tol, dw_space** out) {
    if (!coords || !out) return null_argument();
    return guarded([&] {
        std::vector<dwindex::Point> vertices(count);
        for (size_t i = 0; i < count; ++i) vertices[i].coords.assign(coords + i * dim, coords + (i + 1) * dim);
        *out = new dw_space{dwindex::build_space(vertices, tol)};
    });
}

dw_status dw_space_from_json(const char* json, dw_space** out) {
    if (!json || !out) return null_argument();
    return guarded([&] { *out = new dw_space{dwindex::io::space_from_json(dwindex::io::parse(json))}; });
}

dw_status dw_space_to_json(const dw_space* space, char** out) {
    if (!space || !out) return null_argument();
    return guarded([&] { *out = copy_string(dwindex::io::space_to_json(space->space).dump(2)); });
}

dw_status dw_space_gallery(const char* kind, int n, double gamma, double xi, double height, const char* base_kind,
                           dw_space** out) {
    if (!kind || !out) return null_argument();
    return guarded([&] {
        dwindex::GallerySpec spec;
        spec.kind = dwindex::parse_gallery_kind(kind);
        spec.n = n;
        spec.gamma = gamma;
        spec.xi = xi;
        spec.height = height;
        if (spec.kind == dwindex::GalleryKind::PyramidPrism && height > 0.0) spec.apex_height = height;
        if (base_kind) spec.base_kind = dwindex::parse_gallery_kind(base_kind);
        *out = new dw_space{dwindex::build_gallery_space(spec)};
    });
}

void dw_space_free(dw_space* space) { delete space; }

size_t dw_space_dim(const dw_space* space) { return space ? space->space.dim() : 0; }

size_t dw_space_vertex_count(const dw_space* space) { return space ? space->space.vertices().size() : 0; }

size_t dw_space_facet_count(const dw_space* space) { return space ? space->space.facets().size() : 0; }

dw_status dw_space_norm(const dw_space* space, const double* x, size_t dim, double* out) {
    if (!space || !x || !out) return null_argument();
    return guarded([&] {
        if (dim != space->space.dim())
            throw dwindex::Error(dwindex::ErrorCode::DimensionMismatch, "point dimension differs from the space");
        *out = space->space.norm_of(std::span<const double>(x, dim));
    });
}

dw_status dw_operator_create(const double* entries, size_t dim, dw_operator** out) {
    if (!entries || !out) return null_argument();
    return guarded([&] {
        *out = new dw_operator{dwindex::Operator(dim, std::vector<double>(entries, entries + dim * dim))};
    });
}

dw_status dw_operator_from_json(const char* json, dw_operator** out) {
    if (!json || !out) return null_argument();
    return guarded([&] { *out = new dw_operator{dwindex::io::operator_from_json(dwindex::io::parse(json))}; });
}

void dw_operator_free(dw_operator* op) { delete op; }

dw_status dw_radius_value(const dw_space* space, const dw_operator* op, dw_radius_kind kind, double* out) {
    if (!space || !op || !out) return null_argument();
    return guarded([&] {
        check_dims(space, op);
        *out = dwindex::radius(space->space, op->op, kind_of(kind)).value;
    });
}

dw_status dw_radius_json(const dw_space* space, const dw_operator* op, dw_radius_kind kind, size_t oracle_samples,
                         uint64_t seed, char** out) {
    if (!space || !op || !out) return null_argument();
    return guarded([&] {
        check_dims(space, op);
        const auto k = kind_of(kind);
        auto j = dwindex::io::radius_report_to_json(dwindex::radius(space->space, op->op, k), k);
        if (oracle_samples > 0) {
            j["oracle"] = {{"samples", oracle_samples},
                           {"seed", seed},
                           {"value", dwindex::sampled_dw(space->space, op->op, k, oracle_samples, seed)}};
        }
        *out = copy_string(j.dump(2));
    });
}

dw_status dw_sampled_radius(const dw_space* space, const dw_operator* op, dw_radius_kind kind, size_t samples,
                            uint64_t seed, double* out) {
    if (!space || !op || !out) return null_argument();
    return guarded([&] {
        check_dims(space, op);
        *out = dwindex::sampled_dw(space->space, op->op, kind_of(kind), samples, seed);
    });
}

dw_status dw_index_estimate_json(const dw_space* space, dw_radius_kind kind, int restarts, uint64_t seed, double tol,
                                 char** out) {
    if (!space || !out) return null_argument();
    return guarded([&] {
        const int r = restarts > 0 ? restarts : dwindex::default_restarts(space->space);
        const auto est = dwindex::estimate_index(space->space, kind_of(kind), r, seed, tol);
        *out = copy_string(dwindex::io::index_estimate_to_json(est).dump(2));
    });
}

dw_status dw_certify_json(const dw_space* space, long vertex, char** out) {
    if (!space || !out) return null_argument();
    return guarded([&] {
        std::vector<dwindex::VertexCertificate> certs;
        if (vertex >= 0) {
            certs.push_back(dwindex::vertex_certificate(space->space, static_cast<std::size_t>(vertex)));
        } else {
            certs = dwindex::vertex_certificates(space->space);
        }
        dwindex::io::Json list = dwindex::io::Json::array();
        double lower = certs.empty() ? 1.0 : certs.front().xi;
        for (const auto& c : certs) {
            list.push_back(dwindex::io::vertex_certificate_to_json(c));
            lower = std::min(lower, c.xi);
        }
        *out = copy_string(dwindex::io::Json{{"certificates", list}, {"lower_bound", lower}}.dump(2));
    });
}

dw_status dw_index_lower_bound(const dw_space* space, double* out) {
    if (!space || !out) return null_argument();
    return guarded([&] { *out = dwindex::index_lower_bound(space->space); });
}

dw_status dw_reproduce_json(uint64_t seed, double pyramid_apex_height, char** out, int* all_pass) {
    if (!out) return null_argument();
    return guarded([&] {
        dwindex::ReproduceOptions options;
        options.seed = seed;
        options.pyramid_apex_height = pyramid_apex_height;
        const auto report = dwindex::reproduce(options);
        *out = copy_string(dwindex::report_to_json(report));
        if (all_pass) *all_pass = report.all_pass() ? 1 : 0;
    });
}

dw_status dw_complex_operator_from_json(const char* json, dw_complex_operator** out) {
    if (!json || !out) return null_argument();
    return guarded([&] {
        *out = new dw_complex_operator{dwindex::io::complex_operator_from_json(dwindex::io::parse(json))};
    });
}

dw_status dw_complex_operator_nonconvex(int dim, dw_complex_operator** out) {
    if (!out) return null_argument();
    return guarded([&] { *out = new dw_complex_operator{dwindex::shell::nonconvex_block_operator(dim)}; });
}

size_t dw_complex_operator_dim(const dw_complex_operator* op) { return op ? op->op.dim() : 0; }

void dw_complex_operator_free(dw_complex_operator* op) { delete op; }

dw_status dw_shell_sample(const dw_complex_operator* op, double p, size_t samples, uint64_t seed, dw_shell** out) {
    if (!op || !out) return null_argument();
    return guarded([&] { *out = new dw_shell{dwindex::shell::sample_shell(op->op, p, samples, seed)}; });
}

void dw_shell_free(dw_shell* shell) { delete shell; }

size_t dw_shell_size(const dw_shell* shell) { return shell ? shell->sample.points.size() : 0; }

size_t dw_shell_points(const dw_shell* shell, double* xyz, size_t capacity) {
    if (!shell || !xyz) return 0;
    const auto& pts = shell->sample.points;
    const size_t n = std::min(capacity, pts.size());
    for (size_t i = 0; i < n; ++i) {
        xyz[3 * i] = pts[i].w_re;
        xyz[3 * i + 1] = pts[i].w_im;
        xyz[3 * i + 2] = pts[i].s;
    }
    return n;
}

dw_status dw_shell_write_csv(const dw_shell* shell, const char* path) {
    if (!shell || !path) return null_argument();
    return guarded([&] {
        std::ofstream file(path);
        if (!file) throw dwindex::Error(dwindex::ErrorCode::Io, std::string("cannot open ") + path);
        dwindex::io::write_shell_csv(file, shell->sample);
        if (!file) throw dwindex::Error(dwindex::ErrorCode::Io, std::string("write failed: ") + path);
    });
}

dw_status dw_shell_median_spacing(const dw_shell* shell, double* out) {
    if (!shell || !out) return null_argument();
    return guarded([&] { *out = dwindex::shell::median_nearest_neighbor_distance(shell->sample); });
}

dw_status dw_shell_witness_json(const dw_shell* shell, double tol, char** out) {
    if (!shell || !out) return null_argument();
    return guarded([&] {
        const double threshold =
            tol > 0.0 ? tol : 10.0 * dwindex::shell::median_nearest_neighbor_distance(shell->sample);
        const auto witness = dwindex::shell::convexity_witness(shell->sample, threshold);
        *out = copy_string(dwindex::io::witness_to_json(witness, threshold).dump(2));
    });
}

dw_status dw_shell_summary_json(const dw_shell* shell, char** out) {
    if (!shell || !out) return null_argument();
    return guarded([&] {
        const auto& s = shell->sample;
        dwindex::io::Json j{{"p", s.p},
                            {"count", s.count},
                            {"seed", s.seed},
                            {"dw_estimate", dwindex::shell::shell_dw_estimate(s)},
                            {"median_spacing", dwindex::shell::median_nearest_neighbor_distance(s)}};
        *out = copy_string(j.dump(2));
    });
}

} // extern "C"
