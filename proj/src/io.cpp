#include "dwindex/io.hpp"

#include "dwindex/error.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace dwindex::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::Parse, std::string(what) + ": " + e.what());
    }
}

std::vector<std::vector<double>> read_rows(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing \"") + key + "\"");
    return j.at(key).get<std::vector<std::vector<double>>>();
}

std::size_t square_size(const std::vector<std::vector<double>>& rows, const char* key) {
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw Error(ErrorCode::DimensionMismatch, std::string("\"") + key + "\" is not a square matrix");
    return rows.size();
}

} // namespace

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PolyhedralSpace space_from_json(const Json& j) {
    return guarded("space", [&] {
        const auto rows = read_rows(j, "vertices");
        const double tol = j.value("tol", kDefaultTol);
        const bool symmetrize = j.value("symmetrize", false);
        std::vector<Point> vertices;
        vertices.reserve(rows.size());
        for (const auto& r : rows) vertices.push_back(Point{r});
        if (j.contains("dim")) {
            const auto dim = j.at("dim").get<std::size_t>();
            for (const auto& v : vertices)
                if (v.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "vertex length differs from \"dim\"");
        }
        if (symmetrize) {
            const std::size_t original = vertices.size();
            for (std::size_t i = 0; i < original; ++i) {
                Point neg = vertices[i];
                for (auto& c : neg.coords) c = -c;
                bool present = false;
                for (const auto& v : vertices) {
                    bool same = v.dim() == neg.dim();
                    for (std::size_t k = 0; same && k < v.dim(); ++k) same = std::abs(v.coords[k] - neg.coords[k]) <= tol;
                    present = present || same;
                }
                if (!present) vertices.push_back(std::move(neg));
            }
        }
        return build_space(vertices, tol);
    });
}

Json space_to_json(const PolyhedralSpace& space) {
    Json vertices = Json::array();
    for (const auto& v : space.vertices()) vertices.push_back(v.coords);
    Json facets = Json::array();
    for (const auto& f : space.facets())
        facets.push_back({{"functional", f.functional.coeffs}, {"vertices", f.vertex_ids}});
    return {{"dim", space.dim()}, {"tol", space.tol()}, {"vertices", vertices}, {"facets", facets}};
}

Operator operator_from_json(const Json& j) {
    return guarded("operator", [&] {
        const auto rows = read_rows(j, "matrix");
        const std::size_t d = square_size(rows, "matrix");
        std::vector<double> entries;
        entries.reserve(d * d);
        for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
        return Operator(d, std::move(entries));
    });
}

Json operator_to_json(const Operator& t) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < t.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < t.dim(); ++c) row.push_back(t.at(r, c));
        rows.push_back(row);
    }
    return {{"matrix", rows}};
}

shell::ComplexOperator complex_operator_from_json(const Json& j) {
    return guarded("complex operator", [&] {
        const auto re = read_rows(j, "matrix_re");
        const std::size_t d = square_size(re, "matrix_re");
        std::vector<std::vector<double>> im(d, std::vector<double>(d, 0.0));
        if (j.contains("matrix_im")) {
            im = read_rows(j, "matrix_im");
            if (square_size(im, "matrix_im") != d)
                throw Error(ErrorCode::DimensionMismatch, "\"matrix_re\" and \"matrix_im\" differ in size");
        }
        std::vector<shell::Complex> entries;
        entries.reserve(d * d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) entries.emplace_back(re[r][c], im[r][c]);
        return shell::ComplexOperator(d, std::move(entries));
    });
}

Json complex_operator_to_json(const shell::ComplexOperator& t) {
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t r = 0; r < t.dim(); ++r) {
        Json rr = Json::array();
        Json ri = Json::array();
        for (std::size_t c = 0; c < t.dim(); ++c) {
            rr.push_back(t.at(r, c).real());
            ri.push_back(t.at(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    return {{"matrix_re", re}, {"matrix_im", im}};
}

Json radius_report_to_json(const RadiusReport& report, RadiusKind kind) {
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses) witnesses.push_back({{"vertex", w.vertex_id}, {"facet", w.facet_id}});
    return {{"kind", to_string(kind)}, {"value", report.value}, {"witnesses", witnesses}};
}

Json index_estimate_to_json(const IndexEstimate& e) {
    return {{"kind", to_string(e.kind)},
            {"value", e.value},
            {"witness", operator_to_json(e.witness)["matrix"]},
            {"restarts_used", e.restarts_used},
            {"seed", e.seed},
            {"converged", e.converged}};
}

Json vertex_certificate_to_json(const VertexCertificate& c) {
    return {{"vertex", c.vertex_id},
            {"xi", c.xi},
            {"t_star", c.t_star},
            {"functionals_used", c.functionals_used},
            {"minimizer", c.minimizer.coords},
            {"minimizer_facet", c.minimizer_facet}};
}

Json witness_to_json(const std::optional<shell::ConvexityWitness>& witness, double tol) {
    auto point = [](const shell::ShellPoint& p) { return Json::array({p.w_re, p.w_im, p.s}); };
    Json out{{"tol", tol}, {"found", witness.has_value()}};
    if (witness) {
        out["first"] = point(witness->first);
        out["second"] = point(witness->second);
        out["midpoint"] = point(witness->midpoint);
        out["gap"] = witness->gap;
    }
    return out;
}

void write_shell_csv(std::ostream& out, const shell::ShellSample& sample) {
    out << "w_re,w_im,s\n";
    out << std::setprecision(17);
    for (const auto& p : sample.points) out << p.w_re << ',' << p.w_im << ',' << p.s << '\n';
}

} // namespace dwindex::io
