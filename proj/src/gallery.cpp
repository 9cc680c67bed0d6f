#include "dwindex/gallery.hpp"

#include "dwindex/error.hpp"

#include <cmath>
#include <numbers>

namespace dwindex {

namespace {

std::vector<Point> polygon_vertices(int n) {
    std::vector<Point> out;
    out.reserve(2 * n);
    for (int j = 0; j < 2 * n; ++j) {
        const double angle = j * std::numbers::pi / n;
        out.push_back(Point{{std::cos(angle), std::sin(angle)}});
    }
    return out;
}

bool in_open_unit_interval(double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; }

} // namespace

PolyhedralSpace regular_polygon_space(int n) {
    if (n < 2) throw Error(ErrorCode::BadParameter, "regular polygon requires n >= 2");
    return build_space(polygon_vertices(n));
}

PolyhedralSpace prism_space(const PolyhedralSpace& base, double h) {
    if (base.dim() != 2) throw Error(ErrorCode::BadParameter, "prism base must be 2-dimensional");
    if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::BadParameter, "prism height must be positive");
    std::vector<Point> out;
    out.reserve(2 * base.vertices().size());
    for (double z : {h, -h})
        for (const auto& v : base.vertices()) out.push_back(Point{{v.coords[0], v.coords[1], z}});
    return build_space(out, base.tol());
}

PolyhedralSpace pyramid_prism_space(double apex_height) {
    if (!(apex_height > 0.0)) throw Error(ErrorCode::BadParameter, "apex height must be positive");
    std::vector<Point> out;
    for (double s : {1.0, -1.0}) {
        out.push_back(Point{{s * 1.0, s * 1.0, s * 1.0}});
        out.push_back(Point{{s * -1.0, s * 1.0, s * 1.0}});
        out.push_back(Point{{s * -1.0, s * -1.0, s * 1.0}});
        out.push_back(Point{{s * 1.0, s * -1.0, s * 1.0}});
        out.push_back(Point{{0.0, 0.0, s * apex_height}});
    }
    return build_space(out);
}

PolyhedralSpace drum_space(int n) {
    if (n < 3) throw Error(ErrorCode::BadParameter, "drum space requires n >= 3");
    std::vector<Point> out;
    const auto base = polygon_vertices(n);
    for (double z : {1.0, -1.0})
        for (const auto& v : base) out.push_back(Point{{v.coords[0], v.coords[1], z}});
    out.push_back(Point{{0.0, 0.0, 2.0}});
    out.push_back(Point{{0.0, 0.0, -2.0}});
    return build_space(out);
}

PolyhedralSpace hexagon_gamma_space(double gamma) {
    if (!in_open_unit_interval(gamma)) throw Error(ErrorCode::BadParameter, "gamma must lie in (0, 1)");
    return build_space({
        Point{{gamma, 1.0}}, Point{{1.0, 0.0}}, Point{{gamma, -1.0}},
        Point{{-gamma, -1.0}}, Point{{-1.0, 0.0}}, Point{{-gamma, 1.0}},
    });
}

PolyhedralSpace octagon_xi_space(double xi) {
    if (!in_open_unit_interval(xi)) throw Error(ErrorCode::BadParameter, "xi must lie in (0, 1)");
    return build_space({
        Point{{1.0, xi}}, Point{{xi, 1.0}}, Point{{-xi, 1.0}}, Point{{-1.0, xi}},
        Point{{-1.0, -xi}}, Point{{-xi, -1.0}}, Point{{xi, -1.0}}, Point{{1.0, -xi}},
    });
}

PolyhedralSpace build_gallery_space(const GallerySpec& spec) {
    switch (spec.kind) {
    case GalleryKind::RegularPolygon: return regular_polygon_space(spec.n);
    case GalleryKind::PyramidPrism: return pyramid_prism_space(spec.apex_height);
    case GalleryKind::Drum: return drum_space(spec.n);
    case GalleryKind::HexagonGamma: return hexagon_gamma_space(spec.gamma);
    case GalleryKind::OctagonXi: return octagon_xi_space(spec.xi);
    case GalleryKind::Prism: {
        if (spec.base_kind == GalleryKind::Prism || spec.base_kind == GalleryKind::PyramidPrism ||
            spec.base_kind == GalleryKind::Drum)
            throw Error(ErrorCode::BadParameter, "prism base must be a 2-d gallery kind");
        GallerySpec base = spec;
        base.kind = spec.base_kind;
        return prism_space(build_gallery_space(base), spec.height);
    }
    }
    throw Error(ErrorCode::BadParameter, "unknown gallery kind");
}

GalleryKind parse_gallery_kind(const std::string& name) {
    if (name == "regular-polygon") return GalleryKind::RegularPolygon;
    if (name == "prism") return GalleryKind::Prism;
    if (name == "pyramid-prism") return GalleryKind::PyramidPrism;
    if (name == "drum") return GalleryKind::Drum;
    if (name == "hexagon-gamma") return GalleryKind::HexagonGamma;
    if (name == "octagon-xi") return GalleryKind::OctagonXi;
    throw Error(ErrorCode::BadParameter, "unknown space kind '" + name + "'");
}

std::vector<NamedSpace> standard_gallery() {
    std::vector<NamedSpace> out;
    for (int n : {2, 3, 4, 5}) out.push_back({"regular-polygon-" + std::to_string(n), regular_polygon_space(n)});
    out.push_back({"hexagon-gamma-0.5", hexagon_gamma_space(0.5)});
    out.push_back({"octagon-xi-0.5", octagon_xi_space(0.5)});
    out.push_back({"hexagonal-prism-h1", prism_space(regular_polygon_space(3), 1.0)});
    out.push_back({"hexagonal-prism-h2", prism_space(regular_polygon_space(3), 2.0)});
    out.push_back({"pyramid-prism", pyramid_prism_space()});
    out.push_back({"drum-3", drum_space(3)});
    out.push_back({"hexagon-gamma-prism-0.3", prism_space(hexagon_gamma_space(0.3), 1.0)});
    out.push_back({"hexagon-gamma-prism-0.5", prism_space(hexagon_gamma_space(0.5), 1.0)});
    out.push_back({"hexagon-gamma-prism-0.75", prism_space(hexagon_gamma_space(0.75), 1.0)});
    out.push_back({"octagon-xi-prism-0.25", prism_space(octagon_xi_space(0.25), 1.0)});
    out.push_back({"octagon-xi-prism-0.5", prism_space(octagon_xi_space(0.5), 1.0)});
    return out;
}

std::string to_string(GalleryKind kind) {
    switch (kind) {
    case GalleryKind::RegularPolygon: return "regular-polygon";
    case GalleryKind::Prism: return "prism";
    case GalleryKind::PyramidPrism: return "pyramid-prism";
    case GalleryKind::Drum: return "drum";
    case GalleryKind::HexagonGamma: return "hexagon-gamma";
    case GalleryKind::OctagonXi: return "octagon-xi";
    }
    return "unknown";
}

} // namespace dwindex
