#pragma once

#include "dwindex/polytope.hpp"

#include <string>
#include <vector>

namespace dwindex {

// Regular 2n-gon with vertices at angles (j-1)pi/n, j = 1..2n.
PolyhedralSpace regular_polygon_space(int n);

// Right prism over a 2-d base, vertices lifted to heights +h and -h.
PolyhedralSpace prism_space(const PolyhedralSpace& base, double h = 1.0);

// Square prism with pyramids glued on top and bottom; apex at (0, 0, +-apex_height).
// The default apex height 2 is the only one with the closed-form index; the
// parameter exists so that the reproduction harness can run a negative control.
PolyhedralSpace pyramid_prism_space(double apex_height = 2.0);

// Prism over the regular 2n-gon at heights +-1 capped by apexes (0, 0, +-2).
PolyhedralSpace drum_space(int n);

// Hexagon with norm max{|y|, |x| + (1 - gamma)|y|}.
PolyhedralSpace hexagon_gamma_space(double gamma);

// Octagon with norm max{|x|, |y|, (|x| + |y|)/(1 + xi)}.
PolyhedralSpace octagon_xi_space(double xi);

enum class GalleryKind { RegularPolygon, Prism, PyramidPrism, Drum, HexagonGamma, OctagonXi };

struct GallerySpec {
    GalleryKind kind = GalleryKind::RegularPolygon;
    int n = 3;
    double gamma = 0.5;
    double xi = 0.5;
    double height = 1.0;
    double apex_height = 2.0;  // PyramidPrism only
    // Base of a Prism: RegularPolygon, HexagonGamma or OctagonXi.
    GalleryKind base_kind = GalleryKind::RegularPolygon;
};

PolyhedralSpace build_gallery_space(const GallerySpec& spec);

// Accepts "regular-polygon", "prism", "pyramid-prism", "drum",
// "hexagon-gamma", "octagon-xi". Throws BadParameter otherwise.
GalleryKind parse_gallery_kind(const std::string& name);
std::string to_string(GalleryKind kind);

} // namespace dwindex

namespace dwindex {

struct NamedSpace {
    std::string name;
    PolyhedralSpace space;
};

// Every space with a known closed-form index or lower bound: the regular
// 2n-gons for n = 2..5, the planar hexagon/octagon families, and the 3-d
// prisms, pyramid prism and drum.
std::vector<NamedSpace> standard_gallery();

} // namespace dwindex
