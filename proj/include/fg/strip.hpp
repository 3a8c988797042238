#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fg/domination.hpp"
#include "fg/moebius.hpp"
#include "fg/representation.hpp"

namespace fg::strip {

using moebius::H3Point;
using moebius::Moebius;
using moebius::SpherePoint;
using representation::FGCoordinates;
using representation::MarkedSurface;

// The path crosses edges[0], edges[1], ... starting from the first side of
// edges[0] in the gluing table; each later edge is a side of the current
// triangle other than the one just entered. The arc runs from the vertex
// opposite the first crossed side to the vertex opposite the last entered one.
// Geometry is given in the frame of the starting triangle (developed as
// (inf, -1, 0)); points of H^2 are H3Points with real z.
struct StripArc {
  std::vector<int> edges;
  std::array<SpherePoint, 2> ends;  // start side first
  H3Point waist;
  std::array<H3Point, 2> feet;  // on the boundary axes, start first
  int start_puncture = 0;
  int end_puncture = 0;
  int start_triangle = 0;
};

// Realizes the path as the common perpendicular of the boundary axes at its
// two ends. The waist sits at the foot on the starting axis, moved by
// waist_offset along the arc. Throws CuspExit, TangledPath, InvalidArgument.
StripArc realize_arc(const surface::IdealTriangulation& t, const FGCoordinates& j, const std::vector<int>& edges,
                     double waist_offset = 0.0);

// Offset along the arc, measured from the foot on the start axis, of the
// nearest point to p (a point of H^2 in the start frame).
double waist_offset_of(const StripArc& a, const H3Point& p);

struct Deformation {
  std::vector<Moebius> base;      // j on the presentation generators
  std::vector<Moebius> deformed;  // j_t
};

// Inserts, for each lift of an arc separating a base point from its image,
// a translation of the arc's width along the perpendicular at the lifted
// waist. Lifts are searched over letter words whose length grows until the
// separating sets stop changing; disjointness is checked on lifts by words of
// length at most 4. Throws ArcsIntersect, InvalidArgument.
Deformation strip_deform(const MarkedSurface& m, const FGCoordinates& j, const std::vector<StripArc>& arcs,
                         const std::vector<double>& widths);

// Translation by `distance` along the geodesic through p perpendicular to the
// geodesic (a, b), towards the side not containing `away_from`.
Moebius perpendicular_translation(const std::array<SpherePoint, 2>& ends, const H3Point& p, double distance,
                                  const H3Point& away_from);

// Sup over enumerated curves and the boundary classes of l_j / l_{j_t}.
// Reports carry l_j as l_rho and l_{j_t} as l_j.
domination::DominationCertificate verify_strict_increase(const MarkedSurface& m, const std::vector<Moebius>& j,
                                                         const std::vector<Moebius>& j_t, int max_weight,
                                                         const domination::Options& opts = {});

}  // namespace fg::strip
