#pragma once

#include <array>
#include <vector>

#include "fg/moebius.hpp"
#include "fg/representation.hpp"
#include "fg/surface.hpp"

namespace fg::pleat {

using moebius::Moebius;
using moebius::SpherePoint;
using representation::FGCoordinates;

struct DevelopedTriangle {
  int triangle = 0;
  std::array<SpherePoint, 3> vertices;
};

// Develops triangle 0 as (inf, -1, 0), then crosses side path[i] of the
// current triangle at each step. Throws DegenerateCoordinate on a vertex
// collision and InvalidArgument on a side outside 0..2.
std::vector<DevelopedTriangle> develop(const surface::IdealTriangulation& t, const FGCoordinates& x,
                                       const std::vector<int>& path);

// Frame (image of the standard triangle) of each step of a developed path.
std::vector<Moebius> develop_frames(const surface::IdealTriangulation& t, const FGCoordinates& x,
                                    const std::vector<int>& path);

// Exterior angle between the planes of two developed triangles sharing an
// edge; 0 when they are coplanar. Throws InvalidArgument without a shared edge.
double dihedral_angle(const DevelopedTriangle& a, const DevelopedTriangle& b);

struct PleatingData {
  std::vector<double> shear;  // ln|c|
  std::vector<double> angle;  // Arg c in (-pi, pi]
  std::vector<int> support;   // edges with |angle| > 1e-9
  bool filling = false;
};

// Filling: every piece left after cutting along the support is a disk,
// i.e. the triangles glued along unbent edges form trees.
PleatingData bending_data(const surface::IdealTriangulation& t, const FGCoordinates& x);
bool is_filling(const surface::IdealTriangulation& t, const std::vector<int>& support);

FGCoordinates straighten(const FGCoordinates& x);

// Coordinates after flipping edge e, matching surface::flip.
FGCoordinates flip_coordinates(const surface::IdealTriangulation& t, const FGCoordinates& x, int edge);

}  // namespace fg::pleat
