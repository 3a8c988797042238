#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fg/moebius.hpp"
#include "fg/representation.hpp"
#include "fg/surface.hpp"

namespace fg::curves {

using moebius::Moebius;
using representation::FGCoordinates;
using surface::NormalCurve;

struct EnumerationOptions {
  std::size_t cap = 1'000'000;  // admissible vectors examined
};

// Connected, essential, non-peripheral normal curves with all weights at most
// max_weight, in graded lexicographic order. Throws BudgetExceeded and
// InvalidArgument (max_weight > 64).
std::vector<NormalCurve> enumerate_simple(const surface::IdealTriangulation& t, int max_weight,
                                          EnumerationOptions opts = {});

// Holonomy of a connected curve: product of the edge steps met along it, in
// the frame of the triangle where the trace starts. Throws DisconnectedCurve.
Moebius curve_holonomy(const surface::IdealTriangulation& t, const FGCoordinates& x, const NormalCurve& c);
Moebius crossing_holonomy(const surface::IdealTriangulation& t, const FGCoordinates& x,
                          const surface::CrossingWord& w);

// Peripheral element at corner c, in the frame of c's triangle.
Moebius corner_holonomy(const surface::IdealTriangulation& t, const FGCoordinates& x, surface::Corner c);

double curve_length(const surface::IdealTriangulation& t, const FGCoordinates& x, const NormalCurve& c);

// Hyperbolic distance between two geodesics of H^2 given by endpoints on the
// real line (0 if they meet).
double geodesic_distance(const std::array<moebius::SpherePoint, 2>& g, const std::array<moebius::SpherePoint, 2>& h);

// Least distance from the curve's axis to the boundary axes (funnels) and to
// the length-2 horocycles (cusps) at the ideal vertices met along one period.
// X must be real positive.
double boundary_margin(const surface::IdealTriangulation& t, const FGCoordinates& x, const NormalCurve& c);

}  // namespace fg::curves
