#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fg/moebius.hpp"
#include "fg/presentation.hpp"
#include "fg/surface.hpp"

namespace fg::representation {

using moebius::Moebius;
using moebius::SpherePoint;

// Triangulation together with its fixed presentation.
struct MarkedSurface {
  surface::IdealTriangulation tri;
  presentation::Presentation pres;

  explicit MarkedSurface(surface::IdealTriangulation t)
      : tri(std::move(t)), pres(presentation::make_presentation(tri)) {}
};

struct FGCoordinates {
  std::vector<Complex> values;  // per edge
  bool operator==(const FGCoordinates&) const = default;
};

// Throws DegenerateCoordinate unless every value is finite with modulus in
// (1e-12, 1e12).
void check_coordinates(const FGCoordinates& x, int num_edges);

struct FramedRepresentation {
  std::vector<Moebius> generators;   // a1..ag, b1..bg, c1..ck
  std::vector<SpherePoint> framing;  // per puncture
};

// Frame change across side s of a triangle: z -> c(z+1) conjugated by the
// corner rotations of both triangles.
Moebius rotation(int power);
Moebius shear_matrix(Complex c);
Moebius step_matrix(const surface::IdealTriangulation& t, const FGCoordinates& x, surface::Side s);

// Frames of the tree domain (the root triangle has the identity frame) and the
// images of the presentation letters.
struct TreeDevelopment {
  std::vector<Moebius> frames;
  std::vector<Moebius> letters;
};
TreeDevelopment develop_tree(const MarkedSurface& m, const FGCoordinates& x);

// Conjugator minimizing the summed Frobenius norms of the images.
Moebius balancing_conjugator(const std::vector<Moebius>& generators);

// Output is conjugated by balancing_conjugator.
FramedRepresentation holonomy_from_fg(const MarkedSurface& m, const FGCoordinates& x);

// Throws InvalidArgument if the relation or framing residual is too large
// (the relation tolerance scales with the norms of its factors),
// NonGenericFraming (naming the edge) if some developed quadruple is
// degenerate, Internal if the two lifts of an edge disagree.
FGCoordinates fg_from_framed(const MarkedSurface& m, const FramedRepresentation& rho,
                             double tol = 1e-8);

// Flips the offending edge and retries, at most 10 * |edges| times. The
// generator images are kept; they are read in the new presentation.
struct RetriedCoordinates {
  surface::IdealTriangulation tri;
  FGCoordinates coords;
  int flips = 0;
};
RetriedCoordinates fg_from_framed_with_flips(const surface::IdealTriangulation& t,
                                             const FramedRepresentation& rho, double tol = 1e-8);

std::vector<Moebius> letter_images(const presentation::Presentation& p,
                                   const std::vector<Moebius>& generators);

double relation_residual(const presentation::Presentation& p, const std::vector<Moebius>& generators);
// Largest chordal displacement of a framing point by its peripheral image.
double framing_residual(const presentation::Presentation& p, const FramedRepresentation& rho);

struct BoundaryInvariant {
  double length = 0.0;
  moebius::IsometryClass cls = moebius::IsometryClass::parabolic;
};
// Sum of log-moduli (and arguments) of the coordinates met along the link,
// with multiplicity.
double link_log_sum(const surface::IdealTriangulation& t, const FGCoordinates& x, int puncture);
BoundaryInvariant boundary_invariant(const surface::IdealTriangulation& t, const FGCoordinates& x,
                                     int puncture, double tol = 1e-9);

enum class Degeneracy { nondegenerate, degenerate_a, degenerate_coaxial };
std::string_view to_string(Degeneracy d);

struct DegeneracyClass {
  Degeneracy kind = Degeneracy::nondegenerate;
  std::optional<SpherePoint> fixed_point;           // degenerate_a
  std::optional<std::array<SpherePoint, 2>> axis;   // degenerate_coaxial
};

DegeneracyClass detect_degeneracy(const presentation::Presentation& p,
                                  const std::vector<Moebius>& generators, double tol = 1e-8);

// Action on the invariant axis, read as x -> eps * x + m in arclength.
struct AxisMotion {
  double m = 0.0;
  int eps = 1;
};
AxisMotion compose(const AxisMotion& a, const AxisMotion& b);
// Throws NotCoaxial if g does not preserve the axis.
AxisMotion axis_motion(const Moebius& g, const std::array<SpherePoint, 2>& axis, double tol = 1e-8);
std::vector<AxisMotion> coaxial_character(const std::vector<Moebius>& generators,
                                          const std::array<SpherePoint, 2>& axis, double tol = 1e-8);

// Fixed point of each peripheral image: the eigenvector of the smaller
// eigenvalue for loxodromics, the unique one for parabolics, the
// lexicographically smaller one for elliptics. Throws DegenerateInput.
FramedRepresentation frame_from_representation(const presentation::Presentation& p,
                                               const std::vector<Moebius>& generators,
                                               double tol = 1e-8);

}  // namespace fg::representation
