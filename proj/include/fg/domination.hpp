#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fg/curves.hpp"
#include "fg/representation.hpp"
#include "fg/surface.hpp"

namespace fg::domination {

using representation::FGCoordinates;
using surface::NormalCurve;

enum class Verdict { strict, non_strict, violated, unsupported_construction };
std::string_view to_string(Verdict v);

struct CurveReport {
  NormalCurve curve;
  double l_rho = 0.0;
  double l_j = 0.0;
  double ratio = 0.0;
};

struct BoundaryAudit {
  double target = 0.0;  // prescribed length
  double l_j = 0.0;
  double l_rho = 0.0;
};

struct DominationCertificate {
  std::vector<CurveReport> reports;
  double sup_ratio = 0.0;
  std::optional<NormalCurve> witness;
  std::vector<BoundaryAudit> boundary_audit;  // per puncture
  bool boundary_ok = true;
  int max_weight = 0;
  Verdict verdict = Verdict::non_strict;
  std::vector<representation::AxisMotion> coaxial_character;  // co-axial stub only

  bool operator==(const DominationCertificate&) const;
};

struct Options {
  double tolerance = 1e-8;  // boundary audit
  int jobs = 1;
  curves::EnumerationOptions enumeration{};
};

// Compares lengths of rho against the real positive structure j over all
// enumerated curves. The boundary targets are rho's link lengths unless given.
// Throws ZeroDenominator if some curve has zero j-length.
DominationCertificate dominate(const surface::IdealTriangulation& t, const FGCoordinates& rho,
                               const FGCoordinates& j, int max_weight, const Options& opts = {},
                               const std::optional<std::vector<double>>& targets = std::nullopt);
DominationCertificate dominate(const representation::MarkedSurface& m,
                               const representation::FramedRepresentation& rho, const FGCoordinates& j,
                               int max_weight, const Options& opts = {});

struct Dominator {
  FGCoordinates j;
  DominationCertificate certificate;
};

// Straightening of a non-degenerate framed representation whose bending
// support fills. Throws DegenerateInput, NotFilling, NonGenericFraming.
Dominator strict_dominator_filling(const representation::MarkedSurface& m,
                                   const representation::FramedRepresentation& rho_hat, int max_weight,
                                   const Options& opts = {});

// Length saved by bending two arms of length L at a crossing of angle alpha
// with bending angle theta. Throws ZeroBend, InvalidArgument.
double trig_gap(double L, double alpha, double theta);

// Crossing data of a curve with the edges of a bent structure, read in its
// straightening: segment lengths between crossings, crossing angles in
// (0, pi/2] and bending angles.
struct CrossingProfile {
  int crossings = 0;
  double min_segment = 0.0;
  double min_angle = 0.0;
  double min_bend = 0.0;
  double period = 0.0;  // straightened length
};
CrossingProfile crossing_profile(const surface::IdealTriangulation& t, const FGCoordinates& x, const NormalCurve& c);

// Cusped structure (all coordinates 1) on the standard triangulation. With
// generator images (a degenerate_a representation in the standard
// presentation) rho-lengths are measured; without, they are taken as zero.
Dominator degenerate_dominator_a(int genus, int punctures, int max_weight,
                                 const std::optional<std::vector<moebius::Moebius>>& generators = std::nullopt,
                                 const Options& opts = {});

// Co-axial representations: character only, verdict unsupported_construction.
// Throws NotCoaxial.
DominationCertificate coaxial_stub(const presentation::Presentation& p,
                                   const std::vector<moebius::Moebius>& generators, double tol = 1e-8);

}  // namespace fg::domination
