#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fg/domination.hpp"
#include "fg/error.hpp"
#include "fg/pleat.hpp"
#include "fg/representation.hpp"
#include "fg/strip.hpp"
#include "fg/surface.hpp"

// JSON forms of the library values. Every top-level document carries
// "schema": 1. Complex numbers are [re, im]; sphere points are [re, im] or
// "inf"; matrices are four complex numbers a, b, c, d. Readers throw
// SchemaViolation (or the library's own validation errors).
namespace fg::io {

using Json = nlohmann::ordered_json;
inline constexpr int kSchema = 1;

// Parses text, mapping syntax errors to SchemaViolation.
Json parse(const std::string& text);
Json read_file(const std::string& path);
// Two-space indented with a trailing newline.
std::string dump(const Json& j);

Json to_json(Complex z);
Complex complex_from_json(const Json& j);
Json to_json(const moebius::SpherePoint& p);
moebius::SpherePoint point_from_json(const Json& j);
Json to_json(const moebius::Moebius& m);
moebius::Moebius moebius_from_json(const Json& j);

Json to_json(const surface::IdealTriangulation& t);
surface::IdealTriangulation triangulation_from_json(const Json& j);

Json to_json(const representation::FGCoordinates& x);
representation::FGCoordinates coordinates_from_json(const Json& j, int num_edges);

Json to_json(const surface::NormalCurve& c);
surface::NormalCurve curve_from_json(const Json& j, int num_edges);
Json curves_to_json(const std::vector<surface::NormalCurve>& cs);

// Generators keyed by presentation name, framing keyed by puncture.
Json to_json(const representation::MarkedSurface& m, const representation::FramedRepresentation& rho);
struct RepresentationInput {
  surface::IdealTriangulation tri;
  representation::FramedRepresentation rho;
  bool has_framing = false;
};
RepresentationInput representation_from_json(const Json& j);

Json to_json(const domination::DominationCertificate& c);
domination::DominationCertificate certificate_from_json(const Json& j);
std::string reports_csv(const domination::DominationCertificate& c);

Json to_json(const std::vector<pleat::DevelopedTriangle>& ts);

struct ArcInput {
  std::vector<int> path;
  double width = 0.0;
  std::optional<double> waist_offset;               // number
  std::optional<moebius::H3Point> waist_point;      // [x, y], upper half-plane of the start frame
};
ArcInput arc_from_json(const Json& j);
Json to_json(const strip::StripArc& a, double width);

Json error_json(ErrorCode code, const std::string& message);

}  // namespace fg::io
