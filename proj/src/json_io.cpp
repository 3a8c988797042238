#include "fg/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fg::io {

using moebius::Moebius;
using moebius::SpherePoint;

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaViolation, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) schema(what + " must be an integer");
  return j.get<int>();
}

double as_double(const Json& j, const std::string& what) {
  if (!j.is_number()) schema(what + " must be a number");
  return j.get<double>();
}

void check_schema(const Json& j) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema) {
    schema("unsupported schema version " + j.at("schema").dump());
  }
}

int edge_key(const std::string& key, int num_edges) {
  std::size_t used = 0;
  int e = -1;
  try {
    e = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || e < 0 || e >= num_edges) schema("bad edge id \"" + key + "\"");
  return e;
}

Json weights_array(const surface::NormalCurve& c) { return Json(c.weights); }

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    schema("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const SpherePoint& p) {
  if (p.is_infinity()) return "inf";
  return to_json(p.value());
}

SpherePoint point_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") schema("point must be [re, im] or \"inf\"");
    return SpherePoint::infinity();
  }
  return SpherePoint(complex_from_json(j));
}

Json to_json(const Moebius& m) { return Json::array({to_json(m.a()), to_json(m.b()), to_json(m.c()), to_json(m.d())}); }

Moebius moebius_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) schema("matrix must be four complex entries a, b, c, d");
  return Moebius(complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]), complex_from_json(j[3]));
}

Json to_json(const surface::IdealTriangulation& t) {
  Json g = Json::array();
  for (const auto& e : t.gluing()) g.push_back(Json(e));
  return Json{{"schema", kSchema}, {"genus", t.genus()}, {"punctures", t.punctures()}, {"gluing", g}};
}

surface::IdealTriangulation triangulation_from_json(const Json& j) {
  check_schema(j);
  const int genus = as_int(field(j, "genus"), "genus");
  const int punctures = as_int(field(j, "punctures"), "punctures");
  const Json& g = field(j, "gluing");
  if (!g.is_array()) schema("gluing must be an array");
  std::vector<surface::Gluing> gluing;
  for (const auto& row : g) {
    if (!row.is_array() || row.size() != 4) schema("each gluing is [t, s, t2, s2]");
    surface::Gluing e{};
    for (std::size_t i = 0; i < 4; ++i) e[i] = as_int(row[i], "gluing entry");
    gluing.push_back(e);
  }
  return surface::IdealTriangulation::build(genus, punctures, std::move(gluing));
}

Json to_json(const representation::FGCoordinates& x) {
  Json c = Json::object();
  for (std::size_t e = 0; e < x.values.size(); ++e) c[std::to_string(e)] = to_json(x.values[e]);
  return Json{{"schema", kSchema}, {"coords", c}};
}

representation::FGCoordinates coordinates_from_json(const Json& j, int num_edges) {
  check_schema(j);
  const Json& c = field(j, "coords");
  if (!c.is_object()) schema("coords must map edge ids to [re, im]");
  representation::FGCoordinates x;
  x.values.assign(static_cast<std::size_t>(num_edges), Complex(0.0));
  std::vector<bool> seen(static_cast<std::size_t>(num_edges), false);
  for (const auto& [key, v] : c.items()) {
    const auto e = static_cast<std::size_t>(edge_key(key, num_edges));
    x.values[e] = complex_from_json(v);
    seen[e] = true;
  }
  for (std::size_t e = 0; e < seen.size(); ++e) {
    if (!seen[e]) schema("no coordinate for edge " + std::to_string(e));
  }
  return x;
}

Json to_json(const surface::NormalCurve& c) {
  Json w = Json::object();
  for (std::size_t e = 0; e < c.weights.size(); ++e) w[std::to_string(e)] = c.weights[e];
  return Json{{"weights", w}};
}

surface::NormalCurve curve_from_json(const Json& j, int num_edges) {
  const Json& w = field(j, "weights");
  if (!w.is_object()) schema("weights must map edge ids to integers");
  surface::NormalCurve c;
  c.weights.assign(static_cast<std::size_t>(num_edges), 0);
  for (const auto& [key, v] : w.items()) {
    c.weights[static_cast<std::size_t>(edge_key(key, num_edges))] = as_int(v, "weight");
  }
  return c;
}

Json curves_to_json(const std::vector<surface::NormalCurve>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return Json{{"schema", kSchema}, {"curves", a}};
}

Json to_json(const representation::MarkedSurface& m, const representation::FramedRepresentation& rho) {
  Json gens = Json::object();
  for (std::size_t i = 0; i < rho.generators.size(); ++i) gens[m.pres.names[i]] = to_json(rho.generators[i]);
  Json framing = Json::object();
  for (std::size_t p = 0; p < rho.framing.size(); ++p) framing[std::to_string(p)] = to_json(rho.framing[p]);
  Json tri = to_json(m.tri);
  tri.erase("schema");
  return Json{{"schema", kSchema}, {"triangulation", tri}, {"generators", gens}, {"framing", framing}};
}

RepresentationInput representation_from_json(const Json& j) {
  check_schema(j);
  RepresentationInput in{triangulation_from_json(field(j, "triangulation")), {}, false};
  const representation::MarkedSurface m(in.tri);
  const Json& gens = field(j, "generators");
  if (!gens.is_object()) schema("generators must map names to matrices");
  for (const auto& name : m.pres.names) {
    if (!gens.contains(name)) schema("missing generator " + name);
    in.rho.generators.push_back(moebius_from_json(gens.at(name)));
  }
  if (gens.size() != m.pres.names.size()) schema("unexpected generator names");
  if (j.contains("framing")) {
    const Json& f = j.at("framing");
    if (!f.is_object()) schema("framing must map punctures to points");
    in.rho.framing.assign(static_cast<std::size_t>(in.tri.punctures()), SpherePoint());
    std::vector<bool> seen(in.rho.framing.size(), false);
    for (const auto& [key, v] : f.items()) {
      const auto p = static_cast<std::size_t>(edge_key(key, in.tri.punctures()));
      in.rho.framing[p] = point_from_json(v);
      seen[p] = true;
    }
    for (std::size_t p = 0; p < seen.size(); ++p) {
      if (!seen[p]) schema("no framing for puncture " + std::to_string(p));
    }
    in.has_framing = true;
  }
  return in;
}

Json to_json(const domination::DominationCertificate& c) {
  Json reports = Json::array();
  for (const auto& r : c.reports) {
    reports.push_back(Json{{"weights", weights_array(r.curve)}, {"l_rho", r.l_rho}, {"l_j", r.l_j}, {"ratio", r.ratio}});
  }
  Json audit = Json::array();
  for (const auto& a : c.boundary_audit) audit.push_back(Json{{"target", a.target}, {"l_j", a.l_j}, {"l_rho", a.l_rho}});
  Json character = Json::array();
  for (const auto& m : c.coaxial_character) character.push_back(Json{{"m", m.m}, {"eps", m.eps}});
  return Json{{"schema", kSchema},
              {"verdict", std::string(domination::to_string(c.verdict))},
              {"sup_ratio", c.sup_ratio},
              {"witness", c.witness ? weights_array(*c.witness) : Json(nullptr)},
              {"max_weight", c.max_weight},
              {"boundary_ok", c.boundary_ok},
              {"boundary_audit", audit},
              {"coaxial_character", character},
              {"reports", reports}};
}

domination::DominationCertificate certificate_from_json(const Json& j) {
  check_schema(j);
  domination::DominationCertificate c;
  const std::string verdict = field(j, "verdict").is_string() ? j.at("verdict").get<std::string>() : "";
  bool known = false;
  for (auto v : {domination::Verdict::strict, domination::Verdict::non_strict, domination::Verdict::violated,
                 domination::Verdict::unsupported_construction}) {
    if (domination::to_string(v) == verdict) {
      c.verdict = v;
      known = true;
    }
  }
  if (!known) schema("unknown verdict \"" + verdict + "\"");
  c.sup_ratio = as_double(field(j, "sup_ratio"), "sup_ratio");
  auto weights = [](const Json& w) {
    if (!w.is_array()) schema("weights must be an integer array");
    surface::NormalCurve n;
    for (const auto& x : w) n.weights.push_back(as_int(x, "weight"));
    return n;
  };
  if (!field(j, "witness").is_null()) c.witness = weights(j.at("witness"));
  c.max_weight = as_int(field(j, "max_weight"), "max_weight");
  if (!field(j, "boundary_ok").is_boolean()) schema("boundary_ok must be boolean");
  c.boundary_ok = j.at("boundary_ok").get<bool>();
  for (const auto& a : field(j, "boundary_audit")) {
    c.boundary_audit.push_back(domination::BoundaryAudit{as_double(field(a, "target"), "target"),
                                                         as_double(field(a, "l_j"), "l_j"),
                                                         as_double(field(a, "l_rho"), "l_rho")});
  }
  for (const auto& m : field(j, "coaxial_character")) {
    c.coaxial_character.push_back(representation::AxisMotion{as_double(field(m, "m"), "m"), as_int(field(m, "eps"), "eps")});
  }
  for (const auto& r : field(j, "reports")) {
    c.reports.push_back(domination::CurveReport{weights(field(r, "weights")), as_double(field(r, "l_rho"), "l_rho"),
                                                as_double(field(r, "l_j"), "l_j"), as_double(field(r, "ratio"), "ratio")});
  }
  return c;
}

std::string reports_csv(const domination::DominationCertificate& c) {
  std::ostringstream out;
  out.precision(17);
  out << "weights,l_rho,l_j,ratio\n";
  for (const auto& r : c.reports) {
    for (std::size_t e = 0; e < r.curve.weights.size(); ++e) out << (e ? " " : "") << r.curve.weights[e];
    out << ',' << r.l_rho << ',' << r.l_j << ',' << r.ratio << '\n';
  }
  return out.str();
}

Json to_json(const std::vector<pleat::DevelopedTriangle>& ts) {
  Json a = Json::array();
  for (const auto& t : ts) {
    a.push_back(Json{{"triangle", t.triangle},
                     {"vertices", Json::array({to_json(t.vertices[0]), to_json(t.vertices[1]), to_json(t.vertices[2])})}});
  }
  return Json{{"schema", kSchema}, {"triangles", a}};
}

ArcInput arc_from_json(const Json& j) {
  ArcInput a;
  const Json& p = field(j, "path");
  if (!p.is_array()) schema("path must be an array of edge ids");
  for (const auto& e : p) a.path.push_back(as_int(e, "path entry"));
  a.width = as_double(field(j, "width"), "width");
  if (j.contains("waist")) {
    const Json& w = j.at("waist");
    if (w.is_string()) {
      if (w.get<std::string>() != "auto") schema("waist must be \"auto\", an offset or a point");
    } else if (w.is_number()) {
      a.waist_offset = w.get<double>();
    } else {
      const Complex z = complex_from_json(w);
      if (!(z.imag() > 0.0)) schema("waist point must lie in the upper half-plane");
      a.waist_point = moebius::H3Point{Complex(z.real()), z.imag()};
    }
  }
  return a;
}

Json to_json(const strip::StripArc& a, double width) {
  auto h2 = [](const moebius::H3Point& p) { return Json::array({p.z.real(), p.t}); };
  return Json{{"path", a.edges},
              {"width", width},
              {"start_triangle", a.start_triangle},
              {"punctures", Json::array({a.start_puncture, a.end_puncture})},
              {"ends", Json::array({to_json(a.ends[0]), to_json(a.ends[1])})},
              {"feet", Json::array({h2(a.feet[0]), h2(a.feet[1])})},
              {"waist", h2(a.waist)}};
}

Json error_json(ErrorCode code, const std::string& message) {
  return Json{{"schema", kSchema}, {"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
}

}  // namespace fg::io
