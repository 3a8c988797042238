// fgdom: command-line front end.
//
// Exit status: 0 strict verdict (or plain success), 2 any other verdict,
// 1 error with a JSON error object on stderr.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fg/curves.hpp"
#include "fg/domination.hpp"
#include "fg/error.hpp"
#include "fg/json_io.hpp"
#include "fg/pleat.hpp"
#include "fg/representation.hpp"
#include "fg/strip.hpp"
#include "fg/surface.hpp"

using namespace fg;
using io::Json;

namespace {

struct Flags {
  std::string tri, coords, rep, j, arcs, out, svg, csv;
  int genus = 1, punctures = 1, max_weight = 8, jobs = 1, flip = -1;
  double tolerance = 1e-8;
  std::uint64_t seed = 0;
  std::string kind = "bent";
  std::vector<int> path;
};

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(f.out);
  if (!o) throw Error(ErrorCode::InvalidArgument, "cannot write " + f.out);
  o << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  o << text;
}

int exit_for(domination::Verdict v) { return v == domination::Verdict::strict ? 0 : 2; }

// Triangulation from --tri, or embedded in the coordinate file.
surface::IdealTriangulation load_triangulation(const Flags& f, const Json* coords) {
  if (!f.tri.empty()) return io::triangulation_from_json(io::read_file(f.tri));
  if (coords && coords->contains("triangulation")) return io::triangulation_from_json(coords->at("triangulation"));
  throw Error(ErrorCode::InvalidArgument, "a triangulation is required (--tri)");
}

struct CoordInput {
  surface::IdealTriangulation tri;
  representation::FGCoordinates x;
};

CoordInput load_coords(const Flags& f, const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "coordinates are required (--coords)");
  const Json j = io::read_file(path);
  auto tri = load_triangulation(f, &j);
  auto x = io::coordinates_from_json(j, tri.num_edges());
  return {std::move(tri), std::move(x)};
}

struct RepInput {
  representation::MarkedSurface m;
  representation::FramedRepresentation rho;
};

// --rep, or --coords reconstructed through the holonomy.
RepInput load_rep(const Flags& f) {
  if (!f.rep.empty()) {
    auto in = io::representation_from_json(io::read_file(f.rep));
    representation::MarkedSurface m(in.tri);
    if (!in.has_framing) in.rho = representation::frame_from_representation(m.pres, in.rho.generators, f.tolerance);
    return {std::move(m), std::move(in.rho)};
  }
  auto c = load_coords(f, f.coords);
  representation::MarkedSurface m(std::move(c.tri));
  auto rho = representation::holonomy_from_fg(m, c.x);
  return {std::move(m), std::move(rho)};
}

Json with_triangulation(Json body, const surface::IdealTriangulation& t) {
  Json tri = io::to_json(t);
  tri.erase("schema");
  body["triangulation"] = tri;
  return body;
}

int run_triangulate(const Flags& f) {
  auto t = f.tri.empty() ? surface::standard_triangulation(f.genus, f.punctures)
                         : io::triangulation_from_json(io::read_file(f.tri));
  if (f.flip >= 0) t = surface::flip(t, f.flip);
  Json out = io::to_json(t);
  Json links = Json::array();
  for (const auto& l : t.links()) {
    Json corners = Json::array();
    for (const auto& c : l) corners.push_back(Json::array({c.tri, c.corner}));
    links.push_back(corners);
  }
  out["triangles"] = t.num_triangles();
  out["edges"] = t.num_edges();
  out["links"] = links;
  emit(f, io::dump(out));
  return 0;
}

int run_coords(const Flags& f) {
  if (!f.rep.empty()) {
    auto r = load_rep(f);
    const auto got = representation::fg_from_framed_with_flips(r.m.tri, r.rho, f.tolerance);
    Json out = with_triangulation(io::to_json(got.coords), got.tri);
    out["flips"] = got.flips;
    const representation::MarkedSurface m2(got.tri);
    const auto again = representation::fg_from_framed(m2, representation::holonomy_from_fg(m2, got.coords), f.tolerance);
    double err = 0.0;
    for (std::size_t e = 0; e < again.values.size(); ++e) err = std::max(err, std::abs(again.values[e] - got.coords.values[e]));
    out["roundtrip_error"] = err;
    emit(f, io::dump(out));
    return 0;
  }
  auto c = load_coords(f, f.coords);
  const representation::MarkedSurface m(std::move(c.tri));
  emit(f, io::dump(io::to_json(m, representation::holonomy_from_fg(m, c.x))));
  return 0;
}

int run_straighten(const Flags& f) {
  auto c = load_coords(f, f.coords);
  representation::check_coordinates(c.x, c.tri.num_edges());
  emit(f, io::dump(io::to_json(pleat::straighten(c.x))));
  return 0;
}

domination::Options options(const Flags& f) {
  domination::Options o;
  o.tolerance = f.tolerance;
  o.jobs = f.jobs;
  return o;
}

int finish_certificate(const Flags& f, const domination::DominationCertificate& cert, Json extra = Json::object()) {
  Json out = io::to_json(cert);
  for (auto& [k, v] : extra.items()) out[k] = v;
  if (!f.csv.empty()) write_file(f.csv, io::reports_csv(cert));
  emit(f, io::dump(out));
  return exit_for(cert.verdict);
}

int run_dominate(const Flags& f) {
  auto r = load_rep(f);
  if (!f.j.empty()) {
    const Json jj = io::read_file(f.j);
    const auto j = io::coordinates_from_json(jj, r.m.tri.num_edges());
    return finish_certificate(f, domination::dominate(r.m, r.rho, j, f.max_weight, options(f)),
                              Json{{"j", io::to_json(j)["coords"]}});
  }
  const auto d = domination::strict_dominator_filling(r.m, r.rho, f.max_weight, options(f));
  return finish_certificate(f, d.certificate, Json{{"j", io::to_json(d.j)["coords"]}});
}

Json generators_json(const representation::MarkedSurface& m, const std::vector<moebius::Moebius>& g) {
  Json out = Json::object();
  for (std::size_t i = 0; i < g.size(); ++i) out[m.pres.names[i]] = io::to_json(g[i]);
  return out;
}

int run_strip(const Flags& f) {
  auto c = load_coords(f, f.coords);
  const representation::MarkedSurface m(std::move(c.tri));
  if (f.arcs.empty()) throw Error(ErrorCode::InvalidArgument, "an arc file is required (--arcs)");
  const Json aj = io::read_file(f.arcs);
  const Json& list = aj.is_object() && aj.contains("arcs") ? aj.at("arcs") : aj;
  if (!list.is_array()) throw Error(ErrorCode::SchemaViolation, "arcs must be an array");
  std::vector<strip::StripArc> arcs;
  std::vector<double> widths;
  Json realized = Json::array();
  for (const auto& item : list) {
    const auto in = io::arc_from_json(item);
    auto arc = strip::realize_arc(m.tri, c.x, in.path, in.waist_offset.value_or(0.0));
    if (in.waist_point) arc = strip::realize_arc(m.tri, c.x, in.path, strip::waist_offset_of(arc, *in.waist_point));
    realized.push_back(io::to_json(arc, in.width));
    arcs.push_back(std::move(arc));
    widths.push_back(in.width);
  }
  const auto d = strip::strip_deform(m, c.x, arcs, widths);
  const auto cert = strip::verify_strict_increase(m, d.base, d.deformed, f.max_weight, options(f));
  Json extra{{"arcs", realized},
             {"base", generators_json(m, d.base)},
             {"deformed", generators_json(m, d.deformed)},
             {"relation_residual", representation::relation_residual(m.pres, d.deformed)},
             {"note", "lengthening check only; boundary-preserving regluing is not implemented"}};
  return finish_certificate(f, cert, extra);
}

int run_classify(const Flags& f) {
  auto in = io::representation_from_json(io::read_file(f.rep));
  const representation::MarkedSurface m(in.tri);
  const auto cls = representation::detect_degeneracy(m.pres, in.rho.generators, f.tolerance);
  Json out{{"schema", io::kSchema}, {"kind", std::string(representation::to_string(cls.kind))}};
  if (cls.fixed_point) out["fixed_point"] = io::to_json(*cls.fixed_point);
  if (cls.axis) {
    out["axis"] = Json::array({io::to_json((*cls.axis)[0]), io::to_json((*cls.axis)[1])});
    Json ch = Json::array();
    for (const auto& a : representation::coaxial_character(in.rho.generators, *cls.axis, f.tolerance)) {
      ch.push_back(Json{{"m", a.m}, {"eps", a.eps}});
    }
    out["character"] = ch;
  }
  emit(f, io::dump(out));
  return 0;
}

int run_spectrum(const Flags& f) {
  auto c = load_coords(f, f.coords);
  curves::EnumerationOptions eo;
  Json rows = Json::array();
  for (const auto& curve : curves::enumerate_simple(c.tri, f.max_weight, eo)) {
    Json row = io::to_json(curve);
    row["length"] = curves::curve_length(c.tri, c.x, curve);
    rows.push_back(row);
  }
  Json bdry = Json::array();
  for (int p = 0; p < c.tri.punctures(); ++p) {
    const auto b = representation::boundary_invariant(c.tri, c.x, p, f.tolerance);
    bdry.push_back(Json{{"puncture", p}, {"length", b.length}, {"class", std::string(moebius::to_string(b.cls))}});
  }
  emit(f, io::dump(Json{{"schema", io::kSchema}, {"max_weight", f.max_weight}, {"boundary", bdry}, {"curves", rows}}));
  return 0;
}

// Vertices in the disk model, edges as arcs orthogonal to the unit circle.
std::string svg_of(const std::vector<pleat::DevelopedTriangle>& ts) {
  auto disk = [](const moebius::SpherePoint& p) {
    if (p.is_infinity()) return Complex(1.0, 0.0);
    const Complex z = p.value();
    return (z - Complex(0, 1)) / (z + Complex(0, 1));
  };
  const double r0 = 200.0, c0 = 220.0;
  auto px = [&](Complex w) {
    std::ostringstream s;
    s.precision(6);
    s << std::fixed << c0 + r0 * w.real() << ' ' << c0 - r0 * w.imag();
    return s.str();
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\">\n";
  out << "<circle cx=\"" << c0 << "\" cy=\"" << c0 << "\" r=\"" << r0 << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const auto& t : ts) {
    out << "<path fill=\"none\" stroke=\"steelblue\" d=\"";
    for (int i = 0; i < 3; ++i) {
      const Complex p = disk(t.vertices[static_cast<std::size_t>(i)]);
      const Complex q = disk(t.vertices[static_cast<std::size_t>((i + 1) % 3)]);
      const double theta = std::abs(std::arg(q / p));
      const double cross = p.real() * q.imag() - p.imag() * q.real();
      out << (i == 0 ? "M " : " ") << (i == 0 ? px(p) + " " : "");
      if (std::abs(theta - std::numbers::pi) < 1e-9) {
        out << "L " << px(q);
      } else {
        const double radius = r0 * std::tan(theta / 2.0);
        out << "A " << radius << ' ' << radius << " 0 0 " << (cross > 0 ? 1 : 0) << ' ' << px(q);
      }
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

int run_develop(const Flags& f) {
  auto c = load_coords(f, f.coords);
  const auto ts = pleat::develop(c.tri, c.x, f.path);
  if (!f.svg.empty()) {
    for (const auto& v : c.x.values) {
      if (v.imag() != 0.0 || v.real() <= 0.0) throw Error(ErrorCode::InvalidArgument, "--svg needs real positive coordinates");
    }
    write_file(f.svg, svg_of(ts));
  }
  emit(f, io::dump(io::to_json(ts)));
  return 0;
}

int run_sample(const Flags& f) {
  const auto t = surface::standard_triangulation(f.genus, f.punctures);
  std::mt19937_64 rng(f.seed);
  // bits to [0, 1) without library-specific distributions
  auto uniform = [&rng](double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  representation::FGCoordinates x;
  for (int e = 0; e < t.num_edges(); ++e) {
    const double r = std::exp(uniform(-1.0, 1.0));
    if (f.kind == "real") {
      x.values.emplace_back(r);
    } else if (f.kind == "bent") {
      const double sign = (rng() & 1) ? 1.0 : -1.0;
      x.values.push_back(std::polar(r, sign * uniform(0.2, std::numbers::pi - 0.2)));
    } else {
      throw Error(ErrorCode::InvalidArgument, "--kind must be bent or real");
    }
  }
  emit(f, io::dump(with_triangulation(io::to_json(x), t)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock-Goncharov coordinates, straightening and domination certificates"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* s) {
    s->add_option("--out", f.out, "output file (default stdout)");
    s->add_option("--tolerance", f.tolerance, "fixed-point and relation tolerance");
  };
  auto* tri = app.add_subcommand("triangulate", "build, validate or flip a triangulation");
  tri->add_option("--tri", f.tri, "triangulation JSON to validate");
  tri->add_option("--genus", f.genus);
  tri->add_option("--punctures", f.punctures);
  tri->add_option("--flip", f.flip, "edge to flip");
  auto* coords = app.add_subcommand("coords", "coordinates of a framed representation, or the holonomy of coordinates");
  coords->add_option("--rep", f.rep);
  coords->add_option("--coords", f.coords);
  coords->add_option("--tri", f.tri);
  auto* straighten = app.add_subcommand("straighten", "replace each coordinate by its modulus");
  straighten->add_option("--coords", f.coords)->required();
  straighten->add_option("--tri", f.tri);
  auto* dominate = app.add_subcommand("dominate", "certify domination by the straightened structure");
  dominate->add_option("--rep", f.rep);
  dominate->add_option("--coords", f.coords);
  dominate->add_option("--tri", f.tri);
  dominate->add_option("--j", f.j, "compare against these real coordinates instead");
  auto* stripc = app.add_subcommand("strip", "strip deformation along arcs and lengthening check");
  stripc->add_option("--coords", f.coords)->required();
  stripc->add_option("--tri", f.tri);
  stripc->add_option("--arcs", f.arcs)->required();
  auto* classify = app.add_subcommand("classify", "degeneracy class of a representation");
  classify->add_option("--rep", f.rep)->required();
  auto* spectrum = app.add_subcommand("spectrum", "lengths of simple closed curves");
  spectrum->add_option("--coords", f.coords)->required();
  spectrum->add_option("--tri", f.tri);
  auto* develop = app.add_subcommand("develop", "develop triangles along a path of sides");
  develop->add_option("--coords", f.coords)->required();
  develop->add_option("--tri", f.tri);
  develop->add_option("--path", f.path, "sides crossed, comma separated")->delimiter(',');
  develop->add_option("--svg", f.svg, "also draw the developed triangles");
  auto* sample = app.add_subcommand("sample", "random coordinates on a standard triangulation");
  sample->add_option("--seed", f.seed);
  sample->add_option("--genus", f.genus);
  sample->add_option("--punctures", f.punctures);
  sample->add_option("--kind", f.kind, "bent or real");
  for (auto* s : {tri, coords, straighten, dominate, stripc, classify, spectrum, develop, sample}) common(s);
  for (auto* s : {dominate, stripc, spectrum}) {
    s->add_option("--max-weight", f.max_weight);
    s->add_option("--jobs", f.jobs);
  }
  for (auto* s : {dominate, stripc}) s->add_option("--csv", f.csv, "also write curve reports as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << io::dump(io::error_json(ErrorCode::InvalidArgument, e.what()));
    return 1;
  }

  try {
    if (*tri) return run_triangulate(f);
    if (*coords) return run_coords(f);
    if (*straighten) return run_straighten(f);
    if (*dominate) return run_dominate(f);
    if (*stripc) return run_strip(f);
    if (*classify) return run_classify(f);
    if (*spectrum) return run_spectrum(f);
    if (*develop) return run_develop(f);
    if (*sample) return run_sample(f);
  } catch (const Error& e) {
    std::cerr << io::dump(io::error_json(e.code(), e.what()));
    return 1;
  } catch (const std::exception& e) {
    std::cerr << io::dump(io::error_json(ErrorCode::Internal, e.what()));
    return 1;
  }
  return 1;
}
