#include "fg/representation.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <string>

#include "fg/error.hpp"

namespace fg::representation {

using presentation::Presentation;
using surface::Corner;
using surface::IdealTriangulation;
using surface::Side;

namespace {

const SpherePoint& standard_vertex(int i) {
  static const SpherePoint pts[3] = {SpherePoint::infinity(), SpherePoint(Complex(-1.0)),
                                     SpherePoint(Complex(0.0))};
  return pts[i];
}

Moebius signed_image(const std::vector<Moebius>& letters, int l) {
  const auto& m = letters[static_cast<std::size_t>(std::abs(l) - 1)];
  return l > 0 ? m : m.inverse();
}

bool lex_less(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  const Complex x = a.value(), y = b.value();
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

bool close(const SpherePoint& a, const SpherePoint& b, double tol) { return a.chordal_distance(b) <= tol; }

double frobenius_sq(const Moebius& m) {
  return std::norm(m.a()) + std::norm(m.b()) + std::norm(m.c()) + std::norm(m.d());
}

// Isometry moving (z, t) to the point above 0 at height 1.
Moebius recenter(double x, double y, double log_t) {
  const double s = std::exp(0.5 * log_t);
  return Moebius(1.0 / s, -Complex(x, y) / s, 0.0, s);
}

// Rounding error of evaluating the relation grows with the norms of its factors.
double relation_conditioning(const Presentation& p, const std::vector<Moebius>& generators) {
  double k = 1.0;
  const word::Word r = p.relation();
  for (int l : r.letters()) {
    k *= std::max(1.0, std::sqrt(frobenius_sq(generators[static_cast<std::size_t>(std::abs(l) - 1)]) / 2.0));
  }
  return std::min(k, 1e12);
}

}  // namespace

Moebius balancing_conjugator(const std::vector<Moebius>& generators) {
  auto cost = [&](const std::array<double, 3>& q) {
    const Moebius a = recenter(q[0], q[1], q[2]);
    const Moebius ai = a.inverse();
    double s = 0.0;
    for (const auto& g : generators) s += frobenius_sq(a * g * ai);
    return s;
  };
  std::array<double, 3> p{0.0, 0.0, 0.0};
  double best = cost(p);
  double step = 1.0;
  for (int it = 0; it < 5000 && step > 1e-9; ++it) {
    bool moved = false;
    for (int k = 0; k < 3; ++k) {
      for (int sg : {-1, 1}) {
        auto q = p;
        q[static_cast<std::size_t>(k)] += sg * step * (k < 2 ? std::exp(0.5 * p[2]) : 1.0);
        const double v = cost(q);
        if (v < best) {
          best = v;
          p = q;
          moved = true;
        }
      }
    }
    if (!moved) step *= 0.5;
  }
  return recenter(p[0], p[1], p[2]);
}

void check_coordinates(const FGCoordinates& x, int num_edges) {
  if (static_cast<int>(x.values.size()) != num_edges) {
    throw Error(ErrorCode::DegenerateCoordinate, "expected " + std::to_string(num_edges) +
                                                     " coordinates, got " + std::to_string(x.values.size()));
  }
  for (std::size_t e = 0; e < x.values.size(); ++e) {
    const double r = std::abs(x.values[e]);
    if (!std::isfinite(r) || !(r > 1e-12) || !(r < 1e12)) {
      throw Error(ErrorCode::DegenerateCoordinate, "coordinate of edge " + std::to_string(e) + " is degenerate");
    }
  }
}

Moebius rotation(int power) {
  static const Moebius T(-1.0, -1.0, 1.0, 0.0);
  static const Moebius T2 = T * T;
  switch (((power % 3) + 3) % 3) {
    case 1: return T;
    case 2: return T2;
    default: return Moebius();
  }
}

Moebius shear_matrix(Complex c) { return Moebius(c, c, 0.0, 1.0); }

Moebius step_matrix(const IdealTriangulation& t, const FGCoordinates& x, Side s) {
  const Side q = t.partner(s);
  const Complex c = x.values[static_cast<std::size_t>(t.edge_of(s))];
  return rotation(s.side + 1) * shear_matrix(c) * rotation(-q.side);
}

TreeDevelopment develop_tree(const MarkedSurface& m, const FGCoordinates& x) {
  check_coordinates(x, m.tri.num_edges());
  const auto& P = m.pres;
  TreeDevelopment d;
  d.frames.assign(static_cast<std::size_t>(m.tri.num_triangles()), Moebius());
  for (int tri : P.bfs_order) {
    if (tri == P.bfs_order.front()) continue;
    const Side ps = P.parent_side[static_cast<std::size_t>(tri)];
    d.frames[static_cast<std::size_t>(tri)] = d.frames[static_cast<std::size_t>(ps.tri)] * step_matrix(m.tri, x, ps);
  }
  for (const Side& s : P.letter_side) {
    const Side q = m.tri.partner(s);
    d.letters.push_back(d.frames[static_cast<std::size_t>(s.tri)] * step_matrix(m.tri, x, s) *
                        d.frames[static_cast<std::size_t>(q.tri)].inverse());
  }
  return d;
}

std::vector<Moebius> letter_images(const Presentation& p, const std::vector<Moebius>& generators) {
  if (static_cast<int>(generators.size()) != p.num_generators()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(p.num_generators()) + " generator images");
  }
  std::vector<Moebius> out;
  for (const auto& w : p.letters) out.push_back(word::evaluate(w, generators));
  return out;
}

FramedRepresentation holonomy_from_fg(const MarkedSurface& m, const FGCoordinates& x) {
  const auto d = develop_tree(m, x);
  const auto& P = m.pres;
  FramedRepresentation rho;
  for (const auto& w : P.generators) rho.generators.push_back(word::evaluate(w, d.letters));
  for (const auto& link : m.tri.links()) {
    const Corner c = link.front();
    const auto idx = static_cast<std::size_t>(3 * c.tri + c.corner);
    const SpherePoint v = d.frames[static_cast<std::size_t>(c.tri)](standard_vertex(c.corner));
    rho.framing.push_back(word::evaluate(P.corner_conjugator[idx], d.letters).inverse()(v));
  }
  const Moebius a = balancing_conjugator(rho.generators);
  const Moebius ai = a.inverse();
  for (auto& g : rho.generators) g = a * g * ai;
  for (auto& f : rho.framing) f = a(f);
  return rho;
}

double relation_residual(const Presentation& p, const std::vector<Moebius>& generators) {
  return word::evaluate(p.relation(), generators).projective_distance(Moebius());
}

double framing_residual(const Presentation& p, const FramedRepresentation& rho) {
  double worst = 0.0;
  for (int q = 0; q < p.punctures; ++q) {
    const auto& f = rho.framing[static_cast<std::size_t>(q)];
    const auto& c = rho.generators[static_cast<std::size_t>(p.peripheral_index(q))];
    worst = std::max(worst, c(f).chordal_distance(f));
  }
  return worst;
}

FGCoordinates fg_from_framed(const MarkedSurface& m, const FramedRepresentation& rho, double tol) {
  const auto& P = m.pres;
  const auto& T = m.tri;
  if (static_cast<int>(rho.framing.size()) != P.punctures) {
    throw Error(ErrorCode::InvalidArgument, "expected one framing point per puncture");
  }
  const auto letters = letter_images(P, rho.generators);
  const double kappa = relation_conditioning(P, rho.generators);
  const double rel = relation_residual(P, rho.generators);
  if (rel > std::max(tol, 1e-6) * kappa) {
    throw Error(ErrorCode::InvalidArgument, "generator images violate the surface relation");
  }
  if (framing_residual(P, rho) > std::max(tol, 1e-6)) {
    throw Error(ErrorCode::InvalidArgument, "framing is not fixed by the peripheral images");
  }
  std::vector<SpherePoint> beta(static_cast<std::size_t>(3 * T.num_triangles()));
  for (int tri = 0; tri < T.num_triangles(); ++tri) {
    for (int i = 0; i < 3; ++i) {
      const auto idx = static_cast<std::size_t>(3 * tri + i);
      const int p = T.puncture_of(Corner{tri, i});
      beta[idx] = word::evaluate(P.corner_conjugator[idx], letters)(rho.framing[static_cast<std::size_t>(p)]);
    }
  }
  auto at = [&](int tri, int i) -> const SpherePoint& { return beta[static_cast<std::size_t>(3 * tri + (i % 3))]; };
  auto lift = [&](Side s) {
    const Side q = T.partner(s);
    SpherePoint far = at(q.tri, q.side + 2);
    const int l = P.letter_of(s);
    if (l != 0) far = signed_image(letters, l)(far);
    return moebius::cross_ratio(at(s.tri, s.side), far, at(s.tri, s.side + 1), at(s.tri, s.side + 2));
  };
  FGCoordinates x;
  for (int e = 0; e < T.num_edges(); ++e) {
    const auto [a, b] = T.edge_sides(e);
    Complex c1, c2;
    try {
      c1 = lift(a);
      c2 = lift(b);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DegenerateQuadruple) throw;
      throw Error(ErrorCode::NonGenericFraming, "framing is not generic at edge " + std::to_string(e));
    }
    if (std::abs(c1 - c2) > std::max(1e-6, 100.0 * tol) * kappa * (1.0 + std::abs(c1))) {
      throw Error(ErrorCode::Internal, "lifts of edge " + std::to_string(e) + " disagree");
    }
    x.values.push_back(c1);
  }
  return x;
}

RetriedCoordinates fg_from_framed_with_flips(const IdealTriangulation& t, const FramedRepresentation& rho,
                                             double tol) {
  RetriedCoordinates out{t, {}, 0};
  const int budget = 10 * t.num_edges();
  while (true) {
    try {
      MarkedSurface m(out.tri);
      out.coords = fg_from_framed(m, rho, tol);
      return out;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NonGenericFraming || out.flips >= budget) throw;
      const std::string msg = err.what();
      int e = std::stoi(msg.substr(msg.rfind(' ') + 1));
      // the offending edge may be self-glued; move on to the next flippable one
      for (int k = 0; k < out.tri.num_edges(); ++k) {
        const int cand = (e + k) % out.tri.num_edges();
        const auto sides = out.tri.edge_sides(cand);
        if (sides[0].tri != sides[1].tri) {
          e = cand;
          break;
        }
      }
      out.tri = surface::flip(out.tri, e);
      ++out.flips;
    }
  }
}

double link_log_sum(const IdealTriangulation& t, const FGCoordinates& x, int puncture) {
  double s = 0.0;
  for (const Corner& c : t.links().at(static_cast<std::size_t>(puncture))) {
    s += std::log(std::abs(x.values[static_cast<std::size_t>(t.edge_of(Side{c.tri, (c.corner + 2) % 3}))]));
  }
  return s;
}

BoundaryInvariant boundary_invariant(const IdealTriangulation& t, const FGCoordinates& x, int puncture,
                                     double tol) {
  check_coordinates(x, t.num_edges());
  double args = 0.0;
  for (const Corner& c : t.links().at(static_cast<std::size_t>(puncture))) {
    args += std::arg(x.values[static_cast<std::size_t>(t.edge_of(Side{c.tri, (c.corner + 2) % 3}))]);
  }
  BoundaryInvariant b;
  b.length = std::abs(link_log_sum(t, x, puncture));
  if (b.length > tol) {
    b.cls = moebius::IsometryClass::loxodromic;
  } else {
    const double turns = args / (2.0 * M_PI);
    b.cls = std::abs(turns - std::round(turns)) * 2.0 * M_PI <= tol ? moebius::IsometryClass::parabolic
                                                                    : moebius::IsometryClass::elliptic;
  }
  return b;
}

std::string_view to_string(Degeneracy d) {
  switch (d) {
    case Degeneracy::nondegenerate: return "nondegenerate";
    case Degeneracy::degenerate_a: return "degenerate_a";
    case Degeneracy::degenerate_coaxial: return "degenerate_coaxial";
  }
  return "unknown";
}

DegeneracyClass detect_degeneracy(const Presentation& p, const std::vector<Moebius>& generators, double tol) {
  if (static_cast<int>(generators.size()) != p.num_generators()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(p.num_generators()) + " generator images");
  }
  auto peripheral_ok = [&](auto&& pred) {
    for (int q = 0; q < p.punctures; ++q) {
      if (!pred(generators[static_cast<std::size_t>(p.peripheral_index(q))])) return false;
    }
    return true;
  };
  const Moebius* first = nullptr;
  for (const auto& g : generators) {
    if (!g.is_identity(tol)) {
      first = &g;
      break;
    }
  }
  DegeneracyClass out;
  const bool cusps = peripheral_ok([&](const Moebius& c) {
    const auto cls = moebius::classify(c, tol);
    return cls == moebius::IsometryClass::parabolic || cls == moebius::IsometryClass::identity;
  });
  if (first == nullptr) {
    out.kind = Degeneracy::degenerate_a;
    out.fixed_point = SpherePoint::infinity();
    return out;
  }
  if (cusps) {
    for (const auto& x : moebius::fixed_points(*first, tol)) {
      bool common = true;
      for (const auto& g : generators) common = common && close(g(x), x, tol);
      if (common) {
        out.kind = Degeneracy::degenerate_a;
        out.fixed_point = x;
        return out;
      }
    }
  }
  std::vector<Moebius> sources;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    sources.push_back(generators[i]);
    sources.push_back(generators[i] * generators[i]);
    for (std::size_t j = i + 1; j < generators.size(); ++j) sources.push_back(generators[i] * generators[j]);
  }
  for (const auto& s : sources) {
    const auto fp = moebius::fixed_points(s, tol);
    if (fp.size() != 2 || fp[0].chordal_distance(fp[1]) <= tol) continue;
    const SpherePoint& a = fp[0];
    const SpherePoint& b = fp[1];
    bool preserved = true;
    for (const auto& g : generators) {
      const SpherePoint ga = g(a), gb = g(b);
      preserved = preserved && ((close(ga, a, tol) && close(gb, b, tol)) || (close(ga, b, tol) && close(gb, a, tol)));
    }
    if (!preserved) continue;
    if (!peripheral_ok([&](const Moebius& c) { return close(c(a), a, tol) && close(c(b), b, tol); })) continue;
    out.kind = Degeneracy::degenerate_coaxial;
    out.axis = lex_less(a, b) ? std::array<SpherePoint, 2>{a, b} : std::array<SpherePoint, 2>{b, a};
    return out;
  }
  return out;
}

AxisMotion compose(const AxisMotion& a, const AxisMotion& b) { return {a.m + a.eps * b.m, a.eps * b.eps}; }

AxisMotion axis_motion(const Moebius& g, const std::array<SpherePoint, 2>& axis, double tol) {
  const SpherePoint& p = axis[0];
  const SpherePoint& q = axis[1];
  if (p.chordal_distance(q) <= tol) throw Error(ErrorCode::NotCoaxial, "axis endpoints coincide");
  // A sends p to 0 and q to infinity
  Moebius A;
  if (q.is_infinity()) {
    A = Moebius(1.0, -p.value(), 0.0, 1.0);
  } else if (p.is_infinity()) {
    A = Moebius(0.0, 1.0, 1.0, -q.value());
  } else {
    A = Moebius(1.0, -p.value(), 1.0, -q.value());
  }
  const Moebius h = A * g * A.inverse();
  const double scale = std::max({std::abs(h.a()), std::abs(h.b()), std::abs(h.c()), std::abs(h.d())});
  if (std::abs(h.b()) <= tol * scale && std::abs(h.c()) <= tol * scale) {
    return {2.0 * std::log(std::abs(h.a())), 1};
  }
  if (std::abs(h.a()) <= tol * scale && std::abs(h.d()) <= tol * scale) {
    return {2.0 * std::log(std::abs(h.b())), -1};
  }
  throw Error(ErrorCode::NotCoaxial, "element does not preserve the axis");
}

std::vector<AxisMotion> coaxial_character(const std::vector<Moebius>& generators,
                                          const std::array<SpherePoint, 2>& axis, double tol) {
  std::vector<AxisMotion> out;
  for (const auto& g : generators) out.push_back(axis_motion(g, axis, tol));
  return out;
}

FramedRepresentation frame_from_representation(const Presentation& p, const std::vector<Moebius>& generators,
                                               double tol) {
  const auto d = detect_degeneracy(p, generators, tol);
  if (d.kind != Degeneracy::nondegenerate) {
    throw Error(ErrorCode::DegenerateInput, std::string("representation is ") + std::string(to_string(d.kind)));
  }
  FramedRepresentation rho;
  rho.generators = generators;
  for (int q = 0; q < p.punctures; ++q) {
    const auto& c = generators[static_cast<std::size_t>(p.peripheral_index(q))];
    const auto fp = moebius::fixed_points(c, 1e-9);
    switch (moebius::classify(c, 1e-9)) {
      case moebius::IsometryClass::identity: rho.framing.emplace_back(Complex(0.0)); break;
      case moebius::IsometryClass::parabolic: rho.framing.push_back(fp[0]); break;
      case moebius::IsometryClass::loxodromic: rho.framing.push_back(fp[1]); break;
      case moebius::IsometryClass::elliptic:
        rho.framing.push_back(lex_less(fp[1], fp[0]) ? fp[1] : fp[0]);
        break;
    }
  }
  return rho;
}

}  // namespace fg::representation
