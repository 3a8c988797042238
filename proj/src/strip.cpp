#include "fg/strip.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fg/curves.hpp"
#include "fg/error.hpp"

namespace fg::strip {

using surface::Corner;
using surface::IdealTriangulation;
using surface::Side;

namespace {

const SpherePoint& standard_vertex(int i) {
  static const SpherePoint pts[3] = {SpherePoint::infinity(), SpherePoint(Complex(-1.0)),
                                     SpherePoint(Complex(0.0))};
  return pts[i];
}

Complex bracket(const SpherePoint& p, const SpherePoint& q) { return p.x() * q.y() - p.y() * q.x(); }

// Geodesics (a, b) and (p, q) cross.
bool linked(const std::array<SpherePoint, 2>& g, const SpherePoint& p, const SpherePoint& q) {
  const Complex num = bracket(g[0], p) * bracket(g[1], q);
  const Complex den = bracket(g[0], q) * bracket(g[1], p);
  if (std::abs(num) < 1e-14 || std::abs(den) < 1e-14) return false;
  return (num / den).real() < 0.0;
}

SpherePoint third_point(const SpherePoint& a, const SpherePoint& b) {
  for (double c : {0.0, 1.0, -1.0, 2.0, -2.0}) {
    const SpherePoint p{Complex(c)};
    if (p.chordal_distance(a) > 0.1 && p.chordal_distance(b) > 0.1) return p;
  }
  return SpherePoint{Complex(3.0)};
}

// Sends a to 0 and b to infinity (real if a, b are).
Moebius to_axis(const SpherePoint& a, const SpherePoint& b) {
  return moebius::from_triples(a, b, third_point(a, b), Complex(0.0), SpherePoint::infinity(), Complex(1.0));
}

// Sends the geodesic to the vertical axis over 0 and p to height 1.
Moebius normalizer(const std::array<SpherePoint, 2>& ends, const H3Point& p) {
  const Moebius k = to_axis(ends[0], ends[1]);
  const double s = k(p).t;
  return Moebius(1.0 / std::sqrt(s), 0.0, 0.0, std::sqrt(s)) * k;
}

// Meeting point of two crossing geodesics.
H3Point crossing_point(const std::array<SpherePoint, 2>& g, const std::array<SpherePoint, 2>& h) {
  const Moebius k = to_axis(g[0], g[1]);
  const Complex c = k(h[0]).value(), d = k(h[1]).value();
  // h is a half circle over the segment [c, d] through the origin
  const Complex mid = (c + d) / 2.0;
  const double radius = std::abs(d - c) / 2.0;
  const double height = std::sqrt(std::max(0.0, radius * radius - std::norm(mid)));
  return k.inverse()(H3Point{Complex(0.0), height});
}

H3Point apply(const Moebius& m, const H3Point& p) { return m(p); }

void require_real_positive(const FGCoordinates& j) {
  for (const Complex& v : j.values) {
    if (v.imag() != 0.0 || !(v.real() > 0.0)) throw Error(ErrorCode::InvalidArgument, "strip needs real positive coordinates");
  }
}

struct Segment {
  std::array<SpherePoint, 2> ends;
  std::array<H3Point, 2> feet;
};

bool contains(const Segment& s, const H3Point& x) {
  const Moebius k = to_axis(s.ends[0], s.ends[1]);
  const double a = std::log(k(s.feet[0]).t), b = std::log(k(s.feet[1]).t), h = std::log(k(x).t);
  return h > std::min(a, b) + 1e-9 && h < std::max(a, b) - 1e-9;
}

bool segments_cross(const Segment& s, const Segment& u) {
  if (!linked(s.ends, u.ends[0], u.ends[1])) return false;
  const H3Point x = crossing_point(s.ends, u.ends);
  return contains(s, x) && contains(u, x);
}

struct Lift {
  int arc = 0;
  Moebius g;  // lift = g(arc in the domain)
};

}  // namespace

Moebius perpendicular_translation(const std::array<SpherePoint, 2>& ends, const H3Point& p, double distance,
                                  const H3Point& away_from) {
  const Moebius k = normalizer(ends, p);
  const double side = apply(k, away_from).z.real();
  const double ch = std::cosh(distance / 2.0), sh = std::sinh(distance / 2.0);
  const Moebius h = side < 0.0 ? Moebius(ch, sh, sh, ch) : Moebius(ch, -sh, -sh, ch);
  return k.inverse() * h * k;
}

StripArc realize_arc(const IdealTriangulation& t, const FGCoordinates& j, const std::vector<int>& edges,
                     double waist_offset) {
  representation::check_coordinates(j, t.num_edges());
  require_real_positive(j);
  if (edges.empty()) throw Error(ErrorCode::TangledPath, "empty path");
  for (int e : edges) {
    if (e < 0 || e >= t.num_edges()) throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(e) + " out of range");
  }
  // sides crossed, in the order met
  std::vector<Side> crossed{t.edge_sides(edges.front())[0]};
  Side entered = t.partner(crossed.front());
  for (std::size_t k = 1; k < edges.size(); ++k) {
    std::optional<Side> next;
    for (int s = 0; s < 3 && !next; ++s) {
      const Side c{entered.tri, s};
      if (c != entered && t.edge_of(c) == edges[k]) next = c;
    }
    if (!next) {
      throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(edges[k]) + " is not a side of the triangle reached");
    }
    crossed.push_back(*next);
    entered = t.partner(*next);
  }
  std::vector<Moebius> frames{Moebius()};
  for (const Side& s : crossed) frames.push_back(frames.back() * representation::step_matrix(t, j, s));

  StripArc arc;
  arc.edges = edges;
  arc.start_triangle = crossed.front().tri;
  const Corner start{crossed.front().tri, (crossed.front().side + 2) % 3};
  const Corner end{entered.tri, (entered.side + 2) % 3};
  arc.start_puncture = t.puncture_of(start);
  arc.end_puncture = t.puncture_of(end);
  for (int p : {arc.start_puncture, arc.end_puncture}) {
    if (representation::boundary_invariant(t, j, p).length <= 1e-9) {
      throw Error(ErrorCode::CuspExit, "path exits at cusp " + std::to_string(p));
    }
  }
  const Moebius hs = curves::corner_holonomy(t, j, start);
  const Moebius he = frames.back() * curves::corner_holonomy(t, j, end) * frames.back().inverse();
  const auto as = moebius::fixed_points(hs), ae = moebius::fixed_points(he);
  if (as.size() != 2 || ae.size() != 2) throw Error(ErrorCode::CuspExit, "boundary is not loxodromic");

  const Moebius k = to_axis(as[0], as[1]);
  const double c = k(ae[0]).value().real(), d = k(ae[1]).value().real();
  if (c * d <= 0.0) throw Error(ErrorCode::TangledPath, "boundary axes at the ends cross");
  const double r = std::sqrt(c * d);
  const Moebius ki = k.inverse();
  const double near = c > 0.0 ? -r : r;
  arc.ends = {ki(SpherePoint(Complex(near))), ki(SpherePoint(Complex(-near)))};
  const H3Point foot = ki(H3Point{Complex(0.0), r});
  const Moebius n = normalizer(arc.ends, foot);
  arc.waist = n.inverse()(H3Point{Complex(0.0), std::exp(waist_offset)});
  arc.feet = {foot, crossing_point(arc.ends, {ae[0], ae[1]})};

  for (std::size_t q = 0; q < crossed.size(); ++q) {
    const Side s = crossed[q];
    const SpherePoint p1 = frames[q](standard_vertex(s.side));
    const SpherePoint p2 = frames[q](standard_vertex((s.side + 1) % 3));
    if (!linked(arc.ends, p1, p2)) {
      throw Error(ErrorCode::TangledPath, "realized arc misses edge " + std::to_string(t.edge_of(s)) +
                                              " at step " + std::to_string(q));
    }
  }
  return arc;
}

double waist_offset_of(const StripArc& a, const H3Point& p) {
  const H3Point q = normalizer(a.ends, a.feet[0])(p);
  return 0.5 * std::log(std::norm(q.z) + q.t * q.t);
}

Deformation strip_deform(const MarkedSurface& m, const FGCoordinates& j, const std::vector<StripArc>& arcs,
                         const std::vector<double>& widths) {
  require_real_positive(j);
  if (arcs.size() != widths.size()) throw Error(ErrorCode::InvalidArgument, "one width per arc expected");
  for (double w : widths) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::InvalidArgument, "widths must be finite and >= 0");
  }
  const auto dev = representation::develop_tree(m, j);
  Deformation out;
  for (const auto& w : m.pres.generators) out.base.push_back(word::evaluate(w, dev.letters));

  // arcs in the tree domain
  struct DomainArc {
    std::array<SpherePoint, 2> ends;
    H3Point waist;
    std::array<H3Point, 2> feet;
    Moebius norm;
  };
  std::vector<DomainArc> domain;
  for (const auto& a : arcs) {
    const Moebius f = dev.frames[static_cast<std::size_t>(a.start_triangle)];
    DomainArc d{{f(a.ends[0]), f(a.ends[1])}, f(a.waist), {f(a.feet[0]), f(a.feet[1])}, Moebius()};
    d.norm = normalizer(d.ends, d.waist);
    domain.push_back(d);
  }

  // reduced letter words by length; tree letters generate freely
  const int r = m.pres.num_letters;
  std::vector<std::vector<std::pair<Moebius, int>>> levels{{{Moebius(), 0}}};
  auto grow = [&] {
    std::vector<std::pair<Moebius, int>> next;
    for (const auto& [g, last] : levels.back()) {
      for (int l = 1; l <= r; ++l) {
        for (int sgn : {1, -1}) {
          if (last == -sgn * l) continue;
          const Moebius& x = dev.letters[static_cast<std::size_t>(l - 1)];
          next.emplace_back(g * (sgn > 0 ? x : x.inverse()), sgn * l);
        }
      }
    }
    levels.push_back(std::move(next));
  };
  auto lifts_up_to = [&](std::size_t depth) {
    while (levels.size() <= depth) grow();
    std::vector<Lift> out_lifts;
    for (std::size_t d = 0; d <= depth; ++d) {
      for (const auto& [g, last] : levels[d]) {
        for (std::size_t a = 0; a < arcs.size(); ++a) out_lifts.push_back(Lift{static_cast<int>(a), g});
      }
    }
    return out_lifts;
  };

  // each domain arc against nearby lifts of every arc
  {
    std::vector<Segment> base_segs;
    for (const auto& d : domain) base_segs.push_back(Segment{d.ends, d.feet});
    for (const auto& l : lifts_up_to(4)) {
      const auto& d = domain[static_cast<std::size_t>(l.arc)];
      const Segment s{{l.g(d.ends[0]), l.g(d.ends[1])}, {l.g(d.feet[0]), l.g(d.feet[1])}};
      for (std::size_t i = 0; i < base_segs.size(); ++i) {
        if (segments_cross(base_segs[i], s)) {
          throw Error(ErrorCode::ArcsIntersect, "realized arcs " + std::to_string(i) + " and " + std::to_string(l.arc) + " cross");
        }
      }
    }
  }
  if (std::all_of(widths.begin(), widths.end(), [](double w) { return w == 0.0; })) {
    out.deformed = out.base;
    return out;
  }

  const H3Point x0{Complex(-0.45), 0.9};
  struct Crossing {
    double distance;
    Moebius translation;
  };
  auto separating = [&](const std::vector<Lift>& lifts, const Moebius& letter) {
    std::vector<Crossing> found;
    const H3Point y0 = letter(x0);
    for (const auto& l : lifts) {
      if (widths[static_cast<std::size_t>(l.arc)] == 0.0) continue;
      const auto& d = domain[static_cast<std::size_t>(l.arc)];
      const Moebius k = d.norm * l.g.inverse();
      const H3Point a = k(x0), b = k(y0);
      if ((a.z.real() < 0.0) == (b.z.real() < 0.0)) continue;
      const double ch = std::cosh(widths[static_cast<std::size_t>(l.arc)] / 2.0);
      const double sh = std::sinh(widths[static_cast<std::size_t>(l.arc)] / 2.0);
      const Moebius h = a.z.real() < 0.0 ? Moebius(ch, sh, sh, ch) : Moebius(ch, -sh, -sh, ch);
      found.push_back(Crossing{std::asinh(std::abs(a.z.real()) / a.t), k.inverse() * h * k});
    }
    std::sort(found.begin(), found.end(), [](const Crossing& p, const Crossing& q) { return p.distance < q.distance; });
    return found;
  };

  std::vector<std::vector<Crossing>> per_letter;
  std::size_t depth = 1;
  for (;; ++depth) {
    if (depth > 12) throw Error(ErrorCode::BudgetExceeded, "separating lifts did not stabilize");
    const auto a = lifts_up_to(depth), b = lifts_up_to(depth + 1);
    bool stable = true;
    std::vector<std::vector<Crossing>> cur;
    for (const auto& letter : dev.letters) {
      auto s1 = separating(a, letter);
      const auto s2 = separating(b, letter);
      stable = stable && s1.size() == s2.size();
      cur.push_back(std::move(s1));
    }
    if (stable) {
      per_letter = std::move(cur);
      break;
    }
  }
  std::vector<Moebius> letters;
  for (std::size_t l = 0; l < dev.letters.size(); ++l) {
    Moebius prefix;
    for (const auto& c : per_letter[l]) prefix = prefix * c.translation;
    letters.push_back(prefix * dev.letters[l]);
  }
  for (const auto& w : m.pres.generators) out.deformed.push_back(word::evaluate(w, letters));
  return out;
}

domination::DominationCertificate verify_strict_increase(const MarkedSurface& m, const std::vector<Moebius>& j,
                                                         const std::vector<Moebius>& j_t, int max_weight,
                                                         const domination::Options& opts) {
  const auto& P = m.pres;
  if (static_cast<int>(j.size()) != P.num_generators() || static_cast<int>(j_t.size()) != P.num_generators()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(P.num_generators()) + " generator images");
  }
  domination::DominationCertificate cert;
  cert.max_weight = max_weight;
  auto add = [&](const surface::NormalCurve& c, const moebius::Moebius& a, const moebius::Moebius& b) {
    const double la = moebius::translation_length(a), lb = moebius::translation_length(b);
    if (!(lb > 1e-12)) throw Error(ErrorCode::ZeroDenominator, "a curve has zero length after deformation");
    cert.reports.push_back(domination::CurveReport{c, la, lb, la / lb});
  };
  for (const auto& c : curves::enumerate_simple(m.tri, max_weight, opts.enumeration)) {
    const auto w = P.loop_generators(surface::trace_normal_curve(m.tri, c).front());
    add(c, word::evaluate(w, j), word::evaluate(w, j_t));
  }
  for (int p = 0; p < P.punctures; ++p) {
    const auto idx = static_cast<std::size_t>(P.peripheral_index(p));
    add(surface::link_curve(m.tri, p), j[idx], j_t[idx]);
  }
  for (const auto& r : cert.reports) {
    if (!cert.witness || r.ratio > cert.sup_ratio) {
      cert.sup_ratio = r.ratio;
      cert.witness = r.curve;
    }
  }
  if (cert.sup_ratio < 1.0 - 1e-9) {
    cert.verdict = domination::Verdict::strict;
  } else if (cert.sup_ratio <= 1.0 + 1e-9) {
    cert.verdict = domination::Verdict::non_strict;
  } else {
    cert.verdict = domination::Verdict::violated;
  }
  return cert;
}

}  // namespace fg::strip
