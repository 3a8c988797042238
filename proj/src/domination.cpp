#include "fg/domination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "fg/error.hpp"
#include "fg/pleat.hpp"

namespace fg::domination {

using moebius::Moebius;
using moebius::SpherePoint;
using representation::FramedRepresentation;
using representation::MarkedSurface;
using surface::IdealTriangulation;
using surface::Side;

namespace {

constexpr double kStrictMargin = 1e-9;

const SpherePoint& standard_vertex(int i) {
  static const SpherePoint pts[3] = {SpherePoint::infinity(), SpherePoint(Complex(-1.0)),
                                     SpherePoint(Complex(0.0))};
  return pts[i];
}

// Runs f(i) for i in [0, n) on up to `jobs` threads; results are indexed, so
// the output does not depend on the thread count.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void seal(DominationCertificate& c, double tol) {
  c.sup_ratio = 0.0;
  c.witness.reset();
  for (const auto& r : c.reports) {
    if (!c.witness || r.ratio > c.sup_ratio) {
      c.sup_ratio = r.ratio;
      c.witness = r.curve;
    }
  }
  c.boundary_ok = std::all_of(c.boundary_audit.begin(), c.boundary_audit.end(), [&](const BoundaryAudit& b) {
    return std::abs(b.target - b.l_j) <= tol && std::abs(b.target - b.l_rho) <= tol;
  });
  if (!c.boundary_ok || c.sup_ratio > 1.0 + kStrictMargin) {
    c.verdict = Verdict::violated;
  } else if (c.sup_ratio < 1.0 - kStrictMargin) {
    c.verdict = Verdict::strict;
  } else {
    c.verdict = Verdict::non_strict;
  }
}

CurveReport report(const NormalCurve& c, double l_rho, double l_j) {
  if (!(l_j > 1e-12)) throw Error(ErrorCode::ZeroDenominator, "a curve has zero length in the dominating structure");
  return CurveReport{c, l_rho, l_j, l_rho == 0.0 ? 0.0 : l_rho / l_j};
}

void require_real_positive(const FGCoordinates& j) {
  for (const Complex& v : j.values) {
    if (v.imag() != 0.0 || !(v.real() > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "dominating coordinates must be real positive");
    }
  }
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::strict: return "strict";
    case Verdict::non_strict: return "non_strict";
    case Verdict::violated: return "violated";
    case Verdict::unsupported_construction: return "unsupported_construction";
  }
  return "?";
}

bool DominationCertificate::operator==(const DominationCertificate& o) const {
  auto same_reports = [](const std::vector<CurveReport>& a, const std::vector<CurveReport>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].curve != b[i].curve || a[i].l_rho != b[i].l_rho || a[i].l_j != b[i].l_j || a[i].ratio != b[i].ratio) {
        return false;
      }
    }
    return true;
  };
  auto same_audit = [](const std::vector<BoundaryAudit>& a, const std::vector<BoundaryAudit>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].target != b[i].target || a[i].l_j != b[i].l_j || a[i].l_rho != b[i].l_rho) return false;
    }
    return true;
  };
  auto same_character = [](const std::vector<representation::AxisMotion>& a,
                           const std::vector<representation::AxisMotion>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].m != b[i].m || a[i].eps != b[i].eps) return false;
    }
    return true;
  };
  return same_reports(reports, o.reports) && sup_ratio == o.sup_ratio && witness == o.witness &&
         same_audit(boundary_audit, o.boundary_audit) && boundary_ok == o.boundary_ok &&
         max_weight == o.max_weight && verdict == o.verdict && same_character(coaxial_character, o.coaxial_character);
}

DominationCertificate dominate(const IdealTriangulation& t, const FGCoordinates& rho, const FGCoordinates& j,
                               int max_weight, const Options& opts,
                               const std::optional<std::vector<double>>& targets) {
  representation::check_coordinates(rho, t.num_edges());
  representation::check_coordinates(j, t.num_edges());
  require_real_positive(j);
  if (targets && static_cast<int>(targets->size()) != t.punctures()) {
    throw Error(ErrorCode::InvalidArgument, "expected one target length per puncture");
  }
  DominationCertificate cert;
  cert.max_weight = max_weight;
  const auto list = curves::enumerate_simple(t, max_weight, opts.enumeration);
  cert.reports.resize(list.size());
  parallel_for(list.size(), opts.jobs, [&](std::size_t i) {
    cert.reports[i] = report(list[i], curves::curve_length(t, rho, list[i]), curves::curve_length(t, j, list[i]));
  });
  for (int p = 0; p < t.punctures(); ++p) {
    const auto link = surface::link_curve(t, p);
    BoundaryAudit b;
    b.target = targets ? (*targets)[static_cast<std::size_t>(p)] : representation::boundary_invariant(t, rho, p).length;
    b.l_j = representation::boundary_invariant(t, j, p).length;
    b.l_rho = curves::curve_length(t, rho, link);
    cert.boundary_audit.push_back(b);
  }
  seal(cert, opts.tolerance);
  return cert;
}

DominationCertificate dominate(const MarkedSurface& m, const FramedRepresentation& rho, const FGCoordinates& j,
                               int max_weight, const Options& opts) {
  return dominate(m.tri, representation::fg_from_framed(m, rho, opts.tolerance), j, max_weight, opts);
}

Dominator strict_dominator_filling(const MarkedSurface& m, const FramedRepresentation& rho_hat, int max_weight,
                                   const Options& opts) {
  const auto deg = representation::detect_degeneracy(m.pres, rho_hat.generators, opts.tolerance);
  if (deg.kind != representation::Degeneracy::nondegenerate) {
    throw Error(ErrorCode::DegenerateInput, std::string("representation is ") + std::string(to_string(deg.kind)));
  }
  const FGCoordinates x = representation::fg_from_framed(m, rho_hat, opts.tolerance);
  const auto bend = pleat::bending_data(m.tri, x);
  if (!bend.filling) {
    throw Error(ErrorCode::NotFilling, "bending support of " + std::to_string(bend.support.size()) +
                                           " edges does not fill");
  }
  Dominator out;
  out.j = pleat::straighten(x);
  out.certificate = dominate(m.tri, x, out.j, max_weight, opts);
  return out;
}

double trig_gap(double L, double alpha, double theta) {
  if (!(L > 0.0) || !std::isfinite(L)) throw Error(ErrorCode::InvalidArgument, "arm length must be positive");
  if (!(alpha > 0.0 && alpha <= std::numbers::pi / 2)) {
    throw Error(ErrorCode::InvalidArgument, "crossing angle must lie in (0, pi/2]");
  }
  if (theta == 0.0) throw Error(ErrorCode::ZeroBend, "bending angle is zero");
  if (!(std::abs(theta) <= std::numbers::pi)) throw Error(ErrorCode::InvalidArgument, "bending angle outside [-pi, pi]");
  const double beta = moebius::bend_angle_beta(alpha, std::abs(theta));
  return 2.0 * L - moebius::bent_endpoint_distance(L, L, beta);
}

CrossingProfile crossing_profile(const IdealTriangulation& t, const FGCoordinates& x, const NormalCurve& c) {
  const FGCoordinates flat = pleat::straighten(x);
  const auto comps = surface::trace_normal_curve(t, c);
  if (comps.size() != 1) throw Error(ErrorCode::DisconnectedCurve, "curve is not connected");
  const auto& w = comps.front();
  const Moebius g = curves::crossing_holonomy(t, flat, w);
  const auto fp = moebius::fixed_points(g);
  if (fp.size() != 2) throw Error(ErrorCode::InvalidArgument, "curve is not loxodromic in the straightening");

  // frames of the crossings over one period and one more
  std::vector<Moebius> frames{Moebius()};
  for (const auto& cr : w) {
    frames.push_back(frames.back() * representation::step_matrix(t, flat, Side{cr.entry.tri, surface::exit_side(cr)}));
  }
  SpherePoint third = frames[0](standard_vertex(0));
  for (int i = 0; i < 3; ++i) {
    const SpherePoint v = frames[0](standard_vertex(i));
    if (v.chordal_distance(fp[0]) > 1e-6 && v.chordal_distance(fp[1]) > 1e-6) third = v;
  }
  const Moebius a = moebius::from_triples(fp[0], fp[1], third, Complex(0.0), SpherePoint::infinity(), Complex(1.0));

  CrossingProfile out;
  out.crossings = static_cast<int>(w.size());
  out.min_angle = std::numbers::pi / 2;
  out.min_bend = std::numbers::pi;
  std::vector<double> pos;
  for (std::size_t k = 0; k <= w.size(); ++k) {
    const auto& cr = w[k % w.size()];
    const double p = a(frames[k](standard_vertex(cr.entry.side))).value().real();
    const double q = a(frames[k](standard_vertex((cr.entry.side + 1) % 3))).value().real();
    pos.push_back(0.5 * std::log(std::abs(p * q)));
    if (k < w.size()) {
      out.min_angle = std::min(out.min_angle, std::acos(std::min(1.0, std::abs(p + q) / std::abs(q - p))));
      out.min_bend = std::min(out.min_bend, std::abs(std::arg(x.values[static_cast<std::size_t>(cr.edge)])));
    }
  }
  out.min_segment = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < w.size(); ++k) out.min_segment = std::min(out.min_segment, std::abs(pos[k + 1] - pos[k]));
  out.period = std::abs(pos.back() - pos.front());
  return out;
}

Dominator degenerate_dominator_a(int genus, int punctures, int max_weight,
                                 const std::optional<std::vector<Moebius>>& generators, const Options& opts) {
  const auto t = surface::standard_triangulation(genus, punctures);
  Dominator out;
  out.j.values.assign(static_cast<std::size_t>(t.num_edges()), Complex(1.0));
  std::optional<MarkedSurface> m;
  if (generators) {
    m.emplace(t);
    const auto deg = representation::detect_degeneracy(m->pres, *generators, opts.tolerance);
    if (deg.kind != representation::Degeneracy::degenerate_a) {
      throw Error(ErrorCode::InvalidArgument, "representation is not of fixed-point type with cusps");
    }
  }
  auto rho_length = [&](const NormalCurve& c) {
    if (!m) return 0.0;
    const auto comps = surface::trace_normal_curve(t, c);
    return moebius::translation_length(word::evaluate(m->pres.loop_generators(comps.front()), *generators));
  };
  auto& cert = out.certificate;
  cert.max_weight = max_weight;
  const auto list = curves::enumerate_simple(t, max_weight, opts.enumeration);
  cert.reports.resize(list.size());
  parallel_for(list.size(), opts.jobs, [&](std::size_t i) {
    cert.reports[i] = report(list[i], rho_length(list[i]), curves::curve_length(t, out.j, list[i]));
  });
  for (int p = 0; p < punctures; ++p) {
    BoundaryAudit b;
    b.l_j = representation::boundary_invariant(t, out.j, p).length;
    b.l_rho = m ? moebius::translation_length(
                      (*generators)[static_cast<std::size_t>(m->pres.peripheral_index(p))])
                : 0.0;
    cert.boundary_audit.push_back(b);
  }
  seal(cert, opts.tolerance);
  return out;
}

DominationCertificate coaxial_stub(const presentation::Presentation& p, const std::vector<Moebius>& generators,
                                   double tol) {
  const auto deg = representation::detect_degeneracy(p, generators, tol);
  if (deg.kind != representation::Degeneracy::degenerate_coaxial) {
    throw Error(ErrorCode::NotCoaxial, "representation does not preserve a geodesic");
  }
  DominationCertificate c;
  c.coaxial_character = representation::coaxial_character(generators, *deg.axis, tol);
  c.verdict = Verdict::unsupported_construction;
  return c;
}

}  // namespace fg::domination
