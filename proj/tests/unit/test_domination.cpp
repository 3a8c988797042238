#include "doctest.h"

#include "fg/domination.hpp"
#include "fg/error.hpp"
#include "fg/pleat.hpp"
#include "support.hpp"

using namespace fg;
using namespace fg::domination;
using moebius::Moebius;
using representation::FGCoordinates;
using representation::MarkedSurface;
using std::numbers::pi;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

FGCoordinates rotated(const FGCoordinates& x, double theta) {
  FGCoordinates y = x;
  for (auto& c : y.values) c *= std::polar(1.0, theta);
  return y;
}

}  // namespace

TEST_CASE("self-domination and bending") {
  const auto t = surface::standard_triangulation(1, 1);
  const FGCoordinates j{{1.4, 0.9, 1.2}};
  const auto self = dominate(t, j, j, 6);
  CHECK(self.verdict == Verdict::non_strict);
  CHECK(self.boundary_ok);
  for (const auto& r : self.reports) CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-10));

  const auto bent = dominate(t, rotated(j, pi / 3), j, 6);
  CHECK(bent.verdict == Verdict::strict);
  CHECK(bent.sup_ratio < 1.0);
  REQUIRE(bent.witness);
  for (const auto& r : bent.reports) {
    CHECK(r.ratio < 1.0);
    if (r.curve == *bent.witness) CHECK(r.ratio == bent.sup_ratio);
  }

  // boundary lengths of rho prescribed by its own links, j disagrees
  FGCoordinates off = rotated(j, pi / 3);
  off.values[0] *= 1.1;
  const auto violated = dominate(t, off, j, 6);
  CHECK_FALSE(violated.boundary_ok);
  CHECK(violated.verdict == Verdict::violated);

  // sup grows with the truncation
  double last = 0.0;
  for (int w = 2; w <= 8; w += 2) {
    const double s = dominate(t, rotated(j, 0.5), j, w).sup_ratio;
    CHECK(s >= last);
    last = s;
  }
  // the family j * e^{i theta}
  for (int i = 0; i < 10; ++i) {
    const double theta = 0.2 + i * (pi - 0.4) / 9;
    CHECK(dominate(t, rotated(j, theta), j, 6).sup_ratio < 1.0);
  }

  const auto one = dominate(t, j, j, 6, Options{1e-8, 1});
  const auto four = dominate(t, j, j, 6, Options{1e-8, 4});
  CHECK(one == four);

  // cusped j against a funnel rho
  CHECK(dominate(t, j, FGCoordinates{{1.0, 1.0, 1.0}}, 4).verdict == Verdict::violated);
}

TEST_CASE("filling case") {
  const MarkedSurface m(surface::standard_triangulation(1, 1));
  const double th = 0.7;
  const FGCoordinates x{{std::polar(2.0, th), std::polar(2.0, th), std::polar(0.25, -th)}};
  const auto rho = representation::holonomy_from_fg(m, x);
  const auto d = strict_dominator_filling(m, rho, 12);
  for (std::size_t e = 0; e < 3; ++e) CHECK(std::abs(d.j.values[e] - std::abs(x.values[e])) < 1e-8);
  CHECK(d.certificate.verdict == Verdict::strict);
  CHECK(d.certificate.boundary_ok);
  CHECK(d.certificate.sup_ratio < 1.0 - 1e-3);
  // regression value of the full pipeline
  CHECK(d.certificate.sup_ratio == doctest::Approx(0.9683703210885999).epsilon(1e-10));
  for (const auto& b : d.certificate.boundary_audit) CHECK(std::abs(b.l_j - b.l_rho) < 1e-8);

  const auto fuchsian = representation::holonomy_from_fg(m, FGCoordinates{{2.0, 2.0, 0.25}});
  CHECK(code_of([&] { strict_dominator_filling(m, fuchsian, 4); }) == ErrorCode::NotFilling);

  const MarkedSurface p(surface::standard_triangulation(0, 3));
  const Moebius c(1.0, 1.0, 0.0, 1.0);
  representation::FramedRepresentation deg;
  deg.generators = {c, c, (c * c).inverse()};
  deg.framing = {moebius::SpherePoint::infinity(), moebius::SpherePoint::infinity(), moebius::SpherePoint::infinity()};
  CHECK(code_of([&] { strict_dominator_filling(p, deg, 4); }) == ErrorCode::DegenerateInput);
}

TEST_CASE("trig gap") {
  CHECK(trig_gap(1.0, pi / 2, pi) == doctest::Approx(2.0).epsilon(1e-12));
  const double expect = 2.0 - std::acosh(std::cosh(1.0) * std::cosh(1.0) - std::sinh(1.0) * std::sinh(1.0) * std::cos(2 * pi / 3));
  CHECK(trig_gap(1.0, pi / 4, pi / 2) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(trig_gap(1.0, pi / 4, 1e-6) < 1e-6);
  CHECK(trig_gap(1.0, pi / 4, -pi / 2) == trig_gap(1.0, pi / 4, pi / 2));
  double last = 0.0;
  for (double L = 0.1; L < 5.0; L += 0.3) {
    const double c = trig_gap(L, 0.9, 1.1);
    CHECK(c > 0.0);
    CHECK(c >= last);
    last = c;
  }
  CHECK(code_of([] { trig_gap(1.0, pi / 4, 0.0); }) == ErrorCode::ZeroBend);
  CHECK(code_of([] { trig_gap(0.0, pi / 4, 1.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("crossing profile") {
  const auto t = surface::standard_triangulation(1, 1);
  const FGCoordinates x{{std::polar(2.0, 0.7), std::polar(2.0, 0.7), std::polar(0.25, -0.7)}};
  const surface::NormalCurve c{{1, 1, 0}};
  const auto p = crossing_profile(t, x, c);
  CHECK(p.crossings == 2);
  CHECK(p.period == doctest::Approx(curves::curve_length(t, pleat::straighten(x), c)).epsilon(1e-10));
  CHECK(p.min_angle > 0.0);
  CHECK(p.min_angle <= pi / 2);
  CHECK(p.min_bend == doctest::Approx(0.7).epsilon(1e-10));
  CHECK(p.min_segment > 0.0);
}

TEST_CASE("degenerate case a") {
  const auto d = degenerate_dominator_a(1, 1, 8);
  CHECK(d.j == FGCoordinates{{1.0, 1.0, 1.0}});
  CHECK(d.certificate.sup_ratio == 0.0);
  CHECK(d.certificate.verdict == Verdict::strict);
  for (const auto& r : d.certificate.reports) CHECK(r.ratio == 0.0);

  const auto p = degenerate_dominator_a(0, 3, 8);
  CHECK(p.certificate.reports.empty());
  CHECK(p.certificate.verdict == Verdict::strict);
  CHECK(p.certificate.boundary_audit.size() == 3);

  const auto g2 = degenerate_dominator_a(2, 1, 2);
  const MarkedSurface m(surface::standard_triangulation(2, 1));
  const auto rho = representation::holonomy_from_fg(m, g2.j);
  CHECK(representation::relation_residual(m.pres, rho.generators) < 1e-8);
  CHECK(representation::boundary_invariant(m.tri, g2.j, 0).length == 0.0);
  CHECK(g2.certificate.sup_ratio == 0.0);

  // unit-modulus diagonal images fix 0 and infinity with zero translation
  const Moebius u(std::polar(1.0, 0.4), 0.0, 0.0, std::polar(1.0, -0.4));
  const MarkedSurface s(surface::standard_triangulation(1, 1));
  std::vector<Moebius> gens{u, u, Moebius()};
  const auto with = degenerate_dominator_a(1, 1, 6, gens);
  CHECK(with.certificate.sup_ratio == 0.0);
}

TEST_CASE("co-axial stub") {
  const MarkedSurface s(surface::standard_triangulation(0, 3));
  const Moebius c1(std::exp(0.5), 0.0, 0.0, std::exp(-0.5)), c2(std::exp(-0.2), 0.0, 0.0, std::exp(0.2));
  const auto cert = coaxial_stub(s.pres, {c1, c2, (c1 * c2).inverse()});
  CHECK(cert.verdict == Verdict::unsupported_construction);
  REQUIRE(cert.coaxial_character.size() == 3);
  CHECK(cert.coaxial_character[0].m == doctest::Approx(1.0));
  CHECK(cert.coaxial_character[1].m == doctest::Approx(-0.4));
  const Moebius p(1.0, 1.0, 0.0, 1.0);
  CHECK(code_of([&] { coaxial_stub(s.pres, {c1, p, (c1 * p).inverse()}); }) == ErrorCode::NotCoaxial);
}
