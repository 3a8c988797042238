#include "doctest.h"

#include "fg/curves.hpp"
#include "fg/error.hpp"
#include "fg/representation.hpp"
#include "fg/word.hpp"
#include "support.hpp"

using namespace fg;
using namespace fg::representation;
using moebius::Moebius;
using moebius::SpherePoint;
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

FGCoordinates constant(int edges, Complex v) { return FGCoordinates{std::vector<Complex>(static_cast<std::size_t>(edges), v)}; }

double coordinate_error(const FGCoordinates& a, const FGCoordinates& b) {
  double worst = 0.0;
  for (std::size_t e = 0; e < a.values.size(); ++e) worst = std::max(worst, std::abs(a.values[e] - b.values[e]));
  return worst;
}

// Product over the relation's letters of max(1, |g|_F / sqrt 2).
double conditioning(const presentation::Presentation& p, const std::vector<Moebius>& g) {
  double k = 1.0;
  const word::Word r = p.relation();
  for (int l : r.letters()) {
    const Moebius& m = g[static_cast<std::size_t>(std::abs(l) - 1)];
    const double f = std::sqrt(std::norm(m.a()) + std::norm(m.b()) + std::norm(m.c()) + std::norm(m.d()));
    k *= std::max(1.0, f / std::sqrt(2.0));
  }
  return k;
}

}  // namespace

TEST_CASE("modular torus") {
  const MarkedSurface m(surface::standard_triangulation(1, 1));
  const auto rho = holonomy_from_fg(m, constant(3, 1.0));
  const auto& c = rho.generators[2];
  CHECK(std::abs(c.trace_squared() - 4.0) < 1e-12);
  CHECK(moebius::classify(c) == moebius::IsometryClass::parabolic);
  CHECK(moebius::translation_length(c) == 0.0);
  // the square sides are the (1,0) and (0,1) slopes, trace 3
  for (int i = 0; i < 2; ++i) CHECK(std::abs(rho.generators[static_cast<std::size_t>(i)].trace_squared() - 9.0) < 1e-12);
  CHECK(curves::curve_length(m.tri, constant(3, 1.0), surface::NormalCurve{{1, 1, 0}}) ==
        doctest::Approx(2 * std::acosh(1.5)).epsilon(1e-12));

  const auto back = fg_from_framed(m, rho);
  CHECK(coordinate_error(back, constant(3, 1.0)) < 1e-10);
  CHECK(detect_degeneracy(m.pres, rho.generators).kind == Degeneracy::nondegenerate);
}

TEST_CASE("peripheral lengths") {
  const MarkedSurface m(surface::standard_triangulation(1, 1));
  const auto e = constant(3, std::exp(1.0));
  CHECK(moebius::translation_length(holonomy_from_fg(m, e).generators[2]) == doctest::Approx(6.0).epsilon(1e-12));
  // each edge is met twice around the single link
  CHECK(link_log_sum(m.tri, e, 0) == doctest::Approx(6.0));
  CHECK(boundary_invariant(m.tri, e, 0).length == doctest::Approx(6.0));

  const auto third = constant(3, std::exp(0.5));
  const auto b = boundary_invariant(m.tri, third, 0);
  CHECK(b.length == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(b.cls == moebius::IsometryClass::loxodromic);

  CHECK(boundary_invariant(m.tri, constant(3, 1.0), 0).length == 0.0);
  CHECK(boundary_invariant(m.tri, constant(3, 1.0), 0).cls == moebius::IsometryClass::parabolic);

  // moduli 1, arguments summing to pi around the link
  const auto rot = constant(3, std::polar(1.0, pi / 6));
  const auto r = boundary_invariant(m.tri, rot, 0);
  CHECK(r.length == 0.0);
  CHECK(r.cls == moebius::IsometryClass::elliptic);
  const Complex tr2 = holonomy_from_fg(m, rot).generators[2].trace_squared();
  CHECK(std::abs(tr2.imag()) < 1e-10);
  CHECK(tr2.real() >= 0.0);
  CHECK(tr2.real() < 4.0);

  std::mt19937_64 rng(11);
  for (auto [g, k] : std::vector<std::pair<int, int>>{{1, 1}, {0, 3}, {1, 2}, {2, 1}}) {
    const MarkedSurface s(surface::standard_triangulation(g, k));
    for (int i = 0; i < 5; ++i) {
      const auto x = testing::random_coordinates(rng, s.tri.num_edges(), true);
      const auto rho = holonomy_from_fg(s, x);
      for (int p = 0; p < k; ++p) {
        const double l = moebius::translation_length(rho.generators[static_cast<std::size_t>(s.pres.peripheral_index(p))]);
        CHECK(std::abs(l - boundary_invariant(s.tri, x, p).length) <= 1e-8);
        CHECK(std::abs(std::abs(link_log_sum(s.tri, x, p)) - boundary_invariant(s.tri, x, p).length) <= 1e-12);
      }
    }
  }
}

TEST_CASE("round trip and relation") {
  std::mt19937_64 rng(12);
  for (auto [g, k] : std::vector<std::pair<int, int>>{{1, 1}, {0, 3}, {1, 2}, {2, 1}}) {
    const MarkedSurface s(surface::standard_triangulation(g, k));
    for (int i = 0; i < 10; ++i) {
      const auto x = testing::random_coordinates(rng, s.tri.num_edges(), true);
      const auto rho = holonomy_from_fg(s, x);
      CHECK(relation_residual(s.pres, rho.generators) <= 1e-12 * conditioning(s.pres, rho.generators));
      CHECK(framing_residual(s.pres, rho) < 1e-9);
      CHECK(coordinate_error(fg_from_framed(s, rho), x) < 1e-8);
      // any conjugate gives the same coordinates
      const Moebius h = testing::random_moebius(rng);
      FramedRepresentation moved;
      for (const auto& a : rho.generators) moved.generators.push_back(h * a * h.inverse());
      for (const auto& p : rho.framing) moved.framing.push_back(h(p));
      CHECK(coordinate_error(fg_from_framed(s, moved), x) < 1e-7);
    }
  }
  const MarkedSurface s11(surface::standard_triangulation(1, 1));
  const auto x = testing::random_coordinates(rng, 3, true);
  CHECK(relation_residual(s11.pres, holonomy_from_fg(s11, x).generators) < 1e-10);
  const auto retried = fg_from_framed_with_flips(s11.tri, holonomy_from_fg(s11, x));
  CHECK(retried.flips == 0);
  CHECK(coordinate_error(retried.coords, x) < 1e-8);
}

TEST_CASE("degenerate framing") {
  const MarkedSurface s(surface::standard_triangulation(0, 3));
  // parabolics sharing the fixed point infinity
  const Moebius c1(1.0, 1.0, 0.0, 1.0), c2(1.0, 1.0, 0.0, 1.0);
  FramedRepresentation rho;
  rho.generators = {c1, c2, (c1 * c2).inverse()};
  rho.framing = {SpherePoint::infinity(), SpherePoint::infinity(), SpherePoint::infinity()};
  REQUIRE(relation_residual(s.pres, rho.generators) < 1e-14);
  CHECK(code_of([&] { fg_from_framed(s, rho); }) == ErrorCode::NonGenericFraming);
  CHECK(detect_degeneracy(s.pres, rho.generators).kind == Degeneracy::degenerate_a);
  CHECK(code_of([&] { frame_from_representation(s.pres, rho.generators); }) == ErrorCode::DegenerateInput);
}

TEST_CASE("framing rule") {
  const MarkedSurface s(surface::standard_triangulation(0, 3));
  const Moebius c1(2.0, 0.0, 0.0, 0.5);
  const Moebius c2(0.0, 1.0, -1.0, 2.0);  // parabolic fixing 1
  const auto rho = frame_from_representation(s.pres, {c1, c2, (c1 * c2).inverse()});
  CHECK(rho.framing[0].chordal_distance(Complex(0.0)) < 1e-12);
  CHECK(rho.framing[1].chordal_distance(Complex(1.0)) < 1e-7);

  const MarkedSurface t(surface::standard_triangulation(1, 1));
  const auto modular = holonomy_from_fg(t, constant(3, 1.0));
  const auto framed = frame_from_representation(t.pres, modular.generators);
  CHECK(framed.framing[0].chordal_distance(modular.framing[0]) < 1e-7);
}

TEST_CASE("co-axial character") {
  const std::array<SpherePoint, 2> axis{SpherePoint(Complex(0.0)), SpherePoint::infinity()};
  const Moebius d(std::exp(1.0), 0.0, 0.0, std::exp(-1.0));
  const Moebius swap(0.0, 1.0, -1.0, 0.0);
  const auto md = axis_motion(d, axis);
  CHECK(md.m == doctest::Approx(2.0));
  CHECK(md.eps == 1);
  const auto ms = axis_motion(swap, axis);
  CHECK(ms.m == doctest::Approx(0.0));
  CHECK(ms.eps == -1);
  // x -> -(x + 2) and x -> -x + 2
  const auto sd = axis_motion(swap * d, axis), ds = axis_motion(d * swap, axis);
  CHECK(std::abs(sd.m) == doctest::Approx(2.0));
  CHECK(sd.m == doctest::Approx(-ds.m));
  CHECK(sd.m == doctest::Approx(compose(ms, md).m));
  CHECK(ds.m == doctest::Approx(compose(md, ms).m));

  const MarkedSurface s(surface::standard_triangulation(0, 3));
  const Moebius c1(std::exp(0.5), 0.0, 0.0, std::exp(-0.5)), c2(std::exp(-0.2), 0.0, 0.0, std::exp(0.2));
  const auto cls = detect_degeneracy(s.pres, {c1, c2, (c1 * c2).inverse()});
  CHECK(cls.kind == Degeneracy::degenerate_coaxial);
  REQUIRE(cls.axis);
  CHECK(code_of([&] { axis_motion(Moebius(1.0, 1.0, 0.0, 1.0), axis); }) == ErrorCode::NotCoaxial);
}
