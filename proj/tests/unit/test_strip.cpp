#include "doctest.h"

#include "fg/error.hpp"
#include "fg/strip.hpp"
#include "fg/word.hpp"
#include "support.hpp"

using namespace fg;
using namespace fg::strip;
using domination::Verdict;
using moebius::Moebius;
using representation::FGCoordinates;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// Boundary length 2: each edge is met twice around the link.
const FGCoordinates kJ{{std::exp(1.0 / 3), std::exp(1.0 / 3), std::exp(1.0 / 3)}};

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

struct Pair {
  MarkedSurface m{surface::standard_triangulation(1, 1)};
  std::vector<StripArc> arcs{realize_arc(m.tri, kJ, {0}), realize_arc(m.tri, kJ, {0, 1, 0})};
};

}  // namespace

TEST_CASE("perpendicular translation") {
  const std::array<moebius::SpherePoint, 2> ends{moebius::SpherePoint(Complex(-1.0)), moebius::SpherePoint(Complex(1.0))};
  const moebius::H3Point top{Complex(0.0), 1.0};
  for (double d : {0.1, 0.7, 2.0}) {
    const Moebius h = perpendicular_translation(ends, top, d, moebius::H3Point{Complex(0.0), 0.5});
    const auto q = h(top);
    CHECK(testing::h3_distance(top.z, top.t, q.z, q.t) == doctest::Approx(d).epsilon(1e-12));
    // moves up the imaginary axis, away from the point below
    CHECK(std::abs(q.z) < 1e-12);
    CHECK(q.t == doctest::Approx(std::exp(d)).epsilon(1e-12));
    CHECK(moebius::translation_length(h) == doctest::Approx(d).epsilon(1e-10));
    const auto down = perpendicular_translation(ends, top, d, moebius::H3Point{Complex(0.0), 2.0})(top);
    CHECK(down.t == doctest::Approx(std::exp(-d)).epsilon(1e-12));
  }
}

TEST_CASE("arc realization") {
  const auto t = surface::standard_triangulation(1, 1);
  const auto a = realize_arc(t, kJ, {0});
  CHECK(a.edges == std::vector<int>{0});
  // feet on the boundary axes, the waist between them on the arc
  const double span = moebius::h3_distance(a.feet[0], a.feet[1]);
  CHECK(span > 0.0);
  CHECK(waist_offset_of(a, a.waist) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(waist_offset_of(a, a.feet[1]) == doctest::Approx(span).epsilon(1e-9));
  // the waist lies on the realized geodesic: sent to the vertical axis
  const Moebius to_axis = moebius::from_triples(a.ends[0], a.ends[1], moebius::SpherePoint(Complex(0.0, 1.0)), Complex(0.0),
                                                moebius::SpherePoint::infinity(), Complex(1.0));
  CHECK(std::abs(to_axis(a.waist).z) < 1e-9 * to_axis(a.waist).t);
  const auto moved = realize_arc(t, kJ, {0}, 0.25);
  CHECK(std::abs(to_axis(moved.waist).z) < 1e-9 * to_axis(moved.waist).t);
  CHECK(waist_offset_of(a, moved.waist) == doctest::Approx(0.25).epsilon(1e-9));

  CHECK(code_of([&] { realize_arc(t, FGCoordinates{{1.0, 1.0, 1.0}}, {0}); }) == ErrorCode::CuspExit);
  CHECK(code_of([&] { realize_arc(t, kJ, {}); }) == ErrorCode::TangledPath);
  CHECK(code_of([&] { realize_arc(t, kJ, {5}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { realize_arc(t, FGCoordinates{{Complex(1.0, 1.0), 1.0, 1.0}}, {0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("zero width is the identity") {
  const Pair p;
  const auto d = strip_deform(p.m, kJ, p.arcs, {0.0, 0.0});
  REQUIRE(d.deformed.size() == d.base.size());
  for (std::size_t i = 0; i < d.base.size(); ++i) {
    CHECK(d.deformed[i].a() == d.base[i].a());
    CHECK(d.deformed[i].b() == d.base[i].b());
    CHECK(d.deformed[i].c() == d.base[i].c());
    CHECK(d.deformed[i].d() == d.base[i].d());
  }
  const auto cert = verify_strict_increase(p.m, d.base, d.deformed, 6);
  CHECK(cert.sup_ratio == 1.0);
  CHECK(cert.verdict == Verdict::non_strict);
}

TEST_CASE("filling pair lengthens every curve") {
  const Pair p;
  double last = 1.0;
  for (double w : {0.1, 0.3, 0.6}) {
    const auto d = strip_deform(p.m, kJ, p.arcs, {w, w});
    CHECK(representation::relation_residual(p.m.pres, d.deformed) <= 1e-12 * conditioning(p.m.pres, d.deformed));
    const auto cert = verify_strict_increase(p.m, d.base, d.deformed, 8);
    CHECK(cert.verdict == Verdict::strict);
    CHECK(cert.sup_ratio < last);
    last = cert.sup_ratio;
    // the boundary class is among the reports and gets longer
    const int peripheral = p.m.pres.peripheral_index(0);
    CHECK(moebius::translation_length(d.deformed[static_cast<std::size_t>(peripheral)]) >
          moebius::translation_length(d.base[static_cast<std::size_t>(peripheral)]));
  }
  CHECK(last < 0.9);
}

TEST_CASE("deformed generators are real and continuous in t") {
  const Pair p;
  const auto a = strip_deform(p.m, kJ, p.arcs, {0.3, 0.3});
  const auto b = strip_deform(p.m, kJ, p.arcs, {0.3 + 1e-5, 0.3 + 1e-5});
  const auto c = strip_deform(p.m, kJ, p.arcs, {0.3 + 1e-6, 0.3 + 1e-6});
  for (std::size_t i = 0; i < a.deformed.size(); ++i) {
    const Complex tr = a.deformed[i].a() + a.deformed[i].d();
    CHECK(std::abs(tr.imag()) <= 1e-12 * std::max(1.0, std::abs(tr)));
    // differences shrink with the step
    const double far = a.deformed[i].projective_distance(b.deformed[i]);
    const double near = a.deformed[i].projective_distance(c.deformed[i]);
    CHECK(near < 0.2 * far);
  }
}

TEST_CASE("one arc leaves disjoint curves alone") {
  const Pair p;
  const auto d = strip_deform(p.m, kJ, {p.arcs[0]}, {0.3});
  const auto cert = verify_strict_increase(p.m, d.base, d.deformed, 6);
  CHECK(cert.verdict == Verdict::non_strict);
  CHECK(cert.sup_ratio == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(cert.witness);
  // some curve crossing the arc gets longer
  bool longer = false;
  for (const auto& r : cert.reports) longer = longer || r.ratio < 1.0 - 1e-6;
  CHECK(longer);
  for (const auto& r : cert.reports) CHECK(r.ratio <= 1.0 + 1e-9);
}

TEST_CASE("strip errors") {
  const Pair p;
  const auto t = p.m.tri;
  const std::vector<StripArc> crossing{realize_arc(t, kJ, {0}), realize_arc(t, kJ, {1})};
  CHECK(code_of([&] { strip_deform(p.m, kJ, crossing, {0.1, 0.1}); }) == ErrorCode::ArcsIntersect);
  CHECK(code_of([&] { strip_deform(p.m, kJ, p.arcs, {0.1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { strip_deform(p.m, kJ, p.arcs, {0.1, -0.1}); }) == ErrorCode::InvalidArgument);
}
