#include "doctest.h"

#include <numeric>
#include <set>

#include "fg/curves.hpp"
#include "fg/error.hpp"
#include "support.hpp"

using namespace fg;
using namespace fg::curves;
using moebius::SpherePoint;
using representation::FGCoordinates;
using surface::NormalCurve;

namespace {

// Slopes p/q on the torus; the square sides and the diagonal are crossed
// |q|, |p| and |p+q| times.
std::set<std::vector<int>> farey_oracle(int w) {
  std::set<std::vector<int>> out;
  for (int p = -w; p <= w; ++p) {
    for (int q = 0; q <= w; ++q) {
      if (q == 0 && p != 1) continue;
      if (std::gcd(p, q) != 1) continue;
      if (std::max({std::abs(p), q, std::abs(p + q)}) > w) continue;
      out.insert({q, std::abs(p), std::abs(p + q)});
    }
  }
  return out;
}

surface::CrossingWord reversed(const surface::IdealTriangulation& t, const surface::CrossingWord& w) {
  surface::CrossingWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const surface::Side exit{it->entry.tri, surface::exit_side(*it)};
    r.push_back(surface::Crossing{exit, t.edge_of(exit),
                                  it->turn == surface::Turn::left ? surface::Turn::right : surface::Turn::left});
  }
  return r;
}

}  // namespace

TEST_CASE("enumeration against Farey slopes") {
  const auto t = surface::standard_triangulation(1, 1);
  const std::size_t expected[] = {0, 3, 6, 12, 18, 30, 36, 54, 66};
  for (int w = 0; w <= 8; ++w) {
    const auto got = enumerate_simple(t, w);
    std::set<std::vector<int>> as_set;
    for (const auto& c : got) as_set.insert(c.weights);
    const auto oracle = farey_oracle(w);
    CHECK(got.size() == oracle.size());
    CHECK(as_set == oracle);
    CHECK(oracle.size() == expected[w]);
    // graded lexicographic order
    for (std::size_t i = 1; i < got.size(); ++i) {
      const int a = std::accumulate(got[i - 1].weights.begin(), got[i - 1].weights.end(), 0);
      const int b = std::accumulate(got[i].weights.begin(), got[i].weights.end(), 0);
      CHECK((a < b || (a == b && got[i - 1].weights < got[i].weights)));
    }
  }
  for (int w : {0, 3, 8}) CHECK(enumerate_simple(surface::standard_triangulation(0, 3), w).empty());
  CHECK_THROWS_AS(enumerate_simple(t, 65), Error);
  CHECK_THROWS_AS(enumerate_simple(t, 12, EnumerationOptions{10}), Error);
}

TEST_CASE("enumerated curves are simple, essential, non-peripheral") {
  for (auto [g, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {0, 4}}) {
    const auto t = surface::standard_triangulation(g, k);
    for (const auto& c : enumerate_simple(t, 3)) {
      const auto comps = surface::trace_normal_curve(t, c);
      REQUIRE(comps.size() == 1);
      CHECK_FALSE(surface::is_peripheral(t, comps[0]));
    }
  }
}

TEST_CASE("curve holonomy") {
  const auto t = surface::standard_triangulation(1, 1);
  std::mt19937_64 rng(31);
  const auto x = testing::random_coordinates(rng, 3, true);
  for (const auto& c : enumerate_simple(t, 4)) {
    const auto w = surface::trace_normal_curve(t, c).front();
    const double l = moebius::translation_length(crossing_holonomy(t, x, w));
    CHECK(l == doctest::Approx(curve_length(t, x, c)).epsilon(1e-12));
    CHECK(moebius::translation_length(crossing_holonomy(t, x, reversed(t, w))) == doctest::Approx(l).epsilon(1e-12));
  }
  // relabelled triangles
  std::vector<surface::Gluing> g = t.gluing();
  for (auto& e : g) {
    e[0] = 1 - e[0];
    e[2] = 1 - e[2];
  }
  const auto u = surface::IdealTriangulation::build(1, 1, g);
  for (const auto& c : enumerate_simple(t, 4)) {
    const Complex a = curve_holonomy(t, x, c).trace_squared(), b = curve_holonomy(u, x, c).trace_squared();
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
  CHECK_THROWS_AS(curve_holonomy(t, x, NormalCurve{{2, 2, 0}}), Error);
}

TEST_CASE("geodesic distance and margins") {
  const std::array<SpherePoint, 2> unit{SpherePoint(Complex(-1.0)), SpherePoint(Complex(1.0))};
  for (double r : {1.5, 3.0, 10.0}) {
    const std::array<SpherePoint, 2> outer{SpherePoint(Complex(-r)), SpherePoint(Complex(r))};
    CHECK(geodesic_distance(unit, outer) == doctest::Approx(std::log(r)).epsilon(1e-12));
  }
  CHECK(geodesic_distance(unit, unit) == 0.0);
  const std::array<SpherePoint, 2> crossing{SpherePoint(Complex(0.0)), SpherePoint::infinity()};
  CHECK(geodesic_distance(unit, crossing) == 0.0);

  const auto t = surface::standard_triangulation(1, 1);
  const FGCoordinates ones{{1.0, 1.0, 1.0}};
  const double m = boundary_margin(t, ones, NormalCurve{{1, 1, 0}});
  CHECK(m > 0.0);
  double lowest = 1e9;
  for (int n = 1; n <= 6; ++n) lowest = std::min(lowest, boundary_margin(t, ones, NormalCurve{{n, 1, n + 1}}));
  CHECK(lowest > 0.0);
  const FGCoordinates funnel{{1.5, 1.5, 1.5}};
  CHECK(boundary_margin(t, funnel, NormalCurve{{1, 1, 0}}) > 0.0);
  CHECK_THROWS_AS(boundary_margin(t, FGCoordinates{{Complex(1.0, 1.0), 1.0, 1.0}}, NormalCurve{{1, 1, 0}}), Error);
}
