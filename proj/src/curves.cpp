#include "fg/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fg/error.hpp"

namespace fg::curves {

using moebius::SpherePoint;
using surface::Corner;
using surface::CrossingWord;
using surface::IdealTriangulation;
using surface::Side;

namespace {

const SpherePoint& standard_vertex(int i) {
  static const SpherePoint pts[3] = {SpherePoint::infinity(), SpherePoint(Complex(-1.0)),
                                     SpherePoint(Complex(0.0))};
  return pts[i];
}

Complex bracket(const SpherePoint& p, const SpherePoint& q) { return p.x() * q.y() - p.y() * q.x(); }

surface::CrossingWord single_component(const IdealTriangulation& t, const NormalCurve& c) {
  auto comps = surface::trace_normal_curve(t, c);
  if (comps.size() != 1) {
    throw Error(ErrorCode::DisconnectedCurve, "curve has " + std::to_string(comps.size()) + " components");
  }
  return std::move(comps.front());
}

}  // namespace

std::vector<NormalCurve> enumerate_simple(const IdealTriangulation& t, int max_weight, EnumerationOptions opts) {
  if (max_weight > 64) throw Error(ErrorCode::InvalidArgument, "max_weight above 64");
  std::vector<NormalCurve> out;
  if (max_weight <= 0) return out;
  const int n_edges = t.num_edges();
  const int n_tri = t.num_triangles();

  // Visit edges so that triangles complete as early as possible.
  std::vector<int> order, position(static_cast<std::size_t>(n_edges), -1);
  for (int tri = 0; tri < n_tri; ++tri) {
    for (int s = 0; s < 3; ++s) {
      const int e = t.edge_of(Side{tri, s});
      if (position[static_cast<std::size_t>(e)] < 0) {
        position[static_cast<std::size_t>(e)] = static_cast<int>(order.size());
        order.push_back(e);
      }
    }
  }
  // triangles to check once the edge at a given depth is set
  std::vector<std::vector<int>> completes(static_cast<std::size_t>(n_edges));
  for (int tri = 0; tri < n_tri; ++tri) {
    int last = 0;
    for (int s = 0; s < 3; ++s) last = std::max(last, position[static_cast<std::size_t>(t.edge_of(Side{tri, s}))]);
    completes[static_cast<std::size_t>(last)].push_back(tri);
  }

  const FGCoordinates reference{std::vector<Complex>(static_cast<std::size_t>(n_edges), Complex(1.0))};
  NormalCurve cur{std::vector<int>(static_cast<std::size_t>(n_edges), 0)};
  std::size_t examined = 0;

  auto triangle_ok = [&](int tri) {
    const int a = cur.weights[static_cast<std::size_t>(t.edge_of(Side{tri, 0}))];
    const int b = cur.weights[static_cast<std::size_t>(t.edge_of(Side{tri, 1}))];
    const int c = cur.weights[static_cast<std::size_t>(t.edge_of(Side{tri, 2}))];
    return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
  };
  auto accept = [&] {
    if (std::all_of(cur.weights.begin(), cur.weights.end(), [](int w) { return w == 0; })) return;
    if (++examined > opts.cap) {
      throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(opts.cap) + " admissible vectors");
    }
    const auto comps = surface::trace_normal_curve(t, cur);
    if (comps.size() != 1 || surface::is_peripheral(t, comps.front())) return;
    const Moebius h = crossing_holonomy(t, reference, comps.front());
    if (moebius::classify(h) != moebius::IsometryClass::loxodromic) return;
    out.push_back(cur);
  };
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == n_edges) {
      accept();
      return;
    }
    const int e = order[static_cast<std::size_t>(depth)];
    for (int w = 0; w <= max_weight; ++w) {
      cur.weights[static_cast<std::size_t>(e)] = w;
      bool ok = true;
      for (int tri : completes[static_cast<std::size_t>(depth)]) ok = ok && triangle_ok(tri);
      if (ok) self(self, depth + 1);
    }
    cur.weights[static_cast<std::size_t>(e)] = 0;
  };
  dfs(dfs, 0);

  auto total = [](const NormalCurve& c) { return std::accumulate(c.weights.begin(), c.weights.end(), 0); };
  std::sort(out.begin(), out.end(), [&](const NormalCurve& a, const NormalCurve& b) {
    const int ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return a.weights < b.weights;
  });
  return out;
}

Moebius crossing_holonomy(const IdealTriangulation& t, const FGCoordinates& x, const CrossingWord& w) {
  Moebius m;
  for (const auto& c : w) m = m * representation::step_matrix(t, x, Side{c.entry.tri, surface::exit_side(c)});
  return m;
}

Moebius curve_holonomy(const IdealTriangulation& t, const FGCoordinates& x, const NormalCurve& c) {
  representation::check_coordinates(x, t.num_edges());
  return crossing_holonomy(t, x, single_component(t, c));
}

Moebius corner_holonomy(const IdealTriangulation& t, const FGCoordinates& x, Corner c) {
  Moebius m;
  Corner k = c;
  do {
    m = m * representation::step_matrix(t, x, Side{k.tri, (k.corner + 2) % 3});
    k = t.next_in_link(k);
  } while (k != c);
  return m;
}

double curve_length(const IdealTriangulation& t, const FGCoordinates& x, const NormalCurve& c) {
  return moebius::translation_length(curve_holonomy(t, x, c));
}

double geodesic_distance(const std::array<SpherePoint, 2>& g, const std::array<SpherePoint, 2>& h) {
  const Complex ac = bracket(g[0], h[0]), bd = bracket(g[1], h[1]);
  const Complex ad = bracket(g[0], h[1]), bc = bracket(g[1], h[0]);
  if (std::abs(ac * bd) < 1e-14 || std::abs(ad * bc) < 1e-14) return 0.0;  // common endpoint
  const double r = (ac * bd / (ad * bc)).real();
  if (r <= 0.0) return 0.0;  // linked
  return 2.0 * std::atanh(std::sqrt(std::min(r, 1.0 / r)));
}

double boundary_margin(const IdealTriangulation& t, const FGCoordinates& x, const NormalCurve& c) {
  representation::check_coordinates(x, t.num_edges());
  for (const Complex& v : x.values) {
    if (v.real() <= 0.0 || v.imag() != 0.0) {
      throw Error(ErrorCode::InvalidArgument, "boundary_margin needs real positive coordinates");
    }
  }
  const CrossingWord w = single_component(t, c);
  if (surface::is_peripheral(t, w)) throw Error(ErrorCode::InvalidArgument, "curve is peripheral");
  const Moebius g = crossing_holonomy(t, x, w);
  const auto fp = moebius::fixed_points(g);
  if (fp.size() != 2) throw Error(ErrorCode::InvalidArgument, "curve holonomy is not loxodromic");
  const std::array<SpherePoint, 2> axis{fp[0], fp[1]};

  double margin = std::numeric_limits<double>::infinity();
  Moebius frame;
  for (const auto& cr : w) {
    const int tri = cr.entry.tri;
    for (int i = 0; i < 3; ++i) {
      const Moebius h = frame * corner_holonomy(t, x, Corner{tri, i}) * frame.inverse();
      const SpherePoint v = frame(standard_vertex(i));
      if (moebius::classify(h) == moebius::IsometryClass::loxodromic) {
        const auto hp = moebius::fixed_points(h);
        margin = std::min(margin, geodesic_distance(axis, {hp[0], hp[1]}));
      } else {
        // send the cusp to infinity and the axis to (0, 1)
        const Moebius a = moebius::from_triples(v, axis[0], axis[1], SpherePoint::infinity(), Complex(0.0),
                                                Complex(1.0));
        const Moebius hn = a * h * a.inverse();
        const double tau = std::abs(hn(SpherePoint(Complex(0.0))).value());
        const double height = tau / 2.0;
        margin = std::min(margin, std::max(0.0, std::log(2.0 * height)));
      }
    }
    frame = frame * representation::step_matrix(t, x, Side{tri, surface::exit_side(cr)});
  }
  return margin;
}

}  // namespace fg::curves
