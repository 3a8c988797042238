#include "fg/pleat.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fg/error.hpp"

namespace fg::pleat {

using surface::IdealTriangulation;
using surface::Side;

namespace {

const SpherePoint& standard_vertex(int i) {
  static const SpherePoint pts[3] = {SpherePoint::infinity(), SpherePoint(Complex(-1.0)),
                                     SpherePoint(Complex(0.0))};
  return pts[i];
}

// det of homogeneous representatives
Complex bracket(const SpherePoint& p, const SpherePoint& q) { return p.x() * q.y() - p.y() * q.x(); }

}  // namespace

std::vector<Moebius> develop_frames(const IdealTriangulation& t, const FGCoordinates& x, const std::vector<int>& path) {
  representation::check_coordinates(x, t.num_edges());
  std::vector<Moebius> frames{Moebius()};
  int tri = 0;
  for (int s : path) {
    if (s < 0 || s > 2) throw Error(ErrorCode::InvalidArgument, "path step must be a side 0..2");
    const Side side{tri, s};
    frames.push_back(frames.back() * representation::step_matrix(t, x, side));
    tri = t.partner(side).tri;
  }
  return frames;
}

std::vector<DevelopedTriangle> develop(const IdealTriangulation& t, const FGCoordinates& x,
                                       const std::vector<int>& path) {
  const auto frames = develop_frames(t, x, path);
  std::vector<DevelopedTriangle> out;
  int tri = 0;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    DevelopedTriangle d{tri, {}};
    for (int i = 0; i < 3; ++i) d.vertices[static_cast<std::size_t>(i)] = frames[k](standard_vertex(i));
    for (int i = 0; i < 3; ++i) {
      if (d.vertices[static_cast<std::size_t>(i)].chordal_distance(d.vertices[static_cast<std::size_t>((i + 1) % 3)]) <
          1e-12) {
        throw Error(ErrorCode::DegenerateCoordinate, "developed vertices collide at step " + std::to_string(k));
      }
    }
    out.push_back(d);
    if (k < path.size()) tri = t.partner(Side{tri, path[k]}).tri;
  }
  return out;
}

double dihedral_angle(const DevelopedTriangle& a, const DevelopedTriangle& b) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& p = a.vertices[static_cast<std::size_t>(i)];
      const auto& q = a.vertices[static_cast<std::size_t>((i + 1) % 3)];
      const auto& r = a.vertices[static_cast<std::size_t>((i + 2) % 3)];
      const auto& bq = b.vertices[static_cast<std::size_t>(j)];
      const auto& bp = b.vertices[static_cast<std::size_t>((j + 1) % 3)];
      const auto& s = b.vertices[static_cast<std::size_t>((j + 2) % 3)];
      if (p.chordal_distance(bp) < 1e-9 && q.chordal_distance(bq) < 1e-9) {
        return std::abs(std::arg(moebius::cross_ratio(p, s, q, r)));
      }
    }
  }
  throw Error(ErrorCode::InvalidArgument, "triangles share no edge");
}

bool is_filling(const IdealTriangulation& t, const std::vector<int>& support) {
  std::vector<char> cut(static_cast<std::size_t>(t.num_edges()), 0);
  for (int e : support) cut[static_cast<std::size_t>(e)] = 1;
  // union-find over triangles; a cycle in an uncut piece means a non-disk
  std::vector<int> parent(static_cast<std::size_t>(t.num_triangles()));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (int e = 0; e < t.num_edges(); ++e) {
    if (cut[static_cast<std::size_t>(e)]) continue;
    const auto [a, b] = t.edge_sides(e);
    const int ra = find(a.tri), rb = find(b.tri);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return true;
}

PleatingData bending_data(const IdealTriangulation& t, const FGCoordinates& x) {
  representation::check_coordinates(x, t.num_edges());
  PleatingData d;
  for (int e = 0; e < t.num_edges(); ++e) {
    const Complex c = x.values[static_cast<std::size_t>(e)];
    d.shear.push_back(std::log(std::abs(c)));
    double a = std::arg(c);
    if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    d.angle.push_back(a);
    if (std::abs(a) > 1e-9) d.support.push_back(e);
  }
  d.filling = is_filling(t, d.support);
  return d;
}

FGCoordinates straighten(const FGCoordinates& x) {
  FGCoordinates out;
  for (const Complex& c : x.values) out.values.emplace_back(std::abs(c), 0.0);
  return out;
}

FGCoordinates flip_coordinates(const IdealTriangulation& t, const FGCoordinates& x, int edge) {
  representation::check_coordinates(x, t.num_edges());
  const auto [a, b] = t.edge_sides(edge);
  if (a.tri == b.tri) throw Error(ErrorCode::SelfGluedEdge, "edge " + std::to_string(edge) + " is self-glued");
  // quadrilateral in the frame of a.tri: A, B span the edge, C and D are the apexes
  const SpherePoint A = standard_vertex(a.side);
  const SpherePoint B = standard_vertex((a.side + 1) % 3);
  const SpherePoint C = standard_vertex((a.side + 2) % 3);
  const SpherePoint D = representation::step_matrix(t, x, a)(standard_vertex((b.side + 2) % 3));

  // Changing the vertex opposite a side (p, q) from r to r2 multiplies the
  // coordinate seen from that side by this factor, whatever lies across it.
  auto factor = [](const SpherePoint& p, const SpherePoint& q, const SpherePoint& r, const SpherePoint& r2) {
    return bracket(q, r2) * bracket(p, r) / (bracket(p, r2) * bracket(q, r));
  };
  FGCoordinates out = x;
  auto scale = [&](Side s, Complex f) { out.values[static_cast<std::size_t>(t.edge_of(s))] *= f; };
  scale(Side{a.tri, (a.side + 2) % 3}, factor(C, A, B, D));
  scale(Side{a.tri, (a.side + 1) % 3}, factor(B, C, A, D));
  scale(Side{b.tri, (b.side + 1) % 3}, factor(A, D, B, C));
  scale(Side{b.tri, (b.side + 2) % 3}, factor(D, B, A, C));
  // new diagonal: side (D, C) of the triangle (C, A, D), far vertex B
  out.values[static_cast<std::size_t>(edge)] = moebius::cross_ratio(D, B, C, A);
  return out;
}

}  // namespace fg::pleat
