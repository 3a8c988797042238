#include "fg/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "fg/error.hpp"

namespace fg::surface {

namespace {

std::string side_str(Side s) {
  return "(" + std::to_string(s.tri) + "," + std::to_string(s.side) + ")";
}

}  // namespace

IdealTriangulation IdealTriangulation::build(int genus, int punctures, std::vector<Gluing> gluing) {
  if (genus < 0 || punctures < 1) {
    throw Error(ErrorCode::InvalidArgument, "genus must be >= 0 and punctures >= 1");
  }
  if (2 - 2 * genus - punctures >= 0) {
    throw Error(ErrorCode::NonNegativeEuler,
                "Euler characteristic 2-2g-k must be negative, got " +
                    std::to_string(2 - 2 * genus - punctures));
  }
  int max_tri = -1;
  for (const auto& g : gluing) {
    for (int k : {0, 2}) {
      if (g[k] < 0 || g[k + 1] < 0 || g[k + 1] > 2) {
        throw Error(ErrorCode::UnpairedSide, "invalid side in gluing table");
      }
      max_tri = std::max(max_tri, g[k]);
    }
  }
  const int n = max_tri + 1;
  IdealTriangulation t;
  t.genus_ = genus;
  t.punctures_ = punctures;
  t.partner_.assign(static_cast<std::size_t>(3 * n), Side{-1, -1});
  t.side_edge_.assign(static_cast<std::size_t>(3 * n), -1);
  for (std::size_t e = 0; e < gluing.size(); ++e) {
    const Side a{gluing[e][0], gluing[e][1]}, b{gluing[e][2], gluing[e][3]};
    if (a == b) throw Error(ErrorCode::UnpairedSide, "side " + side_str(a) + " glued to itself");
    for (Side s : {a, b}) {
      if (t.side_edge_[index(s)] != -1) {
        throw Error(ErrorCode::UnpairedSide, "side " + side_str(s) + " paired more than once");
      }
      t.side_edge_[index(s)] = static_cast<int>(e);
    }
    t.partner_[index(a)] = b;
    t.partner_[index(b)] = a;
  }
  for (int i = 0; i < 3 * n; ++i) {
    if (t.side_edge_[static_cast<std::size_t>(i)] == -1) {
      throw Error(ErrorCode::UnpairedSide, "side " + side_str({i / 3, i % 3}) + " is unpaired");
    }
  }
  if (n != 4 * genus - 4 + 2 * punctures) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(4 * genus - 4 + 2 * punctures) + " triangles, got " +
                    std::to_string(n));
  }
  t.gluing_ = std::move(gluing);

  t.corner_puncture_.assign(static_cast<std::size_t>(3 * n), -1);
  for (int tri = 0; tri < n; ++tri) {
    for (int i = 0; i < 3; ++i) {
      if (t.corner_puncture_[index(Corner{tri, i})] != -1) continue;
      const int p = static_cast<int>(t.links_.size());
      std::vector<Corner> link;
      Corner c{tri, i};
      do {
        t.corner_puncture_[index(c)] = p;
        link.push_back(c);
        c = t.next_in_link(c);
      } while (c != Corner{tri, i});
      t.links_.push_back(std::move(link));
    }
  }
  if (static_cast<int>(t.links_.size()) != punctures) {
    throw Error(ErrorCode::WrongPunctureCount, "gluing has " + std::to_string(t.links_.size()) +
                                                   " puncture links, expected " +
                                                   std::to_string(punctures));
  }
  return t;
}

std::array<Side, 2> IdealTriangulation::edge_sides(int e) const {
  const auto& g = gluing_.at(static_cast<std::size_t>(e));
  return {Side{g[0], g[1]}, Side{g[2], g[3]}};
}

Corner IdealTriangulation::next_in_link(Corner c) const {
  const Side p = partner(Side{c.tri, (c.corner + 2) % 3});
  return {p.tri, p.side};
}

IdealTriangulation standard_triangulation(int genus, int punctures) {
  if (genus < 0 || punctures < 1 || 2 - 2 * genus - punctures >= 0) {
    throw Error(ErrorCode::NonNegativeEuler, "no ideal triangulation for this (g, k)");
  }
  std::vector<Gluing> gluing;
  int tris = 0;
  int have = 0;
  if (genus == 0) {
    gluing = {{0, 0, 1, 2}, {0, 1, 1, 1}, {0, 2, 1, 0}};
    tris = 2;
    have = 3;
  } else {
    // Polygon side j lives in fan triangle poly_side(j).
    const int m = 4 * genus;
    auto poly_side = [m](int j) -> std::array<int, 2> {
      if (j == 0) return {0, 0};
      if (j == m - 1) return {m - 3, 2};
      return {j - 1, 1};
    };
    for (int b = 0; b < genus; ++b) {
      for (int j : {4 * b, 4 * b + 1}) {
        const auto s = poly_side(j), s2 = poly_side(j + 2);
        gluing.push_back({s[0], s[1], s2[0], s2[1]});
      }
    }
    for (int i = 0; i + 1 < m - 2; ++i) gluing.push_back({i, 2, i + 1, 0});
    tris = m - 2;
    have = 1;
  }
  while (have < punctures) {
    const int t1 = tris, t2 = tris + 1;
    for (auto& g : gluing) {
      for (int k : {0, 2}) {
        if (g[k] == 0 && g[k + 1] == 1) g = (k == 0) ? Gluing{t1, 0, g[2], g[3]} : Gluing{g[0], g[1], t1, 0};
        else if (g[k] == 0 && g[k + 1] == 2) g = (k == 0) ? Gluing{t2, 0, g[2], g[3]} : Gluing{g[0], g[1], t2, 0};
      }
    }
    gluing.push_back({0, 1, t1, 2});
    gluing.push_back({t1, 1, t2, 2});
    gluing.push_back({t2, 1, 0, 2});
    tris += 2;
    ++have;
  }
  return IdealTriangulation::build(genus, punctures, std::move(gluing));
}

IdealTriangulation flip(const IdealTriangulation& tr, int edge) {
  if (edge < 0 || edge >= tr.num_edges()) throw Error(ErrorCode::InvalidArgument, "edge out of range");
  const auto [a, b] = tr.edge_sides(edge);
  if (a.tri == b.tri) {
    throw Error(ErrorCode::SelfGluedEdge, "edge " + std::to_string(edge) + " has both sides in triangle " +
                                              std::to_string(a.tri));
  }
  const int t = a.tri, s = a.side, u = b.tri, v = b.side;
  std::map<Side, Side> remap{
      {Side{t, (s + 2) % 3}, Side{t, 0}},
      {Side{u, (v + 1) % 3}, Side{t, 1}},
      {Side{u, (v + 2) % 3}, Side{u, 0}},
      {Side{t, (s + 1) % 3}, Side{u, 1}},
  };
  auto moved = [&](Side x) {
    auto it = remap.find(x);
    return it == remap.end() ? x : it->second;
  };
  std::vector<Gluing> gluing = tr.gluing();
  for (int e = 0; e < tr.num_edges(); ++e) {
    if (e == edge) {
      gluing[static_cast<std::size_t>(e)] = {t, 2, u, 2};
      continue;
    }
    const auto [x, y] = tr.edge_sides(e);
    const Side x2 = moved(x), y2 = moved(y);
    gluing[static_cast<std::size_t>(e)] = {x2.tri, x2.side, y2.tri, y2.side};
  }
  IdealTriangulation out = IdealTriangulation::build(tr.genus(), tr.punctures(), std::move(gluing));
  // corners of the rebuilt triangles, as corners of the old ones
  auto old_corner = [&](Corner c) -> Corner {
    if (c.tri == t) {
      const Corner m[3] = {{t, (s + 2) % 3}, {t, s}, {u, (v + 2) % 3}};
      return m[c.corner];
    }
    if (c.tri == u) {
      const Corner m[3] = {{u, (v + 2) % 3}, {t, (s + 1) % 3}, {t, (s + 2) % 3}};
      return m[c.corner];
    }
    return c;
  };
  std::vector<int> label(static_cast<std::size_t>(tr.punctures()), -1);
  for (int p = 0; p < out.punctures(); ++p) {
    const Corner c = out.links()[static_cast<std::size_t>(p)].front();
    label[static_cast<std::size_t>(p)] = tr.puncture_of(old_corner(c));
  }
  out.relabel_punctures(label);
  return out;
}

void IdealTriangulation::relabel_punctures(const std::vector<int>& label) {
  std::vector<std::vector<Corner>> links(links_.size());
  for (std::size_t p = 0; p < links_.size(); ++p) {
    links[static_cast<std::size_t>(label[p])] = std::move(links_[p]);
  }
  links_ = std::move(links);
  for (int& p : corner_puncture_) p = label[static_cast<std::size_t>(p)];
}

std::vector<Gluing> canonical_form(const IdealTriangulation& tr) {
  const int n = tr.num_triangles();
  std::vector<Gluing> best;
  for (int start = 0; start < n; ++start) {
    for (int rot = 0; rot < 3; ++rot) {
      // new side j of relabeled triangle = old side (j + rotation) % 3
      std::vector<int> label(static_cast<std::size_t>(n), -1), rotation(static_cast<std::size_t>(n), 0);
      std::vector<int> order;
      label[static_cast<std::size_t>(start)] = 0;
      rotation[static_cast<std::size_t>(start)] = rot;
      order.push_back(start);
      for (std::size_t q = 0; q < order.size(); ++q) {
        const int old = order[q];
        for (int j = 0; j < 3; ++j) {
          const Side p = tr.partner(Side{old, (j + rotation[static_cast<std::size_t>(old)]) % 3});
          if (label[static_cast<std::size_t>(p.tri)] == -1) {
            label[static_cast<std::size_t>(p.tri)] = static_cast<int>(order.size());
            rotation[static_cast<std::size_t>(p.tri)] = p.side;
            order.push_back(p.tri);
          }
        }
      }
      auto relabel = [&](Side x) {
        const auto ti = static_cast<std::size_t>(x.tri);
        return Side{label[ti], (x.side - rotation[ti] + 3) % 3};
      };
      std::vector<Gluing> form;
      for (int e = 0; e < tr.num_edges(); ++e) {
        auto [x, y] = tr.edge_sides(e);
        Side x2 = relabel(x), y2 = relabel(y);
        if (y2 < x2) std::swap(x2, y2);
        form.push_back({x2.tri, x2.side, y2.tri, y2.side});
      }
      std::sort(form.begin(), form.end());
      if (best.empty() || form < best) best = std::move(form);
    }
  }
  return best;
}

// ---- normal curves ----

namespace {

int side_weight(const IdealTriangulation& t, const NormalCurve& c, Side s) {
  return c.weights[static_cast<std::size_t>(t.edge_of(s))];
}

// arcs around corner i of triangle tri
int corner_count(const IdealTriangulation& t, const NormalCurve& c, int tri, int i) {
  const int prev = side_weight(t, c, {tri, (i + 2) % 3});
  const int here = side_weight(t, c, {tri, i});
  const int next = side_weight(t, c, {tri, (i + 1) % 3});
  return (prev + here - next) / 2;
}

}  // namespace

bool is_admissible(const IdealTriangulation& t, const NormalCurve& c) {
  if (static_cast<int>(c.weights.size()) != t.num_edges()) return false;
  for (int w : c.weights) {
    if (w < 0) return false;
  }
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    const int x = side_weight(t, c, {tri, 0}), y = side_weight(t, c, {tri, 1}),
              z = side_weight(t, c, {tri, 2});
    if ((x + y + z) % 2 != 0 || x > y + z || y > x + z || z > x + y) return false;
  }
  return true;
}

void check_admissible(const IdealTriangulation& t, const NormalCurve& c) {
  if (static_cast<int>(c.weights.size()) != t.num_edges()) {
    throw Error(ErrorCode::InadmissibleWeights, "weight vector length does not match edge count");
  }
  if (!is_admissible(t, c)) {
    throw Error(ErrorCode::InadmissibleWeights, "weights violate parity or triangle inequalities");
  }
}

std::vector<CrossingWord> trace_normal_curve(const IdealTriangulation& t, const NormalCurve& c) {
  check_admissible(t, c);
  const int n = t.num_triangles();
  // arc (tri, corner, m): m-th arc from the corner
  std::vector<std::array<int, 3>> counts(static_cast<std::size_t>(n));
  std::vector<std::array<std::vector<char>, 3>> used(static_cast<std::size_t>(n));
  for (int tri = 0; tri < n; ++tri) {
    for (int i = 0; i < 3; ++i) {
      const int k = corner_count(t, c, tri, i);
      counts[static_cast<std::size_t>(tri)][static_cast<std::size_t>(i)] = k;
      used[static_cast<std::size_t>(tri)][static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(k), 0);
    }
  }
  std::vector<CrossingWord> out;
  for (int tri = 0; tri < n; ++tri) {
    for (int i = 0; i < 3; ++i) {
      for (int m = 0; m < counts[static_cast<std::size_t>(tri)][static_cast<std::size_t>(i)]; ++m) {
        if (used[static_cast<std::size_t>(tri)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]) continue;
        CrossingWord word;
        // first arc is entered through side i+2 and left through side i
        int ct = tri, ci = i, cm = m;
        Side entry{tri, (i + 2) % 3};
        while (true) {
          auto& flag = used[static_cast<std::size_t>(ct)][static_cast<std::size_t>(ci)][static_cast<std::size_t>(cm)];
          if (flag) break;
          flag = 1;
          const Turn turn = entry.side == ci ? Turn::left : Turn::right;
          word.push_back(Crossing{entry, t.edge_of(entry), turn});
          // leave through the other side of corner ci, at position along that side
          int exit, pos;
          if (turn == Turn::left) {
            exit = (ci + 2) % 3;
            pos = side_weight(t, c, {ct, exit}) - 1 - cm;
          } else {
            exit = ci;
            pos = cm;
          }
          const Side into = t.partner(Side{ct, exit});
          const int w = side_weight(t, c, into);
          const int p2 = w - 1 - pos;
          const int here = counts[static_cast<std::size_t>(into.tri)][static_cast<std::size_t>(into.side)];
          ct = into.tri;
          entry = into;
          if (p2 < here) {
            ci = into.side;
            cm = p2;
          } else {
            ci = (into.side + 1) % 3;
            cm = w - 1 - p2;
          }
        }
        out.push_back(std::move(word));
      }
    }
  }
  return out;
}

bool is_peripheral(const IdealTriangulation& t, const CrossingWord& component) {
  if (component.empty()) throw Error(ErrorCode::InvalidArgument, "empty crossing word");
  std::vector<Corner> corners;
  for (const auto& x : component) corners.push_back(arc_corner(x));
  std::sort(corners.begin(), corners.end());
  for (const auto& link : t.links()) {
    std::vector<Corner> l = link;
    std::sort(l.begin(), l.end());
    if (l == corners) return true;
  }
  return false;
}

NormalCurve link_curve(const IdealTriangulation& t, int puncture) {
  if (puncture < 0 || puncture >= t.punctures()) throw Error(ErrorCode::InvalidArgument, "puncture out of range");
  NormalCurve c{std::vector<int>(static_cast<std::size_t>(t.num_edges()), 0)};
  for (const Corner& k : t.links()[static_cast<std::size_t>(puncture)]) {
    ++c.weights[static_cast<std::size_t>(t.edge_of(Side{k.tri, (k.corner + 2) % 3}))];
  }
  return c;
}

}  // namespace fg::surface
