#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace fg::surface {

struct Side {
  int tri = 0;
  int side = 0;
  auto operator<=>(const Side&) const = default;
};

struct Corner {
  int tri = 0;
  int corner = 0;
  auto operator<=>(const Corner&) const = default;
};

// One edge: side (t, s) glued to side (t2, s2). Corner s of t meets corner
// s2+1 of t2 and corner s+1 meets corner s2.
using Gluing = std::array<int, 4>;

class IdealTriangulation;
IdealTriangulation flip(const IdealTriangulation& t, int edge);

class IdealTriangulation {
 public:
  // Validates the gluing table; throws UnpairedSide, WrongPunctureCount,
  // NonNegativeEuler or InvalidArgument.
  static IdealTriangulation build(int genus, int punctures, std::vector<Gluing> gluing);

  int genus() const { return genus_; }
  int punctures() const { return punctures_; }
  int num_triangles() const { return static_cast<int>(side_edge_.size() / 3); }
  int num_edges() const { return static_cast<int>(gluing_.size()); }
  const std::vector<Gluing>& gluing() const { return gluing_; }

  Side partner(Side s) const { return partner_[index(s)]; }
  int edge_of(Side s) const { return side_edge_[index(s)]; }
  std::array<Side, 2> edge_sides(int e) const;
  int puncture_of(Corner c) const { return corner_puncture_[index(c)]; }
  // Corners around each puncture, counterclockwise; the walk leaves corner
  // (t, i) through side i+2.
  const std::vector<std::vector<Corner>>& links() const { return links_; }
  Corner next_in_link(Corner c) const;

 private:
  friend IdealTriangulation flip(const IdealTriangulation& t, int edge);
  // label[p] is the new number of puncture p
  void relabel_punctures(const std::vector<int>& label);

  static std::size_t index(Side s) { return static_cast<std::size_t>(3 * s.tri + s.side); }
  static std::size_t index(Corner c) { return static_cast<std::size_t>(3 * c.tri + c.corner); }

  int genus_ = 0;
  int punctures_ = 0;
  std::vector<Gluing> gluing_;
  std::vector<Side> partner_;
  std::vector<int> side_edge_;
  std::vector<int> corner_puncture_;
  std::vector<std::vector<Corner>> links_;
};

// Fan triangulation of the 4g-gon (g >= 1) or the two-triangle pants
// (g = 0), with extra punctures added by splitting triangle 0.
IdealTriangulation standard_triangulation(int genus, int punctures);

// Diagonal exchange in the quadrilateral around e. Edge and puncture ids are
// kept; the two triangles of e are rebuilt with e as side 2 of each. Throws
// SelfGluedEdge.
IdealTriangulation flip(const IdealTriangulation& t, int edge);

// Lexicographically least side-pairing list over all relabelings of
// triangles and rotations of corners.
std::vector<Gluing> canonical_form(const IdealTriangulation& t);

// ---- normal curves ----

struct NormalCurve {
  std::vector<int> weights;  // per edge
  auto operator<=>(const NormalCurve&) const = default;
};

enum class Turn { left, right };

// One normal arc: the curve enters triangle entry.tri through entry.side and
// leaves through entry.side+2 (left) or entry.side+1 (right).
struct Crossing {
  Side entry;
  int edge = 0;
  Turn turn = Turn::left;
  auto operator<=>(const Crossing&) const = default;
};
using CrossingWord = std::vector<Crossing>;

inline int exit_side(const Crossing& c) { return (c.entry.side + (c.turn == Turn::left ? 2 : 1)) % 3; }
inline Corner arc_corner(const Crossing& c) {
  return {c.entry.tri, c.turn == Turn::left ? c.entry.side : (c.entry.side + 1) % 3};
}

// Throws InadmissibleWeights.
void check_admissible(const IdealTriangulation& t, const NormalCurve& c);
bool is_admissible(const IdealTriangulation& t, const NormalCurve& c);

// Components in order of their first arc (triangle, corner, offset).
std::vector<CrossingWord> trace_normal_curve(const IdealTriangulation& t, const NormalCurve& c);

bool is_peripheral(const IdealTriangulation& t, const CrossingWord& component);

// Weight vector of the loop around puncture p.
NormalCurve link_curve(const IdealTriangulation& t, int puncture);

}  // namespace fg::surface
