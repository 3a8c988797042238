#pragma once

#include <string>
#include <vector>

#include "fg/surface.hpp"
#include "fg/word.hpp"

namespace fg::presentation {

// Two free bases of the fundamental group of an ideal triangulation.
//
// Letters: one per edge outside a breadth-first spanning tree of the dual
// graph, rooted at a most central triangle. Letter l is the element carrying the tree
// domain across its "+" side.
//
// Generators: a1..ag, b1..bg, c1..ck with
//   [a1,b1]...[ag,bg] c1...ck = 1
// where c_{p+1} is a loop around puncture p. ck is the redundant one.
struct Presentation {
  int genus = 0;
  int punctures = 0;
  int num_letters = 0;

  std::vector<int> bfs_order;                // triangles, root first
  std::vector<surface::Side> parent_side;    // per triangle: side of its parent crossed to reach it
  std::vector<int> side_letter;              // per side 3t+s: 0 on tree sides, +-(letter+1)
  std::vector<surface::Side> letter_side;    // "+" side of each letter

  std::vector<word::Word> generators;        // over letters
  std::vector<word::Word> letters;           // over generators
  std::vector<std::string> names;

  std::vector<word::Word> corner_loop;       // per corner 3t+i, over letters
  std::vector<word::Word> corner_conjugator; // corner_loop = w c^e w^-1, over letters
  std::vector<int> corner_sign;              // e

  int num_generators() const { return 2 * genus + punctures; }
  int peripheral_index(int puncture) const { return 2 * genus + puncture; }
  word::Word relation() const;  // over generators

  int letter_of(surface::Side s) const { return side_letter[static_cast<std::size_t>(3 * s.tri + s.side)]; }
  bool is_tree_side(surface::Side s) const { return letter_of(s) == 0; }

  // Element of a closed normal loop, read from its exit sides.
  word::Word loop_letters(const surface::CrossingWord& c) const;
  word::Word loop_generators(const surface::CrossingWord& c) const;
};

Presentation make_presentation(const surface::IdealTriangulation& t);

}  // namespace fg::presentation
