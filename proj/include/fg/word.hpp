#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fg/moebius.hpp"

namespace fg::word {

// Reduced word in a free group. Letter i (0-based) is stored as i+1, its
// inverse as -(i+1).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  static Word generator(int index, int sign = 1);

  const std::vector<int>& letters() const { return v_; }
  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }

  Word inverse() const;
  Word operator*(const Word& o) const;
  Word& operator*=(const Word& o);
  bool operator==(const Word& o) const = default;

 private:
  std::vector<int> v_;
};

Word commutator(const Word& a, const Word& b);

// Replace generator i by images[i].
Word substitute(const Word& w, const std::vector<Word>& images);

// Cyclic rotation moving the first r letters to the end.
Word rotate(const Word& w, std::size_t r);

// w with a == w * b * w^-1, if a and b are conjugate.
std::optional<Word> conjugator(const Word& a, const Word& b);

moebius::Moebius evaluate(const Word& w, const std::vector<moebius::Moebius>& images);

std::string to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace fg::word
