#include "fg/word.hpp"

#include <cstdlib>

#include "fg/error.hpp"

namespace fg::word {

namespace {

void push_reduced(std::vector<int>& out, int x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

// a = u * core * u^-1 with core cyclically reduced.
std::pair<Word, Word> cyclic_core(const Word& a) {
  const auto& v = a.letters();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == -v[hi - 1]) {
    ++lo;
    --hi;
  }
  return {Word(std::vector<int>(v.begin(), v.begin() + lo)),
          Word(std::vector<int>(v.begin() + lo, v.begin() + hi))};
}

}  // namespace

Word::Word(std::vector<int> letters) {
  v_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw Error(ErrorCode::Internal, "zero letter in word");
    push_reduced(v_, x);
  }
}

Word Word::generator(int index, int sign) {
  Word w;
  w.v_.push_back(sign > 0 ? index + 1 : -(index + 1));
  return w;
}

Word Word::inverse() const {
  Word w;
  w.v_.assign(v_.rbegin(), v_.rend());
  for (int& x : w.v_) x = -x;
  return w;
}

Word& Word::operator*=(const Word& o) {
  for (int x : o.v_) push_reduced(v_, x);
  return *this;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  w *= o;
  return w;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int x : w.letters()) {
    const auto idx = static_cast<std::size_t>(std::abs(x) - 1);
    if (idx >= images.size()) throw Error(ErrorCode::Internal, "substitution out of range");
    out *= x > 0 ? images[idx] : images[idx].inverse();
  }
  return out;
}

Word rotate(const Word& w, std::size_t r) {
  const auto& v = w.letters();
  if (v.empty()) return w;
  r %= v.size();
  std::vector<int> out(v.begin() + static_cast<long>(r), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<long>(r));
  return Word(out);
}

std::optional<Word> conjugator(const Word& a, const Word& b) {
  auto [u, ca] = cyclic_core(a);
  auto [v, cb] = cyclic_core(b);
  if (ca.size() != cb.size()) return std::nullopt;
  if (ca.empty()) return u;
  const auto& la = ca.letters();
  for (std::size_t r = 0; r < la.size(); ++r) {
    if (rotate(ca, r) == cb) {
      Word x(std::vector<int>(la.begin(), la.begin() + static_cast<long>(r)));
      return u * x * v.inverse();
    }
  }
  return std::nullopt;
}

moebius::Moebius evaluate(const Word& w, const std::vector<moebius::Moebius>& images) {
  std::vector<moebius::Moebius> inverses;
  inverses.reserve(images.size());
  for (const auto& m : images) inverses.push_back(m.inverse());
  moebius::Moebius out;
  for (int x : w.letters()) {
    const auto idx = static_cast<std::size_t>(std::abs(x) - 1);
    if (idx >= images.size()) throw Error(ErrorCode::Internal, "evaluation out of range");
    out = out * (x > 0 ? images[idx] : inverses[idx]);
  }
  return out;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (int x : w.letters()) {
    if (!s.empty()) s += ' ';
    const auto idx = static_cast<std::size_t>(std::abs(x) - 1);
    s += idx < names.size() ? names[idx] : "x" + std::to_string(idx);
    if (x < 0) s += "^-1";
  }
  return s;
}

}  // namespace fg::word
