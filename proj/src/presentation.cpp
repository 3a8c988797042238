#include "fg/presentation.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "fg/error.hpp"

namespace fg::presentation {

using surface::Corner;
using surface::IdealTriangulation;
using surface::Side;
using word::Word;

namespace {

// Boundary side of the fundamental polygon. The polygon vertex at the start
// of a token is a puncture.
struct Token {
  int label;
  int sign;
  int start;
};
using Polygon = std::vector<Token>;

Word h(const Token& t) { return Word::generator(t.label, t.sign); }

// Polygon under cut-and-paste, with both directions of the change of basis.
struct Reducer {
  Polygon poly;
  int next_label = 0;
  std::vector<Word> fwd;  // label -> word over original letters
  std::vector<Word> bwd;  // original letter -> word over current labels
  int main_puncture = 0;
  int punctures = 0;

  // total length of both changes of basis
  std::size_t cost() const {
    std::size_t s = 0;
    for (const auto& t : poly) {
      if (t.sign > 0) s += fwd[static_cast<std::size_t>(t.label)].size();
    }
    for (const auto& w : bwd) s += w.size();
    return s;
  }

  int phi(const Polygon& p) const {
    std::vector<int> count(static_cast<std::size_t>(punctures), 0);
    for (const auto& t : p) ++count[static_cast<std::size_t>(t.start)];
    int s = 0;
    for (int q = 0; q < punctures; ++q) {
      if (q != main_puncture) s += count[static_cast<std::size_t>(q)] - 1;
    }
    return s;
  }

  struct Cut {
    Polygon poly;
    std::vector<std::pair<int, Word>> fwd_changes;  // label -> new forward word
    std::vector<Word> rep;                          // old label -> word over new labels
    int new_label;
    Word new_fwd;
  };

  // Cut along the diagonal from vertex i to vertex j and glue the two pieces
  // back along label L.
  std::optional<Cut> cut_glue(const Polygon& p, int i, int j, int L) const {
    const int n = static_cast<int>(p.size());
    if ((j - i + n) % n < 2 || (i - j + n) % n < 2) return std::nullopt;
    const int z = next_label;
    Polygon piece1, piece2;
    for (int q = i; q != j; q = (q + 1) % n) piece1.push_back(p[static_cast<std::size_t>(q)]);
    piece1.push_back({z, -1, p[static_cast<std::size_t>(j)].start});
    for (int q = j; q != i; q = (q + 1) % n) piece2.push_back(p[static_cast<std::size_t>(q)]);
    piece2.push_back({z, 1, p[static_cast<std::size_t>(i)].start});

    auto find = [](const Polygon& pc, int label, int sign) -> int {
      for (std::size_t q = 0; q < pc.size(); ++q) {
        if (pc[q].label == label && pc[q].sign == sign) return static_cast<int>(q);
      }
      return -1;
    };
    const int plus1 = find(piece1, L, 1), plus2 = find(piece2, L, 1);
    const int minus1 = find(piece1, L, -1), minus2 = find(piece2, L, -1);
    bool q_is_2;
    if (plus1 >= 0 && minus2 >= 0) {
      q_is_2 = true;
    } else if (plus2 >= 0 && minus1 >= 0) {
      q_is_2 = false;
    } else {
      return std::nullopt;
    }
    const Polygon& R = q_is_2 ? piece1 : piece2;
    const Polygon& Q = q_is_2 ? piece2 : piece1;
    const int si = q_is_2 ? plus1 : plus2;
    const int qi = q_is_2 ? minus2 : minus1;

    Cut out;
    out.new_label = z;
    const auto qn = Q.size();
    out.poly.insert(out.poly.end(), R.begin(), R.begin() + si);
    for (std::size_t q = 1; q < qn; ++q) out.poly.push_back(Q[(static_cast<std::size_t>(qi) + q) % qn]);
    out.poly.insert(out.poly.end(), R.begin() + si + 1, R.end());

    const Word hL = fwd[static_cast<std::size_t>(L)];
    const Word Lw = Word::generator(z, q_is_2 ? 1 : -1);
    out.new_fwd = q_is_2 ? hL : hL.inverse();
    out.rep.resize(static_cast<std::size_t>(z));
    for (int m = 0; m < z; ++m) out.rep[static_cast<std::size_t>(m)] = Word::generator(m);
    out.rep[static_cast<std::size_t>(L)] = Lw;

    std::map<int, std::pair<int, int>> where;  // label -> (piece of +, piece of -); 0 = R, 1 = Q
    for (const auto& t : R) {
      if (t.label == z || t.label == L) continue;
      (t.sign > 0 ? where[t.label].first : where[t.label].second) = 0;
    }
    for (const auto& t : Q) {
      if (t.label == z || t.label == L) continue;
      (t.sign > 0 ? where[t.label].first : where[t.label].second) = 1;
    }
    for (const auto& [m, w] : where) {
      const Word& f = fwd[static_cast<std::size_t>(m)];
      const Word M = Word::generator(m);
      if (w.first == 1 && w.second == 1) {
        out.fwd_changes.emplace_back(m, hL * f * hL.inverse());
        out.rep[static_cast<std::size_t>(m)] = Lw.inverse() * M * Lw;
      } else if (w.first == 0 && w.second == 1) {
        out.fwd_changes.emplace_back(m, f * hL.inverse());
        out.rep[static_cast<std::size_t>(m)] = M * Lw;
      } else if (w.first == 1 && w.second == 0) {
        out.fwd_changes.emplace_back(m, hL * f);
        out.rep[static_cast<std::size_t>(m)] = Lw.inverse() * M;
      }
    }
    return out;
  }

  void apply(Cut&& c) {
    poly = std::move(c.poly);
    for (auto& [m, w] : c.fwd_changes) fwd[static_cast<std::size_t>(m)] = std::move(w);
    fwd.push_back(c.new_fwd);
    ++next_label;
    for (auto& w : bwd) w = word::substitute(w, c.rep);
  }

  // Try every cut; returns candidate polygons in a fixed order.
  std::vector<Cut> all_cuts(const Polygon& p) const {
    std::vector<Cut> out;
    const int n = static_cast<int>(p.size());
    std::vector<int> labels;
    for (const auto& t : p) {
      if (t.sign > 0) labels.push_back(t.label);
    }
    std::sort(labels.begin(), labels.end());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        for (int L : labels) {
          if (auto c = cut_glue(p, i, j, L)) out.push_back(std::move(*c));
        }
      }
    }
    return out;
  }
};

bool spike_at(const Polygon& p, std::size_t q) {
  const auto& a = p[q];
  const auto& b = p[(q + 1) % p.size()];
  return a.label == b.label && a.sign == -b.sign;
}

bool block_at(const Polygon& p, std::size_t q) {
  const std::size_t n = p.size();
  if (n < 4) return false;
  const auto& t0 = p[q];
  const auto& t1 = p[(q + 1) % n];
  const auto& t2 = p[(q + 2) % n];
  const auto& t3 = p[(q + 3) % n];
  return t0.label != t1.label && t0.label == t2.label && t1.label == t3.label &&
         t0.sign == -t2.sign && t1.sign == -t3.sign;
}

int covered(const Polygon& p) {
  const std::size_t n = p.size();
  std::vector<char> mark(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    if (spike_at(p, q)) mark[q] = mark[(q + 1) % n] = 1;
    if (block_at(p, q)) {
      for (std::size_t r = 0; r < 4; ++r) mark[(q + r) % n] = 1;
    }
  }
  return static_cast<int>(std::count(mark.begin(), mark.end(), 1));
}

struct Unit {
  bool block;
  std::size_t pos;
};

std::optional<std::vector<Unit>> parse_units(const Polygon& p, std::size_t rot) {
  const std::size_t n = p.size();
  std::vector<Unit> units;
  std::size_t q = 0;
  while (q < n) {
    const std::size_t at = (rot + q) % n;
    if (q + 2 <= n && spike_at(p, at)) {
      units.push_back({false, at});
      q += 2;
    } else if (q + 4 <= n && block_at(p, at)) {
      units.push_back({true, at});
      q += 4;
    } else {
      return std::nullopt;
    }
  }
  return units;
}

}  // namespace

Word Presentation::relation() const {
  Word r;
  for (int i = 0; i < genus; ++i) r *= word::commutator(Word::generator(i), Word::generator(genus + i));
  for (int p = 0; p < punctures; ++p) r *= Word::generator(peripheral_index(p));
  return r;
}

Word Presentation::loop_letters(const surface::CrossingWord& c) const {
  Word w;
  for (const auto& x : c) {
    const int l = letter_of(Side{x.entry.tri, surface::exit_side(x)});
    if (l != 0) w *= Word::generator(std::abs(l) - 1, l > 0 ? 1 : -1);
  }
  return w;
}

Word Presentation::loop_generators(const surface::CrossingWord& c) const {
  return word::substitute(loop_letters(c), letters);
}

namespace {

struct Bases {
  std::vector<Word> generators;  // over original letters
  std::vector<Word> letters;     // over generators
  std::size_t cost = 0;
};

// Element of the final relation: a commutator block [a, b] or a single
// peripheral element a.
struct Item {
  bool block = false;
  int id = -1;  // unit index; -1 for the loop around the main puncture
  int puncture = -1;
  Word a, b;

  Word value() const { return block ? word::commutator(a, b) : a; }
  std::size_t length() const { return a.size() + b.size(); }
  void conjugate(const Word& w) {
    a = w * a * w.inverse();
    if (block) b = w * b * w.inverse();
  }
};

struct Move {
  std::size_t pos;
  bool right;  // (x,y) -> (y, y^-1 x y); otherwise (x,y) -> (x y x^-1, x)
};

Reducer reduce_punctures(Reducer red) {
  while (red.phi(red.poly) > 0) {
    const int now = red.phi(red.poly);
    std::optional<Reducer> best;
    std::size_t best_cost = 0;
    for (auto& c : red.all_cuts(red.poly)) {
      if (red.phi(c.poly) >= now) continue;
      Reducer tmp = red;
      tmp.apply(std::move(c));
      const std::size_t cost = tmp.cost();
      if (!best || cost < best_cost) {
        best_cost = cost;
        best = std::move(tmp);
      }
    }
    if (!best) throw Error(ErrorCode::Internal, "polygon reduction stalled");
    red = std::move(*best);
  }
  return red;
}

Reducer grow_handles(Reducer red) {
  const int total = static_cast<int>(red.poly.size());
  while (covered(red.poly) < total) {
    const int now = covered(red.poly);
    std::optional<Reducer> best;
    int best_cov = now;
    std::size_t best_cost = 0;
    auto consider = [&](Reducer&& cand) {
      const int cov = covered(cand.poly);
      const std::size_t cost = cand.cost();
      if (cov > best_cov || (best && cov == best_cov && cost < best_cost)) {
        best_cov = cov;
        best_cost = cost;
        best = std::move(cand);
      }
    };
    for (auto& c : red.all_cuts(red.poly)) {
      if (red.phi(c.poly) != 0) continue;
      Reducer tmp = red;
      tmp.apply(std::move(c));
      consider(std::move(tmp));
    }
    if (!best) {
      for (auto& c1 : red.all_cuts(red.poly)) {
        if (red.phi(c1.poly) != 0) continue;
        Reducer mid = red;
        mid.apply(std::move(c1));
        for (auto& c2 : mid.all_cuts(mid.poly)) {
          if (mid.phi(c2.poly) != 0) continue;
          Reducer tmp = mid;
          tmp.apply(std::move(c2));
          consider(std::move(tmp));
        }
      }
    }
    if (!best) throw Error(ErrorCode::Internal, "polygon normal form search failed");
    red = std::move(*best);
  }
  return red;
}

Bases normal_form(Reducer red, int genus, int punctures) {
  red = grow_handles(reduce_punctures(std::move(red)));

  const Polygon& poly = red.poly;
  const std::size_t np = poly.size();
  std::optional<std::vector<Unit>> units;
  std::size_t rot = 0;
  for (; rot < np; ++rot) {
    units = parse_units(poly, rot);
    if (units) break;
  }
  if (!units) throw Error(ErrorCode::Internal, "normal form does not split into units");

  auto partner_index = [&](std::size_t q) {
    for (std::size_t r = 0; r < np; ++r) {
      if (poly[r].label == poly[q].label && poly[r].sign == -poly[q].sign) return r;
    }
    throw Error(ErrorCode::Internal, "unpaired polygon token");
  };

  // U_1 ... U_m P0 = 1, with P0 the loop around the main puncture at the
  // start of the first unit
  std::vector<Item> items;
  for (std::size_t u = 0; u < units->size(); ++u) {
    const auto& U = (*units)[u];
    Item it;
    it.id = static_cast<int>(u);
    it.block = U.block;
    it.a = h(poly[U.pos]);
    if (U.block) {
      it.b = h(poly[(U.pos + 3) % np]);
    } else {
      it.puncture = poly[(U.pos + 1) % np].start;
    }
    items.push_back(std::move(it));
  }
  {
    Item p0;
    p0.puncture = red.main_puncture;
    std::size_t cur = rot;
    do {
      const std::size_t e = (cur + np - 1) % np;
      p0.a *= h(poly[e]);
      cur = partner_index(e);
    } while (cur != rot);
    items.push_back(std::move(p0));
  }

  // blocks first, then peripheral elements by puncture
  std::vector<Move> moves;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q + 1 < items.size(); ++q) {
      Item& x = items[q];
      Item& y = items[q + 1];
      if (x.block || (!y.block && y.puncture > x.puncture)) continue;
      Item xr = x, yl = y;
      xr.conjugate(y.value().inverse());
      yl.conjugate(x.value());
      if (xr.length() <= yl.length()) {
        items[q] = y;
        items[q + 1] = std::move(xr);
        moves.push_back({q, true});
      } else {
        Item xs = x;
        items[q] = std::move(yl);
        items[q + 1] = std::move(xs);
        moves.push_back({q, false});
      }
      changed = true;
    }
  }

  const int g = genus, k = punctures;
  std::vector<Word> gen_labels(static_cast<std::size_t>(2 * g + k));
  std::vector<Item> symbolic;
  int nb = 0;
  for (const auto& it : items) {
    Item s = it;
    if (it.block) {
      gen_labels[static_cast<std::size_t>(nb)] = it.a;
      gen_labels[static_cast<std::size_t>(g + nb)] = it.b;
      s.a = Word::generator(nb);
      s.b = Word::generator(g + nb);
      ++nb;
    } else {
      gen_labels[static_cast<std::size_t>(2 * g + it.puncture)] = it.a;
      s.a = Word::generator(2 * g + it.puncture);
    }
    symbolic.push_back(std::move(s));
  }
  if (nb != g) throw Error(ErrorCode::Internal, "wrong number of handles in normal form");

  // undo the moves on generator words to recover the labels
  for (auto m = moves.rbegin(); m != moves.rend(); ++m) {
    Item first = symbolic[m->pos], second = symbolic[m->pos + 1];
    if (m->right) {
      second.conjugate(first.value());
      symbolic[m->pos] = std::move(second);
      symbolic[m->pos + 1] = std::move(first);
    } else {
      first.conjugate(second.value().inverse());
      symbolic[m->pos] = std::move(second);
      symbolic[m->pos + 1] = std::move(first);
    }
  }
  std::vector<Word> label_gen(static_cast<std::size_t>(red.next_label));
  for (const auto& it : symbolic) {
    if (it.id < 0) continue;
    const auto& U = (*units)[static_cast<std::size_t>(it.id)];
    const Token& u1 = poly[U.pos];
    label_gen[static_cast<std::size_t>(u1.label)] = u1.sign > 0 ? it.a : it.a.inverse();
    if (U.block) {
      const Token& u4 = poly[(U.pos + 3) % np];
      label_gen[static_cast<std::size_t>(u4.label)] = u4.sign > 0 ? it.b : it.b.inverse();
    }
  }

  Bases out;
  for (const auto& w : gen_labels) out.generators.push_back(word::substitute(w, red.fwd));
  for (const auto& w : red.bwd) out.letters.push_back(word::substitute(w, label_gen));
  for (const auto& w : out.generators) out.cost += w.size();
  for (const auto& w : out.letters) out.cost += w.size();
  return out;
}

}  // namespace

Presentation make_presentation(const IdealTriangulation& t) {
  const int n = t.num_triangles();
  Presentation P;
  P.genus = t.genus();
  P.punctures = t.punctures();

  // spanning tree of the dual graph, rooted at a triangle of least eccentricity
  auto eccentricity = [&](int root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    int far = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int tri = queue[q];
      for (int s = 0; s < 3; ++s) {
        const int o = t.partner(Side{tri, s}).tri;
        if (dist[static_cast<std::size_t>(o)] >= 0) continue;
        dist[static_cast<std::size_t>(o)] = dist[static_cast<std::size_t>(tri)] + 1;
        far = std::max(far, dist[static_cast<std::size_t>(o)]);
        queue.push_back(o);
      }
    }
    return far;
  };
  int root = 0;
  for (int tri = 1; tri < n; ++tri) {
    if (eccentricity(tri) < eccentricity(root)) root = tri;
  }
  P.parent_side.assign(static_cast<std::size_t>(n), Side{-1, -1});
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<std::pair<int, int>>> children(static_cast<std::size_t>(n));  // (side, child)
  seen[static_cast<std::size_t>(root)] = 1;
  P.bfs_order.push_back(root);
  for (std::size_t q = 0; q < P.bfs_order.size(); ++q) {
    const int tri = P.bfs_order[q];
    for (int s = 0; s < 3; ++s) {
      const Side p = t.partner(Side{tri, s});
      if (seen[static_cast<std::size_t>(p.tri)]) continue;
      seen[static_cast<std::size_t>(p.tri)] = 1;
      P.parent_side[static_cast<std::size_t>(p.tri)] = Side{tri, s};
      children[static_cast<std::size_t>(tri)].push_back({s, p.tri});
      P.bfs_order.push_back(p.tri);
    }
  }

  // boundary of the tree domain, counterclockwise
  std::vector<Side> boundary;
  auto expand = [&](auto&& self, Side s) -> void {
    for (const auto& [cs, child] : children[static_cast<std::size_t>(s.tri)]) {
      if (cs == s.side) {
        const Side q = t.partner(s);
        self(self, Side{child, (q.side + 1) % 3});
        self(self, Side{child, (q.side + 2) % 3});
        return;
      }
    }
    boundary.push_back(s);
  };
  for (int s = 0; s < 3; ++s) expand(expand, Side{root, s});

  P.side_letter.assign(static_cast<std::size_t>(3 * n), 0);
  Reducer red;
  red.punctures = t.punctures();
  for (const Side& s : boundary) {
    int l = P.side_letter[static_cast<std::size_t>(3 * s.tri + s.side)];
    if (l == 0) {
      const int idx = P.num_letters++;
      P.letter_side.push_back(s);
      const Side q = t.partner(s);
      P.side_letter[static_cast<std::size_t>(3 * s.tri + s.side)] = idx + 1;
      P.side_letter[static_cast<std::size_t>(3 * q.tri + q.side)] = -(idx + 1);
      l = idx + 1;
    }
    red.poly.push_back({std::abs(l) - 1, l > 0 ? 1 : -1, t.puncture_of(Corner{s.tri, s.side})});
  }
  if (P.num_letters != 2 * P.genus + P.punctures - 1) {
    throw Error(ErrorCode::Internal, "unexpected number of letters in tree presentation");
  }
  red.next_label = P.num_letters;
  for (int l = 0; l < P.num_letters; ++l) {
    red.fwd.push_back(Word::generator(l));
    red.bwd.push_back(Word::generator(l));
  }

  // the loop around one puncture is the redundant generator; keep the
  // choice with the shortest words
  std::optional<Bases> best;
  for (int main = 0; main < t.punctures(); ++main) {
    Reducer r = red;
    r.main_puncture = main;
    Bases b = normal_form(std::move(r), P.genus, P.punctures);
    if (!best || b.cost < best->cost) best = std::move(b);
  }
  P.generators = std::move(best->generators);
  P.letters = std::move(best->letters);

  const int g = P.genus, k = P.punctures;
  for (int i = 1; i <= g; ++i) P.names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= g; ++i) P.names.push_back("b" + std::to_string(i));
  for (int i = 1; i <= k; ++i) P.names.push_back("c" + std::to_string(i));

  // consistency of the two bases
  if (!word::substitute(P.relation(), P.generators).empty()) {
    throw Error(ErrorCode::Internal, "surface relation does not reduce");
  }
  for (int l = 0; l < P.num_letters; ++l) {
    if (word::substitute(P.letters[static_cast<std::size_t>(l)], P.generators) != Word::generator(l)) {
      throw Error(ErrorCode::Internal, "change of basis is not invertible");
    }
  }

  // loops around corners and their conjugators to the peripheral generators
  P.corner_loop.resize(static_cast<std::size_t>(3 * n));
  P.corner_conjugator.resize(static_cast<std::size_t>(3 * n));
  P.corner_sign.assign(static_cast<std::size_t>(3 * n), 1);
  for (int tri = 0; tri < n; ++tri) {
    for (int i = 0; i < 3; ++i) {
      Word L;
      Corner c{tri, i};
      do {
        const int l = P.letter_of(Side{c.tri, (c.corner + 2) % 3});
        if (l != 0) L *= Word::generator(std::abs(l) - 1, l > 0 ? 1 : -1);
        c = t.next_in_link(c);
      } while (c != Corner{tri, i});
      const auto idx = static_cast<std::size_t>(3 * tri + i);
      const Word& cp = P.generators[static_cast<std::size_t>(P.peripheral_index(t.puncture_of(Corner{tri, i})))];
      if (auto w = word::conjugator(L, cp)) {
        P.corner_conjugator[idx] = *w;
      } else if (auto w2 = word::conjugator(L, cp.inverse())) {
        P.corner_conjugator[idx] = *w2;
        P.corner_sign[idx] = -1;
      } else {
        throw Error(ErrorCode::Internal, "corner loop is not conjugate to its peripheral generator");
      }
      P.corner_loop[idx] = std::move(L);
    }
  }
  return P;
}

}  // namespace fg::presentation
