#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bkpuzzle/word.hpp"

namespace bkp {

// Lattice conventions. Vertex (a,b) sits at a*E + b*NE with E = (1,0) and
// NE = (1/2, sqrt(3)/2): SW corner (0,0), SE corner (n,0), apex (0,n).
// An edge is named by its lower endpoint and the direction it heads in.

enum class Dir : std::uint8_t { kE = 0, kNE = 1, kNW = 2 };

inline const char* dir_name(Dir d) {
  switch (d) {
    case Dir::kE: return "E";
    case Dir::kNE: return "NE";
    case Dir::kNW: return "NW";
  }
  return "?";
}

struct Vertex {
  int a = 0;
  int b = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  int a = 0;
  int b = 0;
  Dir dir = Dir::kE;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::string(dir_name(e.dir)) + "(" + std::to_string(e.a) + "," +
         std::to_string(e.b) + ")";
}

/// The six unit steps, counter-clockwise from E, in (a,b) coordinates.
inline constexpr std::array<std::array<int, 2>, 6> kSteps{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

/// Index 0..5 of a unit step, or -1.
inline int step_index(int da, int db) {
  for (int k = 0; k < 6; ++k)
    if (kSteps[k][0] == da && kSteps[k][1] == db) return k;
  return -1;
}

inline Vertex tail(const Edge& e) { return {e.a, e.b}; }

inline Vertex head(const Edge& e) {
  const auto& s = kSteps[static_cast<int>(e.dir)];
  return {e.a + s[0], e.b + s[1]};
}

/// Edge joining two adjacent vertices, in either order.
inline std::optional<Edge> edge_between(Vertex u, Vertex v) {
  int k = step_index(v.a - u.a, v.b - u.b);
  if (k < 0) return std::nullopt;
  if (k < 3) return Edge{u.a, u.b, static_cast<Dir>(k)};
  return Edge{v.a, v.b, static_cast<Dir>(k - 3)};
}

/// An edge label: a single letter, or a rhombus waist Pair(i,j) with i > j.
struct Label {
  std::uint8_t hi = 0;  // 0 means unset
  std::uint8_t lo = 0;  // 0 for single letters

  static constexpr Label single(int i) {
    return Label{static_cast<std::uint8_t>(i), 0};
  }
  static Label pair(int i, int j) {
    if (!(i > j && j >= 1)) throw std::invalid_argument("pair label needs i > j >= 1");
    return Label{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
  }

  bool is_set() const { return hi != 0; }
  bool is_single() const { return hi != 0 && lo == 0; }
  bool is_pair() const { return lo != 0; }
  int letter() const { return hi; }

  std::string to_string() const {
    if (!is_set()) return "?";
    if (is_single()) return std::to_string(hi);
    return std::to_string(hi) + "|" + std::to_string(lo);
  }

  static Label parse(const std::string& s) {
    auto bar = s.find('|');
    try {
      if (bar == std::string::npos) {
        int i = std::stoi(s);
        if (i < 1 || i > 255) throw std::invalid_argument("label out of range");
        return single(i);
      }
      return pair(std::stoi(s.substr(0, bar)), std::stoi(s.substr(bar + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad edge label '" + s + "'");
    }
  }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Which way the rhombus pieces are handed. kForward: reading a triangle's
/// edges clockwise from its Pair(i,j) edge gives Single(i) then Single(j).
enum class Chirality : std::uint8_t { kForward, kReverse };

#if defined(BKP_CHIRALITY_REVERSE)
inline constexpr Chirality kPinnedChirality = Chirality::kReverse;
inline constexpr const char* kPinVersion = "chirality-reverse/1";
#else
inline constexpr Chirality kPinnedChirality = Chirality::kForward;
inline constexpr const char* kPinVersion = "chirality-forward/1";
#endif

inline const char* chirality_name(Chirality c) {
  return c == Chirality::kForward ? "forward" : "reverse";
}

/// The two singles that follow Pair(i,j) clockwise.
inline std::pair<int, int> clockwise_after_pair(Label p, Chirality chir) {
  return chir == Chirality::kForward ? std::pair<int, int>{p.hi, p.lo}
                                     : std::pair<int, int>{p.lo, p.hi};
}

/// Piece rule for one unit triangle, edges given clockwise.
inline bool piece_ok(Label x, Label y, Label z, Chirality chir) {
  const std::array<Label, 3> e{x, y, z};
  int pairs = 0, at = -1;
  for (int k = 0; k < 3; ++k) {
    if (!e[k].is_set()) return false;
    if (e[k].is_pair()) {
      ++pairs;
      at = k;
    }
  }
  if (pairs == 0) return x == y && y == z;
  if (pairs > 1) return false;
  auto [c1, c2] = clockwise_after_pair(e[at], chir);
  return e[(at + 1) % 3] == Label::single(c1) && e[(at + 2) % 3] == Label::single(c2);
}

/// A unit triangle. Up cell (a,b): vertices (a,b),(a+1,b),(a,b+1).
/// Down cell (a,b): vertices (a+1,b),(a,b+1),(a+1,b+1).
struct Cell {
  int a = 0;
  int b = 0;
  bool up = true;
  friend bool operator==(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& c) {
  return std::string(c.up ? "up" : "down") + "(" + std::to_string(c.a) + "," +
         std::to_string(c.b) + ")";
}

/// Edges of a cell in clockwise order. Up: right, bottom, left.
/// Down: top, right, left.
inline std::array<Edge, 3> cell_edges(const Cell& c) {
  if (c.up)
    return {Edge{c.a + 1, c.b, Dir::kNW}, Edge{c.a, c.b, Dir::kE},
            Edge{c.a, c.b, Dir::kNE}};
  return {Edge{c.a, c.b + 1, Dir::kE}, Edge{c.a + 1, c.b, Dir::kNE},
          Edge{c.a + 1, c.b, Dir::kNW}};
}

inline std::array<Vertex, 3> cell_vertices(const Cell& c) {
  if (c.up) return {Vertex{c.a, c.b}, Vertex{c.a + 1, c.b}, Vertex{c.a, c.b + 1}};
  return {Vertex{c.a + 1, c.b}, Vertex{c.a, c.b + 1}, Vertex{c.a + 1, c.b + 1}};
}

/// All n^2 cells, row by row from the S side, left to right.
inline std::vector<Cell> all_cells(int n) {
  std::vector<Cell> out;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a + b < n; ++a) {
      out.push_back({a, b, true});
      if (a + b <= n - 2) out.push_back({a, b, false});
    }
  return out;
}

inline bool has_edge(int n, const Edge& e) {
  if (e.a < 0 || e.b < 0) return false;
  switch (e.dir) {
    case Dir::kE:
    case Dir::kNE: return e.a + e.b <= n - 1;
    case Dir::kNW: return e.a >= 1 && e.a + e.b <= n;
  }
  return false;
}

inline bool on_boundary(int n, const Edge& e) {
  switch (e.dir) {
    case Dir::kE: return e.b == 0;
    case Dir::kNE: return e.a == 0;
    case Dir::kNW: return e.a + e.b == n;
  }
  return false;
}

/// Cells on either side of an edge: (below or left, above or right).
inline std::pair<std::optional<Cell>, std::optional<Cell>> cells_beside(int n,
                                                                        const Edge& e) {
  std::optional<Cell> first, second;
  switch (e.dir) {
    case Dir::kE:
      if (e.b >= 1) first = Cell{e.a, e.b - 1, false};
      if (e.a + e.b <= n - 1) second = Cell{e.a, e.b, true};
      break;
    case Dir::kNE:
      if (e.a >= 1) first = Cell{e.a - 1, e.b, false};
      if (e.a + e.b <= n - 1) second = Cell{e.a, e.b, true};
      break;
    case Dir::kNW:
      first = Cell{e.a - 1, e.b, true};
      if (e.a + e.b <= n - 1) second = Cell{e.a - 1, e.b, false};
      break;
  }
  return {first, second};
}

/// Every lattice edge of a size-n triangle, sorted by (b, a, dir).
inline std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  for (int b = 0; b <= n; ++b)
    for (int a = 0; a + b <= n; ++a)
      for (Dir d : {Dir::kE, Dir::kNE, Dir::kNW})
        if (has_edge(n, {a, b, d})) out.push_back({a, b, d});
  return out;
}

/// A labelling of every edge of the size-n triangle.
class Puzzle {
 public:
  Puzzle() = default;
  Puzzle(int n, int alphabet)
      : n_(n), d_(alphabet), labels_(static_cast<std::size_t>((n + 1) * (n + 1) * 3)) {
    if (n < 0) throw std::invalid_argument("puzzle size must be >= 0");
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be >= 1");
  }

  int size() const { return n_; }
  int alphabet() const { return d_; }

  bool contains(const Edge& e) const { return has_edge(n_, e); }

  Label at(const Edge& e) const {
    if (!contains(e)) throw std::out_of_range("edge " + to_string(e) + " not in puzzle");
    return labels_[index(e)];
  }

  void set(const Edge& e, Label l) {
    if (!contains(e)) throw std::out_of_range("edge " + to_string(e) + " not in puzzle");
    labels_[index(e)] = l;
  }

  std::vector<Edge> edges() const { return all_edges(n_); }

  friend bool operator==(const Puzzle&, const Puzzle&) = default;
  friend auto operator<=>(const Puzzle&, const Puzzle&) = default;

 private:
  std::size_t index(const Edge& e) const {
    return (static_cast<std::size_t>(e.b) * (n_ + 1) + e.a) * 3 +
           static_cast<std::size_t>(e.dir);
  }

  int n_ = 0;
  int d_ = 1;
  std::vector<Label> labels_;  // indexed in (b, a, dir) order
};

struct Violation {
  std::string where;
  std::string what;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) s += v.where + ": " + v.what + "\n";
    return s;
  }
};

inline ValidationReport validate(const Puzzle& p, Chirality chir = kPinnedChirality) {
  ValidationReport r;
  const int n = p.size();
  for (const Edge& e : p.edges()) {
    Label l = p.at(e);
    if (!l.is_set()) {
      r.violations.push_back({"edge " + to_string(e), "unlabelled"});
      continue;
    }
    if (l.hi > p.alphabet())
      r.violations.push_back({"edge " + to_string(e),
                              "label " + l.to_string() + " outside alphabet"});
    if (l.is_pair() && on_boundary(n, e))
      r.violations.push_back({"edge " + to_string(e), "pair label on the boundary"});
  }
  for (const Cell& c : all_cells(n)) {
    auto es = cell_edges(c);
    Label x = p.at(es[0]), y = p.at(es[1]), z = p.at(es[2]);
    if (!piece_ok(x, y, z, chir))
      r.violations.push_back({"cell " + to_string(c),
                              "edges (" + x.to_string() + "," + y.to_string() + "," +
                                  z.to_string() + ") clockwise form no piece"});
  }
  return r;
}

/// Boundary words: NW read SW corner to apex, NE read apex to SE corner,
/// S read SW to SE.
struct Boundary {
  Word nw, ne, s;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

inline Edge nw_side_edge(int /*n*/, int t) { return {0, t, Dir::kNE}; }
inline Edge ne_side_edge(int n, int t) { return {t + 1, n - 1 - t, Dir::kNW}; }
inline Edge s_side_edge(int /*n*/, int t) { return {t, 0, Dir::kE}; }

inline Boundary boundary(const Puzzle& p) {
  const int n = p.size();
  std::vector<int> nw, ne, s;
  for (int t = 0; t < n; ++t) {
    nw.push_back(p.at(nw_side_edge(n, t)).letter());
    ne.push_back(p.at(ne_side_edge(n, t)).letter());
    s.push_back(p.at(s_side_edge(n, t)).letter());
  }
  return {Word(nw, p.alphabet()), Word(ne, p.alphabet()), Word(s, p.alphabet())};
}

/// Direction an acute corner of a rhombus points, by waist direction:
/// E waist -> S, NE waist -> NW, NW waist -> NE.
enum class Corner : std::uint8_t { kS = 0, kNW = 1, kNE = 2 };

inline Corner corner_of_waist(Dir waist) {
  switch (waist) {
    case Dir::kE: return Corner::kS;
    case Dir::kNE: return Corner::kNW;
    case Dir::kNW: return Corner::kNE;
  }
  return Corner::kS;
}

struct PieceCensus {
  int alphabet = 0;
  std::vector<int> up;    // up-pointing i-triangles, index i-1
  std::vector<int> down;  // down-pointing i-triangles
  std::vector<int> rhombi;  // (i-1)*d + (j-1)
  std::array<std::vector<int>, 3> by_corner;

  int rhombus(int i, int j) const { return rhombi[(i - 1) * alphabet + (j - 1)]; }
  int rhombus(Corner c, int i, int j) const {
    return by_corner[static_cast<int>(c)][(i - 1) * alphabet + (j - 1)];
  }
};

inline PieceCensus census(const Puzzle& p) {
  const int d = p.alphabet();
  PieceCensus c;
  c.alphabet = d;
  c.up.assign(d, 0);
  c.down.assign(d, 0);
  c.rhombi.assign(d * d, 0);
  for (auto& v : c.by_corner) v.assign(d * d, 0);
  for (const Cell& cell : all_cells(p.size())) {
    auto es = cell_edges(cell);
    Label x = p.at(es[0]);
    if (x.is_single() && x == p.at(es[1]) && x == p.at(es[2]))
      ++(cell.up ? c.up : c.down)[x.letter() - 1];
  }
  for (const Edge& e : p.edges()) {
    Label l = p.at(e);
    if (!l.is_pair()) continue;
    int idx = (l.hi - 1) * d + (l.lo - 1);
    ++c.rhombi[idx];
    ++c.by_corner[static_cast<int>(corner_of_waist(e.dir))][idx];
  }
  return c;
}

/// Left-right mirror with letters reversed (i -> d+1-i).
inline Puzzle reflect_dual(const Puzzle& p) {
  const int n = p.size(), d = p.alphabet();
  Puzzle q(n, d);
  for (const Edge& e : p.edges()) {
    Label l = p.at(e);
    Label m;
    if (l.is_single())
      m = Label::single(d + 1 - l.hi);
    else if (l.is_pair())
      m = Label::pair(d + 1 - l.lo, d + 1 - l.hi);
    Edge f;
    switch (e.dir) {
      case Dir::kE: f = {n - e.a - e.b - 1, e.b, Dir::kE}; break;
      case Dir::kNE: f = {n - e.a - e.b, e.b, Dir::kNW}; break;
      case Dir::kNW: f = {n - e.a - e.b, e.b, Dir::kNE}; break;
    }
    q.set(f, m);
  }
  return q;
}

/// A_~ on puzzles. Rhombi inside one class split into two triangles.
inline Puzzle ambiguate_puzzle(const Puzzle& p, const Ambiguator& amb) {
  if (amb.alphabet() != p.alphabet())
    throw std::invalid_argument("ambiguator alphabet does not match puzzle");
  Puzzle q(p.size(), amb.class_count());
  for (const Edge& e : p.edges()) {
    Label l = p.at(e);
    if (l.is_single()) {
      q.set(e, Label::single(amb.class_of(l.hi)));
    } else if (l.is_pair()) {
      int ci = amb.class_of(l.hi), cj = amb.class_of(l.lo);
      q.set(e, ci == cj ? Label::single(ci) : Label::pair(ci, cj));
    }
  }
  return q;
}

namespace detail {

/// Displacement of a directed edge as one lattice vector per letter. A
/// Pair(i,j) waist traversed along u carries rot(+60)u on its first
/// clockwise letter and rot(-60)u on its second; each piece then closes up.
inline void add_edge_vector(std::vector<std::array<int, 2>>& acc, Label l, int step,
                            int sign, Chirality chir) {
  auto add = [&](int letter, int k) {
    acc[letter][0] += sign * kSteps[k][0];
    acc[letter][1] += sign * kSteps[k][1];
  };
  if (l.is_single()) {
    add(l.hi, step);
  } else {
    auto [c1, c2] = clockwise_after_pair(l, chir);
    add(c1, (step + 1) % 6);
    add(c2, (step + 5) % 6);
  }
}

/// Per-letter position of every vertex, found by walking edges from (0,0).
inline std::vector<std::vector<std::array<int, 2>>> letter_positions(const Puzzle& p,
                                                                      Chirality chir) {
  const int n = p.size(), d = p.alphabet();
  auto vid = [n](Vertex v) { return v.b * (n + 1) + v.a; };
  std::vector<std::vector<std::array<int, 2>>> pos((n + 1) * (n + 1));
  std::vector<bool> seen((n + 1) * (n + 1), false);
  std::vector<std::vector<std::pair<Edge, int>>> incident((n + 1) * (n + 1));
  for (const Edge& e : p.edges()) {
    incident[vid(tail(e))].push_back({e, +1});
    incident[vid(head(e))].push_back({e, -1});
  }
  std::queue<Vertex> q;
  pos[0].assign(d + 1, {0, 0});
  seen[0] = true;
  q.push({0, 0});
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (auto [e, sign] : incident[vid(u)]) {
      Vertex v = sign > 0 ? head(e) : tail(e);
      auto next = pos[vid(u)];
      add_edge_vector(next, p.at(e), static_cast<int>(e.dir), sign, chir);
      if (!seen[vid(v)]) {
        seen[vid(v)] = true;
        pos[vid(v)] = std::move(next);
        q.push(v);
      } else if (pos[vid(v)] != next) {
        throw std::logic_error("puzzle edge vectors do not close up at (" +
                               std::to_string(v.a) + "," + std::to_string(v.b) + ")");
      }
    }
  }
  return pos;
}

}  // namespace detail

/// D_S on puzzles: edges whose letters all lie outside s shrink to points.
/// The result is a valid puzzle on the renumbered alphabet 1..|s|.
inline Puzzle deflate_puzzle(const Puzzle& p, const LetterSet& s,
                             Chirality chir = kPinnedChirality) {
  check_letter_set(s, p.alphabet());
  const int n = p.size();
  auto rank = letter_ranks(s, p.alphabet());
  auto pos = detail::letter_positions(p, chir);
  auto vid = [n](Vertex v) { return v.b * (n + 1) + v.a; };
  auto project = [&](Vertex v) {
    Vertex out{0, 0};
    for (int c : s) {
      out.a += pos[vid(v)][c][0];
      out.b += pos[vid(v)][c][1];
    }
    return out;
  };
  Content cont = content(boundary(p).s);
  int size = 0;
  for (int c : s) size += cont[c - 1];

  Puzzle q(size, static_cast<int>(s.size()));
  for (const Edge& e : p.edges()) {
    Label l = p.at(e);
    Label m;
    if (l.is_single()) {
      if (!rank[l.hi]) continue;
      m = Label::single(rank[l.hi]);
    } else {
      int ri = rank[l.hi], rj = rank[l.lo];
      if (!ri && !rj) continue;
      m = (ri && rj) ? Label::pair(ri, rj) : Label::single(ri ? ri : rj);
    }
    Vertex u = project(tail(e)), v = project(head(e));
    auto f = edge_between(u, v);
    if (!f || !q.contains(*f))
      throw std::logic_error("deflation produced a non-unit edge from " + to_string(e));
    Label old = q.at(*f);
    if (old.is_set() && old != m)
      throw std::logic_error("deflation gave conflicting labels on " + to_string(*f));
    q.set(*f, m);
  }
  auto report = validate(q, chir);
  if (!report.ok())
    throw std::logic_error("deflated puzzle is invalid:\n" + report.summary());
  return q;
}

}  // namespace bkp
