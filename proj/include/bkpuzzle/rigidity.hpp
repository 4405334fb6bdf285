#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bkpuzzle/board.hpp"
#include "bkpuzzle/enumerate.hpp"

namespace bkp {

/// A region edge with its orientation (tail -> head).
struct DirectedEdge {
  Vertex from;
  Vertex to;
  int step() const { return step_index(to.a - from.a, to.b - from.b); }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

inline std::string to_string(const DirectedEdge& e) {
  return "(" + std::to_string(e.from.a) + "," + std::to_string(e.from.b) + ")->(" +
         std::to_string(e.to.a) + "," + std::to_string(e.to.b) + ")";
}

/// Oriented region edges of a puzzle and the gentle transitions between them.
struct RegionEdgeGraph {
  std::vector<DirectedEdge> nodes;
  std::vector<std::vector<int>> arcs;  // arcs[u] = nodes reachable in one gentle step
  std::vector<Vertex> crossings;       // vertices where two straight lines cross
};

namespace detail {

/// The piece a cell belongs to: a triangle (lo == 0) or a rhombus (i,j).
struct PieceInfo {
  Label type;
  std::optional<Edge> waist;
};

inline PieceInfo piece_of(const Puzzle& p, const Cell& c) {
  for (const Edge& e : cell_edges(c)) {
    Label l = p.at(e);
    if (l.is_pair()) return {l, e};
  }
  return {p.at(cell_edges(c)[0]), std::nullopt};
}

/// The endpoint of e that is an obtuse corner of the rhombus with this waist.
inline Vertex obtuse_end(const Edge& e, const Edge& waist) {
  Vertex t = tail(e), h = head(e);
  if (t == tail(waist) || t == head(waist)) return t;
  return h;
}

}  // namespace detail

/// Orients every region edge: triangle against rhombus points at the
/// rhombus's obtuse corner; between two rhombi, a shared obtuse corner wins,
/// otherwise the one of greater spread ((i,k) against (i,j) or (j,k),
/// i > j > k) decides.
inline RegionEdgeGraph orient(const Puzzle& p) {
  const int n = p.size();
  RegionEdgeGraph g;
  std::map<std::pair<Vertex, Vertex>, int> index;
  for (const Edge& e : p.edges()) {
    if (on_boundary(n, e) || p.at(e).is_pair()) continue;
    auto [c1, c2] = cells_beside(n, e);
    auto x = detail::piece_of(p, *c1), y = detail::piece_of(p, *c2);
    if (x.type == y.type) continue;
    Vertex target;
    if (!x.type.is_pair() && !y.type.is_pair()) {
      throw std::logic_error("two different triangles share edge " + to_string(e));
    } else if (!x.type.is_pair() || !y.type.is_pair()) {
      target = detail::obtuse_end(e, x.type.is_pair() ? *x.waist : *y.waist);
    } else {
      const detail::PieceInfo* wins = nullptr;
      if (detail::obtuse_end(e, *x.waist) == detail::obtuse_end(e, *y.waist))
        wins = &x;  // both rhombi have their obtuse corner at the same end
      else if (x.type.hi == y.type.hi)
        wins = x.type.lo < y.type.lo ? &x : &y;
      else if (x.type.lo == y.type.lo)
        wins = x.type.hi > y.type.hi ? &x : &y;
      else
        throw std::logic_error("rhombi " + x.type.to_string() + " and " +
                               y.type.to_string() + " meet at " + to_string(e) +
                               ": no orientation rule applies");
      target = detail::obtuse_end(e, *wins->waist);
    }
    Vertex source = target == tail(e) ? head(e) : tail(e);
    index[{source, target}] = static_cast<int>(g.nodes.size());
    g.nodes.push_back({source, target});
  }

  // Region edges incident to each vertex, by undirected line direction.
  std::map<Vertex, std::array<bool, 6>> present;
  for (const auto& de : g.nodes) {
    present[de.from][de.step()] = true;
    present[de.to][(de.step() + 3) % 6] = true;
  }
  std::map<Vertex, bool> crossing;
  for (const auto& [v, dirs] : present) {
    int lines = 0;
    for (int k = 0; k < 3; ++k)
      if (dirs[k] && dirs[k + 3]) ++lines;
    crossing[v] = lines >= 2;
    if (lines >= 2) g.crossings.push_back(v);
  }

  std::map<Vertex, std::vector<int>> outgoing;
  for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u)
    outgoing[g.nodes[u].from].push_back(u);
  g.arcs.assign(g.nodes.size(), {});
  for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u) {
    const auto& de = g.nodes[u];
    auto it = outgoing.find(de.to);
    if (it == outgoing.end()) continue;
    bool straight_only = crossing[de.to];
    for (int v : it->second) {
      int turn = (g.nodes[v].step() - de.step() + 6) % 6;
      bool gentle = straight_only ? turn == 0 : (turn == 0 || turn == 1 || turn == 5);
      if (gentle) g.arcs[u].push_back(v);
    }
  }
  return g;
}

struct LoopCheck {
  bool found = false;
  std::vector<DirectedEdge> witness;  // closed: front() == back()
};

/// Directed-cycle search on the gentle-transition graph.
inline LoopCheck find_gentle_loop(const RegionEdgeGraph& g) {
  const int m = static_cast<int>(g.nodes.size());
  std::vector<std::uint8_t> color(m, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(m, -1);
  LoopCheck out;
  for (int root = 0; root < m && !out.found; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty() && !out.found) {
      auto& [u, next] = stack.back();
      if (next < g.arcs[u].size()) {
        int v = g.arcs[u][next++];
        if (color[v] == 0) {
          color[v] = 1;
          parent[v] = u;
          stack.push_back({v, 0});
        } else if (color[v] == 1) {
          std::vector<int> cyc{v};
          for (int w = u; w != v; w = parent[w]) cyc.push_back(w);
          cyc.push_back(v);
          std::reverse(cyc.begin(), cyc.end());
          for (int w : cyc) out.witness.push_back(g.nodes[w]);
          out.found = true;
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return out;
}

inline LoopCheck has_gentle_loop(const Puzzle& p) { return find_gentle_loop(orient(p)); }

/// Rigid iff no gentle loop.
inline bool is_rigid(const Puzzle& p) { return !has_gentle_loop(p).found; }

/// Rigid iff the puzzle is the only one with its boundary.
inline bool is_rigid_by_count(const Puzzle& p) {
  Boundary bd = boundary(p);
  return count_puzzles({bd.nw, bd.ne, bd.s}) == 1;
}

}  // namespace bkp
