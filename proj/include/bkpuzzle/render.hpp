#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "bkpuzzle/board.hpp"
#include "bkpuzzle/rigidity.hpp"

namespace bkp {

/// Text drawing: vertex (a,b) at column 8a+4b of line 2(n-b), each edge
/// label centred on its midpoint.
inline std::string render_ascii(const Puzzle& p) {
  const int n = p.size();
  const int width = 8 * n + 8;
  std::vector<std::string> lines(2 * n + 1, std::string(width, ' '));
  auto put = [&](int line, int col, const std::string& s) {
    int start = col - static_cast<int>(s.size()) / 2;
    for (std::size_t k = 0; k < s.size(); ++k) {
      int c = start + static_cast<int>(k);
      if (c >= 0 && c < width) lines[line][c] = s[k];
    }
  };
  for (int b = 0; b <= n; ++b)
    for (int a = 0; a + b <= n; ++a) put(2 * (n - b), 8 * a + 4 * b, "*");
  for (const Edge& e : p.edges()) {
    const int col = 8 * e.a + 4 * e.b, line = 2 * (n - e.b);
    std::string l = p.at(e).to_string();
    switch (e.dir) {
      case Dir::kE: put(line, col + 4, l); break;
      case Dir::kNE: put(line - 1, col + 2, l); break;
      case Dir::kNW: put(line - 1, col - 2, l); break;
    }
  }
  std::string out;
  for (auto& s : lines) {
    s.erase(s.find_last_not_of(' ') + 1);
    out += s + "\n";
  }
  return out;
}

struct SvgOptions {
  bool arrows = true;  // region-edge orientation
  bool labels = true;
};

namespace detail {

inline constexpr double kSide = 40.0;
inline constexpr double kMargin = 20.0;

inline std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

struct Point {
  double x, y;
};

inline Point place(int n, double a, double b) {
  return {kMargin + kSide * (a + b / 2.0), kMargin + kSide * (n - b) * std::sqrt(3.0) / 2.0};
}

inline const char* letter_colour(int i) {
  static constexpr std::array<const char*, 8> kColours{
      "#f4d35e", "#8ecae6", "#f4a261", "#b5e48c", "#cdb4db", "#ffafcc", "#a3c4f3", "#e9c46a"};
  return kColours[(i - 1) % kColours.size()];
}

inline const char* pair_colour(int i, int j) {
  static constexpr std::array<const char*, 6> kColours{
      "#e5e5e5", "#d0d0d0", "#bdbdbd", "#ececec", "#c7c7c7", "#dadada"};
  return kColours[((i - 1) * (i - 2) / 2 + (j - 1)) % kColours.size()];
}

}  // namespace detail

/// SVG drawing with unit triangles of side 40.
inline std::string render_svg(const Puzzle& p, const SvgOptions& opt = {}) {
  using detail::fixed;
  using detail::place;
  const int n = p.size();
  const double w = 2 * detail::kMargin + detail::kSide * n;
  const double h = 2 * detail::kMargin + detail::kSide * n * std::sqrt(3.0) / 2.0;
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(w) + "\" height=\"" +
       fixed(h) + "\" viewBox=\"0 0 " + fixed(w) + " " + fixed(h) + "\">\n";
  s += "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
       "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
       "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#c0392b\"/></marker></defs>\n";
  s += "<g stroke=\"#555555\" stroke-width=\"0.5\">\n";
  for (const Cell& c : all_cells(n)) {
    auto piece = detail::piece_of(p, c);
    const char* fill = piece.type.is_pair() ? detail::pair_colour(piece.type.hi, piece.type.lo)
                                            : detail::letter_colour(piece.type.hi);
    s += "<polygon points=\"";
    bool first = true;
    for (const Vertex& v : cell_vertices(c)) {
      auto pt = place(n, v.a, v.b);
      s += (first ? "" : " ") + fixed(pt.x) + "," + fixed(pt.y);
      first = false;
    }
    s += "\" fill=\"" + std::string(fill) + "\"/>\n";
  }
  s += "</g>\n";
  if (opt.arrows) {
    auto g = orient(p);
    s += "<g stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#arrow)\">\n";
    for (const auto& de : g.nodes) {
      auto u = place(n, de.from.a, de.from.b), v = place(n, de.to.a, de.to.b);
      s += "<line x1=\"" + fixed(u.x + 0.2 * (v.x - u.x)) + "\" y1=\"" +
           fixed(u.y + 0.2 * (v.y - u.y)) + "\" x2=\"" + fixed(u.x + 0.8 * (v.x - u.x)) +
           "\" y2=\"" + fixed(u.y + 0.8 * (v.y - u.y)) + "\"/>\n";
    }
    s += "</g>\n";
  }
  if (opt.labels) {
    s += "<g font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\" "
         "dominant-baseline=\"central\">\n";
    for (const Edge& e : p.edges()) {
      Vertex t = tail(e), hd = head(e);
      auto pt = place(n, (t.a + hd.a) / 2.0, (t.b + hd.b) / 2.0);
      s += "<text x=\"" + fixed(pt.x) + "\" y=\"" + fixed(pt.y) + "\">" +
           p.at(e).to_string() + "</text>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace bkp
