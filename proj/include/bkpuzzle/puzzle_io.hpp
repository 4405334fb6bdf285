#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "bkpuzzle/board.hpp"
#include "bkpuzzle/cone.hpp"

namespace bkp {

using Json = nlohmann::ordered_json;

inline Dir parse_dir(const std::string& s) {
  if (s == "E") return Dir::kE;
  if (s == "NE") return Dir::kNE;
  if (s == "NW") return Dir::kNW;
  throw std::invalid_argument("bad edge direction '" + s + "'");
}

/// Edges sorted by (b, a, dir).
inline Json to_json(const Puzzle& p) {
  Json edges = Json::array();
  for (const Edge& e : p.edges())
    edges.push_back({{"a", e.a}, {"b", e.b}, {"dir", dir_name(e.dir)},
                     {"label", p.at(e).to_string()}});
  return {{"n", p.size()}, {"d", p.alphabet()}, {"edges", std::move(edges)}};
}

/// Reads a puzzle; every lattice edge must appear exactly once and the
/// result must satisfy the piece rules.
inline Puzzle puzzle_from_json(const nlohmann::json& j, Chirality chir = kPinnedChirality) {
  const int n = j.at("n").get<int>(), d = j.at("d").get<int>();
  if (n < 0 || n > 64) throw std::invalid_argument("puzzle size out of range");
  Puzzle p(n, d);
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& item : j.at("edges")) {
    Edge e{item.at("a").get<int>(), item.at("b").get<int>(),
           parse_dir(item.at("dir").get<std::string>())};
    if (!p.contains(e)) throw std::invalid_argument("edge " + to_string(e) + " outside the puzzle");
    if (!seen.insert({e.b, e.a, static_cast<int>(e.dir)}).second)
      throw std::invalid_argument("edge " + to_string(e) + " listed twice");
    Label l = Label::parse(item.at("label").get<std::string>());
    if (l.hi > d) throw std::invalid_argument("label " + l.to_string() + " exceeds alphabet");
    p.set(e, l);
  }
  if (seen.size() != p.edges().size()) throw std::invalid_argument("puzzle JSON is missing edges");
  auto report = validate(p, chir);
  if (!report.ok()) throw std::invalid_argument("invalid puzzle:\n" + report.summary());
  return p;
}

inline Json to_json(const std::vector<Puzzle>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

inline Json to_json(const Inequality& q) {
  return {{"n", q.n}, {"nw", q.nw}, {"ne", q.ne}, {"s", q.s}};
}

inline Json to_json(const FaceDescription& f) {
  Json eqs = Json::array();
  for (const auto& q : f.equalities) eqs.push_back(to_json(q));
  return {{"source", {{"nw", f.source.nw.to_string()},
                      {"ne", f.source.ne.to_string()},
                      {"s", f.source.s.to_string()}}},
          {"equalities", std::move(eqs)}};
}

}  // namespace bkp
