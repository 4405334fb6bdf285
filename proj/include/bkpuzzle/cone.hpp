#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bkpuzzle/board.hpp"
#include "bkpuzzle/enumerate.hpp"
#include "bkpuzzle/rigidity.hpp"
#include "bkpuzzle/word.hpp"

namespace bkp {

using Rational = boost::multiprecision::cpp_rational;

/// nw . lam + ne . mu + s . nu <= 0, with 0/1 coefficient vectors.
struct Inequality {
  int n = 0;
  std::vector<int> nw, ne, s;

  std::string to_string() const {
    std::string out;
    auto side = [&](const std::vector<int>& v, const char* sym) {
      for (int i = 0; i < n; ++i) {
        if (!v[i]) continue;
        if (!out.empty()) out += " + ";
        out += sym + std::to_string(i + 1);
      }
    };
    side(nw, "λ");
    side(ne, "μ");
    side(s, "ν");
    return (out.empty() ? "0" : out) + " ≤ 0";
  }

  friend bool operator==(const Inequality&, const Inequality&) = default;
  friend auto operator<=>(const Inequality&, const Inequality&) = default;
};

/// 0/1 vector of a two-letter word: the larger letter maps to 1.
inline std::vector<int> indicator(const Word& w) {
  std::vector<int> v(w.size());
  for (int t = 0; t < w.size(); ++t) v[t] = w[t] == 2 ? 1 : 0;
  return v;
}

/// The inequality of a two-letter puzzle, boundary read clockwise: NW and NE
/// left to right, S right to left.
inline Inequality inequality_of(const Puzzle& p) {
  if (p.alphabet() != 2) throw std::invalid_argument("inequality needs a 2-letter puzzle");
  Boundary bd = boundary(p);
  return {p.size(), indicator(bd.nw), indicator(bd.ne), indicator(dual(bd.s))};
}

/// Inequalities from every rigid two-letter puzzle of size n whose boundary
/// uses both letters. Sorted and duplicate-free.
inline std::vector<Inequality> compute_facets(int n) {
  if (n < 1) throw std::invalid_argument("facets need n >= 1");
  std::vector<Inequality> out;
  Enumerator en(2);
  for (int k = 1; k < n; ++k) {
    auto words = words_with_content({k, n - k});
    for (const Word& a : words)
      for (const Word& b : words)
        for (const Word& c : words) {
          if (inversions(a).total + inversions(b).total != inversions(c).total) continue;
          auto r = en.run({a, b, c}, EnumerateMode::kList);
          if (r.count != 1) continue;
          if (!is_rigid(r.puzzles[0]))
            throw std::logic_error("unique puzzle for " + TripleKey{a, b, c}.to_string() +
                                   " has a gentle loop");
          out.push_back(inequality_of(r.puzzles[0]));
        }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Memoised compute_facets.
inline const std::vector<Inequality>& facets(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Inequality>> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(n);
  if (it == memo.end()) it = memo.emplace(n, compute_facets(n)).first;
  return it->second;
}

/// Raised by face_from_puzzle on a puzzle with a gentle loop.
class GentleLoopError : public std::runtime_error {
 public:
  explicit GentleLoopError(LoopCheck loop)
      : std::runtime_error("puzzle has a gentle loop"), loop_(std::move(loop)) {}
  const LoopCheck& loop() const { return loop_; }

 private:
  LoopCheck loop_;
};

struct FaceDescription {
  TripleKey source;
  std::vector<Inequality> equalities;  // i-th entry from A_{i]} of the source
};

inline FaceDescription face_from_puzzle(const Puzzle& p) {
  const int d = p.alphabet();
  if (d < 2) throw std::invalid_argument("face_from_puzzle needs d >= 2");
  LoopCheck loop = has_gentle_loop(p);
  if (loop.found) throw GentleLoopError(std::move(loop));
  Boundary bd = boundary(p);
  FaceDescription out{{bd.nw, bd.ne, bd.s}, {}};
  for (int i = 1; i < d; ++i)
    out.equalities.push_back(inequality_of(ambiguate_puzzle(p, Ambiguator::cut(i, d))));
  return out;
}

inline Rational dot(const std::vector<int>& coeff, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i]) s += x[i];
  return s;
}

inline bool satisfies(const Inequality& q, const std::vector<Rational>& lam,
                      const std::vector<Rational>& mu, const std::vector<Rational>& nu) {
  return dot(q.nw, lam) + dot(q.ne, mu) + dot(q.s, nu) <= 0;
}

inline bool weakly_decreasing(const std::vector<Rational>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

/// Trace zero, chamber order, and every inequality in the list.
inline bool member_of(const std::vector<Inequality>& ineqs, const std::vector<Rational>& lam,
                      const std::vector<Rational>& mu, const std::vector<Rational>& nu) {
  Rational trace = 0;
  for (const auto* v : {&lam, &mu, &nu})
    for (const auto& x : *v) trace += x;
  if (trace != 0) return false;
  if (!weakly_decreasing(lam) || !weakly_decreasing(mu) || !weakly_decreasing(nu))
    return false;
  for (const auto& q : ineqs)
    if (!satisfies(q, lam, mu, nu)) return false;
  return true;
}

inline bool member(const std::vector<Rational>& lam, const std::vector<Rational>& mu,
                   const std::vector<Rational>& nu, int n) {
  for (const auto* v : {&lam, &mu, &nu})
    if (static_cast<int>(v->size()) != n)
      throw std::invalid_argument("vectors must have length " + std::to_string(n));
  return member_of(facets(n), lam, mu, nu);
}

}  // namespace bkp
