#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bkpuzzle/bigint.hpp"
#include "bkpuzzle/board.hpp"
#include "bkpuzzle/enumerate.hpp"
#include "bkpuzzle/word.hpp"

namespace bkp {

/// Letter pairs (i,j), i > j, in the order (2,1), (3,1), (3,2), (4,1), ...
inline std::vector<std::pair<int, int>> letter_pairs(int d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 2; i <= d; ++i)
    for (int j = 1; j < i; ++j) out.push_back({i, j});
  return out;
}

inline TripleKey deflate_key(const TripleKey& key, const LetterSet& s) {
  return {deflate(key.nw, s), deflate(key.ne, s), deflate(key.s, s)};
}

inline TripleKey ambiguate_key(const TripleKey& key, const Ambiguator& a) {
  return {ambiguate(key.nw, a), ambiguate(key.ne, a), ambiguate(key.s, a)};
}

struct PairFactor {
  int i = 0, j = 0;
  TripleKey key;  // the triple deflated to {j, i}, letters renumbered 1, 2
  BigInt count;
};

struct FactorReport {
  bool same_content = false;
  std::vector<std::pair<int, int>> violated;  // pairs where inv_ij is not additive
  std::vector<PairFactor> factors;
  BigInt product;
  BigInt count;
  bool equal = false;  // product == count, or count == 0 when some pair is violated

  bool additive() const { return same_content && violated.empty(); }
};

/// Compares the puzzle count with the product of its Grassmannian deflations.
inline FactorReport factor_check(const TripleKey& key) {
  key.check();
  FactorReport r;
  const int d = key.alphabet();
  r.count = count_puzzles(key);
  r.same_content = content(key.nw) == content(key.ne) && content(key.nw) == content(key.s);
  if (!r.same_content) {
    r.equal = r.count == 0;
    return r;
  }
  auto a = inversions(key.nw), b = inversions(key.ne), c = inversions(key.s);
  r.product = 1;
  for (auto [i, j] : letter_pairs(d)) {
    if (a.at(i, j) + b.at(i, j) != c.at(i, j)) r.violated.push_back({i, j});
    TripleKey k = deflate_key(key, {j, i});
    BigInt cnt = count_puzzles(k);
    r.product *= cnt;
    r.factors.push_back({i, j, std::move(k), std::move(cnt)});
  }
  r.equal = r.violated.empty() ? r.product == r.count : r.count == 0;
  return r;
}

/// (D_ij p) for every pair i > j, in letter_pairs order.
inline std::vector<Puzzle> assembly_tuple(const Puzzle& p) {
  std::vector<Puzzle> out;
  for (auto [i, j] : letter_pairs(p.alphabet())) out.push_back(deflate_puzzle(p, {j, i}));
  return out;
}

struct CoarseReport {
  bool applicable = false;  // inv additivity holds for the key
  BigInt count;
  BigInt ambiguated;            // count of the A_~ triple
  std::vector<BigInt> blocks;   // count of each class deflation
  BigInt product;
  bool equal = false;
};

/// count(key) against count(A_~ key) times the counts of the class deflations.
inline CoarseReport coarse_check(const TripleKey& key, const Ambiguator& amb) {
  key.check();
  CoarseReport r;
  r.applicable = content(key.nw) == content(key.ne) && content(key.nw) == content(key.s);
  if (r.applicable) {
    auto a = inversions(key.nw), b = inversions(key.ne), c = inversions(key.s);
    for (auto [i, j] : letter_pairs(key.alphabet()))
      if (a.at(i, j) + b.at(i, j) != c.at(i, j)) r.applicable = false;
  }
  if (!r.applicable) return r;
  r.count = count_puzzles(key);
  r.ambiguated = count_puzzles(ambiguate_key(key, amb));
  r.product = r.ambiguated;
  for (int m = 1; m <= amb.class_count(); ++m) {
    r.blocks.push_back(count_puzzles(deflate_key(key, amb.members(m))));
    r.product *= r.blocks.back();
  }
  r.equal = r.product == r.count;
  return r;
}

}  // namespace bkp
