#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bkpuzzle/bigint.hpp"
#include "bkpuzzle/board.hpp"
#include "bkpuzzle/word.hpp"

namespace bkp {

/// Boundary data (NW, NE, S) of a puzzle count.
struct TripleKey {
  Word nw, ne, s;

  int size() const { return nw.size(); }
  int alphabet() const { return nw.alphabet(); }

  void check() const {
    if (nw.size() != ne.size() || nw.size() != s.size())
      throw std::invalid_argument("boundary words have different lengths");
    if (nw.alphabet() != ne.alphabet() || nw.alphabet() != s.alphabet())
      throw std::invalid_argument("boundary words use different alphabets");
  }

  std::string to_string() const {
    return nw.to_string() + " " + ne.to_string() + " " + s.to_string();
  }

  friend bool operator==(const TripleKey&, const TripleKey&) = default;
  friend auto operator<=>(const TripleKey&, const TripleKey&) = default;
};

/// Builds a key from three words, widening them to a common alphabet.
inline TripleKey make_key(const Word& nw, const Word& ne, const Word& s) {
  int d = std::max({nw.alphabet(), ne.alphabet(), s.alphabet()});
  TripleKey k{nw.widened(d), ne.widened(d), s.widened(d)};
  k.check();
  return k;
}

inline TripleKey parse_key(const std::string& nw, const std::string& ne,
                           const std::string& s) {
  return make_key(Word::parse(nw), Word::parse(ne), Word::parse(s));
}

enum class EnumerateMode { kCount, kList };

struct EnumerateResult {
  BigInt count;
  std::vector<Puzzle> puzzles;  // filled in list mode, sorted
};

/// Depth-first tiling search. Rows are filled from the S side upward; within a
/// row each up cell's right edge is forced by its bottom and left edges, so
/// branching only happens at down cells. Completed rows are memoised on the
/// labels of their top edges.
class Enumerator {
 public:
  explicit Enumerator(int alphabet, Chirality chir = kPinnedChirality)
      : d_(alphabet), chir_(chir), width_(alphabet + 1) {
    std::vector<Label> singles, pairs;
    for (int i = 1; i <= d_; ++i) singles.push_back(Label::single(i));
    for (int i = 2; i <= d_; ++i)
      for (int j = 1; j < i; ++j) pairs.push_back(Label::pair(i, j));
    up_.assign(width_ * width_ * width_ * width_, {});
    down_.assign(width_ * width_, {});
    auto add = [&](Label x, Label y, Label z) {
      // up cell: clockwise (right, bottom, left); down cell: (top, right, left)
      up_[code(y) * width_ * width_ + code(z)].push_back(x);
      down_[code(z)].push_back({x, y});
    };
    for (Label c : singles) add(c, c, c);
    for (Label p : pairs) {
      auto [c1, c2] = clockwise_after_pair(p, chir_);
      Label a = Label::single(c1), b = Label::single(c2);
      add(p, a, b);
      add(b, p, a);
      add(a, b, p);
    }
    for (auto& v : up_) std::sort(v.begin(), v.end());
    for (auto& v : down_) std::sort(v.begin(), v.end());
  }

  EnumerateResult run(const TripleKey& key, EnumerateMode mode) {
    key.check();
    if (key.alphabet() != d_) throw std::invalid_argument("key alphabet mismatch");
    key_ = &key;
    n_ = key.size();
    memo_.assign(n_ + 1, {});
    work_ = Puzzle(n_, d_);
    for (int t = 0; t < n_; ++t) {
      work_.set(nw_side_edge(n_, t), Label::single(key.nw[t]));
      work_.set(ne_side_edge(n_, t), Label::single(key.ne[t]));
      work_.set(s_side_edge(n_, t), Label::single(key.s[t]));
    }
    std::vector<Label> bottom;
    for (int t = 0; t < n_; ++t) bottom.push_back(Label::single(key.s[t]));

    EnumerateResult out;
    out.count = count_rows(0, bottom);
    if (mode == EnumerateMode::kList && out.count > 0) {
      list_rows(0, bottom, out.puzzles);
      std::sort(out.puzzles.begin(), out.puzzles.end());
      if (std::adjacent_find(out.puzzles.begin(), out.puzzles.end()) != out.puzzles.end())
        throw std::logic_error("enumeration produced a duplicate puzzle");
      if (BigInt(out.puzzles.size()) != out.count)
        throw std::logic_error("list size disagrees with count");
    }
    key_ = nullptr;
    return out;
  }

 private:
  int code(Label l) const { return l.hi * width_ + l.lo; }

  std::string state_key(const std::vector<Label>& row) const {
    std::string s;
    s.reserve(row.size());
    for (Label l : row) s.push_back(static_cast<char>(code(l)));
    return s;
  }

  /// Walks every filling of row b, calling done(top) for each; the current
  /// filling is held in work_.
  void fill_row(int b, const std::vector<Label>& bottom,
                const std::function<void(const std::vector<Label>&)>& done) {
    const int last = n_ - 1 - b;
    std::vector<Label> top;
    top.reserve(last);
    const Label right_boundary = Label::single(key_->ne[n_ - 1 - b]);
    auto step = [&](auto&& self, int a, Label left) -> void {
      const auto& rights = up_[code(bottom[a]) * width_ * width_ + code(left)];
      for (Label r : rights) {
        if (a == last) {
          if (r == right_boundary) done(top);
          continue;
        }
        work_.set({a + 1, b, Dir::kNW}, r);
        for (auto [t, rr] : down_[code(r)]) {
          work_.set({a, b + 1, Dir::kE}, t);
          work_.set({a + 1, b, Dir::kNE}, rr);
          top.push_back(t);
          self(self, a + 1, rr);
          top.pop_back();
        }
      }
    };
    step(step, 0, Label::single(key_->nw[b]));
  }

  BigInt count_rows(int b, const std::vector<Label>& bottom) {
    if (b == n_) return 1;
    std::string k = state_key(bottom);
    auto it = memo_[b].find(k);
    if (it != memo_[b].end()) return it->second;
    BigInt total = 0;
    fill_row(b, bottom, [&](const std::vector<Label>& top) { total += count_rows(b + 1, top); });
    memo_[b].emplace(std::move(k), total);
    return total;
  }

  void list_rows(int b, const std::vector<Label>& bottom, std::vector<Puzzle>& out) {
    if (b == n_) {
      out.push_back(work_);
      return;
    }
    fill_row(b, bottom, [&](const std::vector<Label>& top) {
      if (count_rows(b + 1, top) > 0) list_rows(b + 1, top, out);
    });
  }

  int d_;
  Chirality chir_;
  int width_;
  std::vector<std::vector<Label>> up_;
  std::vector<std::vector<std::pair<Label, Label>>> down_;

  const TripleKey* key_ = nullptr;
  int n_ = 0;
  Puzzle work_;
  std::vector<std::unordered_map<std::string, BigInt>> memo_;
};

inline EnumerateResult enumerate(const TripleKey& key, EnumerateMode mode,
                                 Chirality chir = kPinnedChirality) {
  key.check();
  Enumerator e(key.alphabet(), chir);
  return e.run(key, mode);
}

inline BigInt count_puzzles(const TripleKey& key, Chirality chir = kPinnedChirality) {
  return enumerate(key, EnumerateMode::kCount, chir).count;
}

inline std::vector<Puzzle> list_puzzles(const TripleKey& key,
                                        Chirality chir = kPinnedChirality) {
  return enumerate(key, EnumerateMode::kList, chir).puzzles;
}

}  // namespace bkp
