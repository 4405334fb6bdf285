#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bkpuzzle/permutation.hpp"

namespace bkp {

/// Letter multiplicities (n_1, ..., n_d).
using Content = std::vector<int>;

/// Sorted set of letters, used for deflation.
using LetterSet = std::vector<int>;

/// A word sigma_1 ... sigma_n over the ordered alphabet {1..d}.
class Word {
 public:
  Word() = default;

  Word(std::vector<int> letters, int alphabet)
      : letters_(std::move(letters)), alphabet_(alphabet) {
    if (alphabet_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
    for (int c : letters_)
      if (c < 1 || c > alphabet_)
        throw std::invalid_argument("letter " + std::to_string(c) +
                                    " outside alphabet 1.." +
                                    std::to_string(alphabet_));
  }

  /// Parses "12132" (one digit per letter) or "1,2,10,3". When alphabet is 0
  /// the alphabet size is the largest letter present.
  static Word parse(std::string_view text, int alphabet = 0) {
    std::vector<int> letters;
    if (text.find(',') != std::string_view::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view tok = text.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("empty letter in word");
        int v = 0;
        for (char ch : tok) {
          if (ch < '0' || ch > '9')
            throw std::invalid_argument("bad character in word: " +
                                        std::string(text));
          v = v * 10 + (ch - '0');
          if (v > 1000) throw std::invalid_argument("letter too large");
        }
        letters.push_back(v);
        pos = next + 1;
      }
    } else {
      for (char ch : text) {
        if (ch < '1' || ch > '9')
          throw std::invalid_argument("bad character in word: " +
                                      std::string(text));
        letters.push_back(ch - '0');
      }
    }
    if (alphabet == 0) {
      alphabet = 1;
      for (int c : letters) alphabet = std::max(alphabet, c);
    }
    return Word(std::move(letters), alphabet);
  }

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int alphabet() const { return alphabet_; }
  int operator[](int i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  /// Same letters over a larger alphabet.
  Word widened(int alphabet) const {
    if (alphabet < alphabet_) throw std::invalid_argument("cannot shrink alphabet");
    return Word(letters_, alphabet);
  }

  /// ASCII digits when d <= 9, comma-separated integers otherwise.
  std::string to_string() const {
    std::string s;
    if (alphabet_ <= 9) {
      for (int c : letters_) s += static_cast<char>('0' + c);
    } else {
      for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(letters_[i]);
      }
    }
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
  int alphabet_ = 1;
};

inline Content content(const Word& w) {
  Content counts(w.alphabet(), 0);
  for (int c : w.letters()) ++counts[c - 1];
  return counts;
}

/// Positions of the 1s in order, then the 2s, and so on.
inline Permutation w_of(const Word& w) {
  std::vector<int> one_line;
  one_line.reserve(w.size());
  for (int c = 1; c <= w.alphabet(); ++c)
    for (int p = 0; p < w.size(); ++p)
      if (w[p] == c) one_line.push_back(p + 1);
  return Permutation(std::move(one_line));
}

/// inv_ij for i > j, plus the total and the Y statistic (inv_21, ..., inv_d1).
struct InversionTable {
  int alphabet = 0;
  std::vector<int> by_pair;  // row-major d x d, entry (i-1)*d + (j-1)
  int total = 0;
  std::vector<int> y_stat;

  int at(int i, int j) const { return by_pair[(i - 1) * alphabet + (j - 1)]; }
};

/// Counts position pairs a < b with w_a = i > j = w_b.
inline InversionTable inversions(const Word& w) {
  const int d = w.alphabet();
  InversionTable t;
  t.alphabet = d;
  t.by_pair.assign(d * d, 0);
  std::vector<int> seen(d + 1, 0);  // letters seen so far
  for (int b = 0; b < w.size(); ++b) {
    int j = w[b];
    for (int i = j + 1; i <= d; ++i) t.by_pair[(i - 1) * d + (j - 1)] += seen[i];
    ++seen[j];
  }
  for (int i = 2; i <= d; ++i)
    for (int j = 1; j < i; ++j) t.total += t.at(i, j);
  for (int i = 2; i <= d; ++i) t.y_stat.push_back(t.at(i, 1));
  return t;
}

inline void check_letter_set(const LetterSet& s, int alphabet) {
  if (s.empty()) throw std::invalid_argument("deflation letter set is empty");
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > alphabet)
      throw std::invalid_argument("deflation letter outside alphabet");
    if (k > 0 && s[k] <= s[k - 1])
      throw std::invalid_argument("deflation letter set must be strictly increasing");
  }
}

/// Position of each letter inside s (1-based), 0 for letters not in s.
inline std::vector<int> letter_ranks(const LetterSet& s, int alphabet) {
  std::vector<int> rank(alphabet + 1, 0);
  for (std::size_t k = 0; k < s.size(); ++k) rank[s[k]] = static_cast<int>(k) + 1;
  return rank;
}

/// D_S: keeps the letters in s, renumbered 1..|s| in order.
inline Word deflate(const Word& w, const LetterSet& s) {
  check_letter_set(s, w.alphabet());
  auto rank = letter_ranks(s, w.alphabet());
  std::vector<int> out;
  for (int c : w.letters())
    if (rank[c]) out.push_back(rank[c]);
  return Word(std::move(out), static_cast<int>(s.size()));
}

/// An ordered partition of {1..d} into consecutive intervals.
class Ambiguator {
 public:
  /// classes must be intervals listed in increasing order, covering 1..d.
  static Ambiguator from_classes(const std::vector<std::vector<int>>& classes,
                                 int alphabet) {
    Ambiguator a;
    a.class_of_.assign(alphabet + 1, 0);
    int next = 1;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto& cls = classes[k];
      if (cls.empty()) throw std::invalid_argument("empty ambiguation class");
      for (int c : cls) {
        if (c != next)
          throw std::invalid_argument(
              "ambiguation classes must be consecutive intervals of 1..d");
        a.class_of_[c] = static_cast<int>(k) + 1;
        ++next;
      }
    }
    if (next != alphabet + 1)
      throw std::invalid_argument("ambiguation classes do not cover 1..d");
    a.classes_ = static_cast<int>(classes.size());
    a.alphabet_ = alphabet;
    return a;
  }

  /// A_{i]}: {1..i} and {i+1..d}.
  static Ambiguator cut(int i, int alphabet) {
    if (i < 1 || i >= alphabet) throw std::invalid_argument("cut outside 1..d-1");
    std::vector<int> lo, hi;
    for (int c = 1; c <= i; ++c) lo.push_back(c);
    for (int c = i + 1; c <= alphabet; ++c) hi.push_back(c);
    return from_classes({lo, hi}, alphabet);
  }

  static Ambiguator singletons(int alphabet) {
    std::vector<std::vector<int>> classes;
    for (int c = 1; c <= alphabet; ++c) classes.push_back({c});
    return from_classes(classes, alphabet);
  }

  static Ambiguator single_class(int alphabet) {
    std::vector<int> all;
    for (int c = 1; c <= alphabet; ++c) all.push_back(c);
    return from_classes({all}, alphabet);
  }

  int alphabet() const { return alphabet_; }
  int class_count() const { return classes_; }
  int class_of(int letter) const { return class_of_[letter]; }

  /// Letters of class k (1-based), in order.
  LetterSet members(int k) const {
    LetterSet out;
    for (int c = 1; c <= alphabet_; ++c)
      if (class_of_[c] == k) out.push_back(c);
    return out;
  }

 private:
  std::vector<int> class_of_;
  int classes_ = 0;
  int alphabet_ = 0;
};

/// A_~: each letter replaced by its class index.
inline Word ambiguate(const Word& w, const Ambiguator& a) {
  if (a.alphabet() != w.alphabet())
    throw std::invalid_argument("ambiguator alphabet does not match word");
  std::vector<int> out;
  out.reserve(w.size());
  for (int c : w.letters()) out.push_back(a.class_of(c));
  return Word(std::move(out), a.class_count());
}

/// The reversed word.
inline Word dual(const Word& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out), w.alphabet());
}

/// i -> d+1-i.
inline Word relabel_reversed(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int c : w.letters()) out.push_back(w.alphabet() + 1 - c);
  return Word(std::move(out), w.alphabet());
}

/// Every word with the given content, in lexicographic order.
inline std::vector<Word> words_with_content(const Content& c) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < c.size(); ++i)
    letters.insert(letters.end(), c[i], static_cast<int>(i) + 1);
  std::vector<Word> out;
  const int d = std::max<int>(1, static_cast<int>(c.size()));
  do {
    out.emplace_back(letters, d);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

/// Compositions of n into exactly d positive parts.
inline std::vector<Content> positive_contents(int n, int d) {
  std::vector<Content> out;
  Content cur;
  auto rec = [&](auto&& self, int left, int parts) -> void {
    if (parts == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = 1; v <= left - (parts - 1); ++v) {
      cur.push_back(v);
      self(self, left - v, parts - 1);
      cur.pop_back();
    }
  };
  if (d >= 1 && n >= d) rec(rec, n, d);
  return out;
}

}  // namespace bkp
