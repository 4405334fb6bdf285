#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bkp {

/// A permutation of {1..m} in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int v : w_) {
      if (v < 1 || v > static_cast<int>(w_.size()) || seen[v])
        throw std::invalid_argument("not a permutation in one-line notation");
      seen[v] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  static Permutation longest(int m) {
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = m - i;
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(w_.size()); }

  /// Value at position i (1-based); fixes i beyond the support.
  int operator()(int i) const { return i <= size() ? w_[i - 1] : i; }

  const std::vector<int>& one_line() const { return w_; }

  int length() const {
    int inv = 0;
    for (int p = 0; p < size(); ++p)
      for (int q = p + 1; q < size(); ++q)
        if (w_[p] > w_[q]) ++inv;
    return inv;
  }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (int p = 0; p < size(); ++p) inv[w_[p] - 1] = p + 1;
    return Permutation(std::move(inv));
  }

  bool has_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

  /// Right multiplication by the simple transposition s_i (swaps positions).
  Permutation times_simple(int i) const {
    std::vector<int> w = w_;
    int m = std::max(size(), i + 1);
    for (int v = size() + 1; v <= m; ++v) w.push_back(v);
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w)).trimmed();
  }

  /// Drops trailing fixed points, so S_m and S_{m+1} copies compare equal.
  Permutation trimmed() const {
    std::vector<int> w = w_;
    while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
    Permutation out;
    out.w_ = std::move(w);
    return out;
  }

  /// A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}, found by
  /// repeatedly stripping the first right descent.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation cur = *this;
    for (;;) {
      int i = 1;
      while (i < cur.size() && !cur.has_descent(i)) ++i;
      if (i >= cur.size()) break;
      word.push_back(i);
      cur = cur.times_simple(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  std::string to_string() const {
    std::string s;
    bool wide = size() > 9;
    for (int p = 0; p < size(); ++p) {
      if (wide && p > 0) s += ',';
      s += std::to_string(w_[p]);
    }
    return s;
  }

  friend bool operator==(const Permutation& x, const Permutation& y) {
    return x.trimmed().w_ == y.trimmed().w_;
  }
  friend auto operator<=>(const Permutation& x, const Permutation& y) {
    return x.trimmed().w_ <=> y.trimmed().w_;
  }

 private:
  std::vector<int> w_;
};

}  // namespace bkp
