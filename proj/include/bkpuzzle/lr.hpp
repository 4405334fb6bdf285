#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bkpuzzle/bigint.hpp"
#include "bkpuzzle/word.hpp"

namespace bkp {

/// Weakly decreasing non-negative parts; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("negative partition part");
      if (i && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must weakly decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  const std::vector<int>& parts() const { return parts_; }

  bool fits_box(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_[0] <= cols);
  }

  bool contains(const Partition& o) const {
    if (o.length() > length()) return false;
    for (int i = 0; i < o.length(); ++i)
      if (o[i] > (*this)[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++out[c];
    return Partition(std::move(out));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Number of LR tableaux of shape outer/inner and content mu: semistandard
/// fillings whose reverse reading word (rows top to bottom, each read right
/// to left) is a lattice word.
inline BigInt lr_coefficient(const Partition& inner, const Partition& mu,
                             const Partition& outer) {
  if (!outer.contains(inner)) return 0;
  if (inner.weight() + mu.weight() != outer.weight()) return 0;
  const int rows = outer.length();
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(outer[r], 0);
  // Cells in reverse reading order.
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = outer[r] - 1; c >= inner[r]; --c) cells.push_back({r, c});
  std::vector<int> used(mu.length() + 2, 0);
  std::uint64_t count = 0;
  auto place = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1, hi = mu.length();
    if (c + 1 < outer[r]) hi = std::min(hi, t[r][c + 1]);  // rows weakly increase
    if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice condition
      t[r][c] = v;
      ++used[v];
      self(self, k + 1);
      --used[v];
    }
    t[r][c] = 0;
  };
  place(place, 0);
  return BigInt(count);
}

/// c_{lambda,mu}^{nu} for partitions in the rows x cols box.
inline BigInt lr_tableau(const Partition& lambda, const Partition& mu,
                         const Partition& nu, int rows, int cols) {
  for (const Partition* p : {&lambda, &mu, &nu})
    if (!p->fits_box(rows, cols))
      throw std::invalid_argument("partition " + p->to_string() + " outside the " +
                                  std::to_string(rows) + "x" + std::to_string(cols) +
                                  " box");
  return lr_coefficient(lambda, mu, nu);
}

/// Dimension of the GL_n invariants in V_lam (x) V_mu (x) V_nu for weakly
/// decreasing integer vectors: c_{lam,mu}^{nu*} after shifting all three
/// into partitions, where nu* = (-nu_n, ..., -nu_1).
inline BigInt invariant_count(const std::vector<int>& lam, const std::vector<int>& mu,
                              const std::vector<int>& nu) {
  const std::size_t n = lam.size();
  if (mu.size() != n || nu.size() != n) throw std::invalid_argument("length mismatch");
  if (n == 0) return 1;
  for (const auto* v : {&lam, &mu, &nu})
    if (!std::is_sorted(v->begin(), v->end(), std::greater<>()))
      throw std::invalid_argument("weights must weakly decrease");
  const int a = lam.back(), b = mu.back();
  std::vector<int> l, m, t;
  for (std::size_t i = 0; i < n; ++i) {
    l.push_back(lam[i] - a);
    m.push_back(mu[i] - b);
    t.push_back(-nu[n - 1 - i] - a - b);
  }
  if (t.back() < 0) return 0;
  int sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += lam[i] + mu[i] + nu[i];
  if (sum != 0) return 0;
  return lr_coefficient(Partition(l), Partition(m), Partition(t));
}

/// Two standard ways to read a partition off a two-letter word; both have
/// weight inv_21.
enum class PartitionReading : std::uint8_t {
  kRowsFromOnes,  // one row per 1: number of 2s before it (k x (n-k) box)
  kRowsFromTwos,  // one row per 2: number of 1s after it (the conjugate)
};

inline constexpr PartitionReading kPinnedReading = PartitionReading::kRowsFromOnes;

/// Partition indexing the Grassmannian class of a word of content (k, n-k).
inline Partition word_partition(const Word& w, int k, int n,
                                PartitionReading reading = kPinnedReading) {
  if (w.size() != n) throw std::invalid_argument("word length is not n");
  if (w.alphabet() > 2) throw std::invalid_argument("word_partition needs a 2-letter word");
  Content c = content(w);
  int ones = c[0], twos = w.alphabet() > 1 ? c[1] : 0;
  if (ones != k || twos != n - k)
    throw std::invalid_argument("word content is not (k, n-k)");
  std::vector<int> parts;
  if (reading == PartitionReading::kRowsFromOnes) {
    int twos_seen = 0;
    for (int p = 0; p < n; ++p) {
      if (w[p] == 2) ++twos_seen;
      else parts.push_back(twos_seen);
    }
  } else {
    int ones_after = k;
    for (int p = 0; p < n; ++p) {
      if (w[p] == 1) --ones_after;
      else parts.push_back(ones_after);
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace bkp
