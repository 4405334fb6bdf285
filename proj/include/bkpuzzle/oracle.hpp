#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "bkpuzzle/bigint.hpp"
#include "bkpuzzle/permutation.hpp"
#include "bkpuzzle/polynomial.hpp"
#include "bkpuzzle/word.hpp"

namespace bkp {

/// Which permutation indexes the Schubert polynomial of a word's class.
enum class SchubertIndexing : std::uint8_t { kDirect, kInverse };

inline constexpr SchubertIndexing kPinnedIndexing = SchubertIndexing::kDirect;

/// Memoised Schubert polynomials and cup-product structure constants.
/// Safe for concurrent use.
class SchubertOracle {
 public:
  explicit SchubertOracle(SchubertIndexing indexing = kPinnedIndexing)
      : indexing_(indexing) {}

  /// S_w, obtained from S_{w0} = x_1^{m-1} ... x_{m-1} by divided differences.
  Polynomial schubert(const Permutation& w) {
    return schubert_in(w.trimmed(), std::max(w.trimmed().size(), 1));
  }

  /// Coefficient of S_target in f: the constant term of d_target f, where
  /// d_target strips right descents of target one at a time.
  static BigInt schubert_coefficient(Polynomial f, const Permutation& target) {
    Permutation cur = target.trimmed();
    for (;;) {
      int i = 1;
      while (i < cur.size() && !cur.has_descent(i)) ++i;
      if (i >= cur.size()) break;
      f = f.divided_difference(i);
      if (f.is_zero()) return 0;
      cur = cur.times_simple(i);
    }
    return f.constant_term();
  }

  Permutation index_of(const Word& w) const {
    Permutation p = w_of(w);
    return indexing_ == SchubertIndexing::kDirect ? p : p.inverse();
  }

  /// c_{pi rho}^{sigma}: coefficient of [X_sigma] in [X_pi][X_rho].
  BigInt cup_constant(const Word& pi, const Word& rho, const Word& sigma) {
    if (content(pi) != content(rho) || content(pi) != content(sigma)) return 0;
    if (inversions(pi).total + inversions(rho).total != inversions(sigma).total) return 0;
    return schubert_coefficient(product(index_of(pi), index_of(rho)), index_of(sigma));
  }

  SchubertIndexing indexing() const { return indexing_; }

 private:
  // S_w for w viewed inside S_m; any ascent i gives S_w = d_i S_{w s_i},
  // with w s_i one longer, until w0 is reached.
  Polynomial schubert_in(const Permutation& w, int m) {
    Permutation key = w.trimmed();
    {
      std::shared_lock lock(mu_);
      auto it = schubert_.find(key);
      if (it != schubert_.end()) return it->second;
    }
    Polynomial p;
    if (w == Permutation::longest(m)) {
      p = Polynomial::staircase(m);
    } else {
      std::vector<int> full = w.one_line();
      for (int v = static_cast<int>(full.size()) + 1; v <= m; ++v) full.push_back(v);
      int i = 1;
      while (full[i - 1] > full[i]) ++i;
      std::swap(full[i - 1], full[i]);
      p = schubert_in(Permutation(full), m).divided_difference(i);
    }
    std::unique_lock lock(mu_);
    return schubert_.try_emplace(key, std::move(p)).first->second;
  }

  Polynomial product(const Permutation& u, const Permutation& v) {
    auto key = std::make_pair(u.trimmed(), v.trimmed());
    if (key.second < key.first) std::swap(key.first, key.second);
    {
      std::shared_lock lock(mu_);
      auto it = products_.find(key);
      if (it != products_.end()) return it->second;
    }
    Polynomial p = schubert(key.first) * schubert(key.second);
    std::unique_lock lock(mu_);
    return products_.try_emplace(key, std::move(p)).first->second;
  }

  SchubertIndexing indexing_;
  std::shared_mutex mu_;
  std::map<Permutation, Polynomial> schubert_;
  std::map<std::pair<Permutation, Permutation>, Polynomial> products_;
};

/// Process-wide oracle with the pinned indexing.
inline SchubertOracle& default_oracle() {
  static SchubertOracle oracle;
  return oracle;
}

inline Polynomial schubert(const Permutation& w) { return default_oracle().schubert(w); }

inline BigInt cup_constant(const Word& pi, const Word& rho, const Word& sigma) {
  return default_oracle().cup_constant(pi, rho, sigma);
}

/// inv_ij(pi) + inv_ij(rho) == inv_ij(sigma) for every i > j.
inline bool inversions_additive(const Word& pi, const Word& rho, const Word& sigma) {
  if (content(pi) != content(rho) || content(pi) != content(sigma)) return false;
  auto a = inversions(pi), b = inversions(rho), c = inversions(sigma);
  for (int i = 2; i <= pi.alphabet(); ++i)
    for (int j = 1; j < i; ++j)
      if (a.at(i, j) + b.at(i, j) != c.at(i, j)) return false;
  return true;
}

/// Belkale-Kumar constant: the cup constant when inversions are additive
/// pair by pair, 0 otherwise.
inline BigInt bk_constant(const Word& pi, const Word& rho, const Word& sigma,
                          SchubertOracle& oracle = default_oracle()) {
  if (!inversions_additive(pi, rho, sigma)) return 0;
  return oracle.cup_constant(pi, rho, sigma);
}

struct CriterionPair {
  bool pairwise = false;  // every inv_ij additive
  bool per_cut = false;   // sum over j <= l < i vanishes for every l
};

/// Evaluates both Levi-movability criteria. Requires a nonzero cup constant.
inline CriterionPair criterion_equiv(const Word& pi, const Word& rho, const Word& sigma,
                                     SchubertOracle& oracle = default_oracle()) {
  if (oracle.cup_constant(pi, rho, sigma) == 0)
    throw std::invalid_argument("criterion_equiv needs a nonzero cup constant");
  auto a = inversions(pi), b = inversions(rho), c = inversions(sigma);
  const int d = pi.alphabet();
  CriterionPair out;
  out.pairwise = inversions_additive(pi, rho, sigma);
  out.per_cut = true;
  for (int l = 1; l < d; ++l) {
    int sum = 0;
    for (int j = 1; j <= l; ++j)
      for (int i = l + 1; i <= d; ++i) sum += a.at(i, j) + b.at(i, j) - c.at(i, j);
    if (sum != 0) out.per_cut = false;
  }
  return out;
}

}  // namespace bkp
