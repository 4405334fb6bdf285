#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "bkpuzzle/bigint.hpp"

namespace bkp {

inline constexpr int kMaxVariables = 16;

/// Exponent vector over x_1..x_16.
using Monomial = std::array<std::uint8_t, kMaxVariables>;

inline int degree(const Monomial& m) {
  int s = 0;
  for (auto e : m) s += e;
  return s;
}

/// Polynomial in x_1, x_2, ... with exact integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  Polynomial() = default;

  static Polynomial constant(const BigInt& c) {
    Polynomial p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
  }

  static Polynomial monomial(const Monomial& m, const BigInt& c = 1) {
    Polynomial p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  /// x_1^{m-1} x_2^{m-2} ... x_{m-1}.
  static Polynomial staircase(int m) {
    if (m > kMaxVariables) throw std::invalid_argument("too many variables");
    Monomial mono{};
    for (int i = 0; i + 1 < m; ++i) mono[i] = static_cast<std::uint8_t>(m - 1 - i);
    return monomial(mono);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  BigInt constant_term() const { return coefficient(Monomial{}); }

  /// Degree of a homogeneous polynomial; -1 for zero; throws otherwise.
  int homogeneous_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
      int dm = degree(m);
      if (deg >= 0 && dm != deg) throw std::logic_error("polynomial is not homogeneous");
      deg = dm;
    }
    return deg;
  }

  void add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }

  friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    Polynomial out;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) {
        Monomial m;
        for (int k = 0; k < kMaxVariables; ++k) {
          int e = mx[k] + my[k];
          if (e > 255) throw std::overflow_error("exponent overflow");
          m[k] = static_cast<std::uint8_t>(e);
        }
        out.add_term(m, cx * cy);
      }
    return out;
  }

  /// (f - s_i f) / (x_i - x_{i+1}), i >= 1, computed monomial by monomial:
  /// x_i^a x_{i+1}^b with a > b maps to (x_i x_{i+1})^b h_{a-b-1}(x_i, x_{i+1}).
  Polynomial divided_difference(int i) const {
    if (i < 1 || i >= kMaxVariables) throw std::out_of_range("divided difference index");
    Polynomial out;
    const int p = i - 1, q = i;
    for (const auto& [m, c] : terms_) {
      int a = m[p], b = m[q];
      if (a == b) continue;
      int lo = a < b ? a : b, gap = a < b ? b - a : a - b;
      BigInt sign = a > b ? BigInt(1) : BigInt(-1);
      for (int t = 0; t < gap; ++t) {
        Monomial r = m;
        r[p] = static_cast<std::uint8_t>(lo + gap - 1 - t);
        r[q] = static_cast<std::uint8_t>(lo + t);
        out.add_term(r, sign * c);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      BigInt a = c < 0 ? BigInt(-c) : c;
      bool unit = true;
      for (auto e : m) unit = unit && e == 0;
      if (a != 1 || unit) s += a.str();
      for (int k = 0; k < kMaxVariables; ++k) {
        if (!m[k]) continue;
        s += "x" + std::to_string(k + 1);
        if (m[k] > 1) s += "^" + std::to_string(m[k]);
      }
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace bkp
