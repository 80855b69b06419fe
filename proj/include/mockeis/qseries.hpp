#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mockeis/errors.hpp"
#include "mockeis/rational.hpp"

namespace mockeis {

/// Truncated power series a_0 + a_1 q + ... + a_N q^N with exact rational
/// coefficients. The order N is part of the value: a series knows nothing
/// about q^{N+1} and beyond, and binary operations truncate to the smaller
/// order of their operands.
class QSeries {
 public:
  QSeries() : coeffs_(1) {}

  explicit QSeries(int order) : coeffs_(checked_length(order)) {}

  explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidArgument("QSeries needs at least one coefficient");
  }

  static QSeries constant(const Rational& c, int order) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c q^e, or the zero series if e lies beyond the order.
  static QSeries monomial(const Rational& c, int e, int order) {
    if (e < 0) throw InvalidArgument("negative exponent in monomial");
    QSeries s(order);
    if (e <= order) s.coeffs_[static_cast<std::size_t>(e)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int n) const { return coeffs_.at(index(n)); }
  Rational& operator[](int n) { return coeffs_.at(index(n)); }

  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  }

  /// Drops coefficients above new_order. Raising the order is refused.
  QSeries truncated(int new_order) const {
    if (new_order > order()) throw InvalidArgument("cannot extend a truncated series");
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  QSeries& operator+=(const QSeries& b) {
    shrink_to(b.order());
    for (int n = 0; n <= order(); ++n) coeffs_[static_cast<std::size_t>(n)] += b[n];
    return *this;
  }

  QSeries& operator-=(const QSeries& b) {
    shrink_to(b.order());
    for (int n = 0; n <= order(); ++n) coeffs_[static_cast<std::size_t>(n)] -= b[n];
    return *this;
  }

  QSeries& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(QSeries a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

  // Schoolbook Cauchy product.
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n_max = std::min(a.order(), b.order());
    QSeries c(n_max);
    Rational t;
    for (int i = 0; i <= n_max; ++i) {
      const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (int j = 0; i + j <= n_max; ++j) {
        const Rational& bj = b.coeffs_[static_cast<std::size_t>(j)];
        if (bj == 0) continue;
        t = ai * bj;
        c.coeffs_[static_cast<std::size_t>(i + j)] += t;
      }
    }
    return c;
  }

  QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static std::size_t checked_length(int order) {
    if (order < 0) throw InvalidArgument("negative truncation order");
    return static_cast<std::size_t>(order) + 1;
  }

  std::size_t index(int n) const {
    if (n < 0 || n > order())
      throw std::out_of_range("coefficient q^" + std::to_string(n) + " outside order " +
                              std::to_string(order()));
    return static_cast<std::size_t>(n);
  }

  void shrink_to(int other_order) {
    if (other_order < order()) coeffs_.resize(static_cast<std::size_t>(other_order) + 1);
  }

  std::vector<Rational> coeffs_;
};

/// Multiplicative inverse up to the truncation order.
inline QSeries inverse(const QSeries& a) {
  if (a[0] == 0) throw ZeroConstantTerm();
  const int n_max = a.order();
  QSeries b(n_max);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  Rational acc;
  for (int n = 1; n <= n_max; ++n) {
    acc = 0;
    for (int i = 1; i <= n; ++i)
      if (a[i] != 0) acc += a[i] * b[n - i];
    b[n] = -acc * inv0;
  }
  return b;
}

/// exp(a) for a with a_0 = 0, from n b_n = sum_{k=1}^n k a_k b_{n-k}.
inline QSeries series_exp(const QSeries& a) {
  if (a[0] != 0) throw BadConstantTerm("exp needs a series with zero constant term");
  const int n_max = a.order();
  QSeries b(n_max);
  b[0] = 1;
  Rational acc;
  for (int n = 1; n <= n_max; ++n) {
    acc = 0;
    for (int k = 1; k <= n; ++k)
      if (a[k] != 0) acc += k * a[k] * b[n - k];
    b[n] = acc / n;
  }
  return b;
}

/// log(b) for b with b_0 = 1; inverse of series_exp.
inline QSeries series_log(const QSeries& b) {
  if (b[0] != 1) throw BadConstantTerm("log needs a series with constant term 1");
  const int n_max = b.order();
  QSeries a(n_max);
  Rational acc;
  for (int n = 1; n <= n_max; ++n) {
    acc = n * b[n];
    for (int k = 1; k < n; ++k)
      if (a[k] != 0) acc -= k * a[k] * b[n - k];
    a[n] = acc / n;
  }
  return a;
}

/// D = q d/dq.
inline QSeries q_derivative(QSeries a) {
  for (int n = 0; n <= a.order(); ++n) a[n] *= n;
  return a;
}

/// (q;q)_inf = prod_{k>=1} (1 - q^k), as the finite product over k <= N.
inline QSeries euler_product(int order) {
  QSeries s = QSeries::constant(1, order);
  for (int k = 1; k <= order; ++k)
    for (int n = order; n >= k; --n) s[n] -= s[n - k];
  return s;
}

/// (q;q)_inf by the pentagonal number theorem:
/// sum_n (-1)^n q^{n(3n-1)/2} over all integers n.
inline QSeries euler_product_pentagonal(int order) {
  QSeries s(order);
  s[0] = 1;
  for (int n = 1;; ++n) {
    const int e1 = n * (3 * n - 1) / 2;
    const int e2 = n * (3 * n + 1) / 2;
    if (e1 > order) break;
    const int sign = (n % 2 == 0) ? 1 : -1;
    s[e1] += sign;
    if (e2 <= order) s[e2] += sign;
  }
  return s;
}

/// Human-readable form, e.g. "-1/24 + q^3 + 3q^4 - q^7".
inline std::string to_string(const QSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    const Rational& c = s[n];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (n == 0) {
      term = to_string(mag);
    } else {
      if (mag != 1) term = to_string(mag);
      term += (n == 1) ? "q" : "q^" + std::to_string(n);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace mockeis
