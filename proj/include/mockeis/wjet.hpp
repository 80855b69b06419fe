#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mockeis/errors.hpp"
#include "mockeis/qseries.hpp"

namespace mockeis {

/// Laurent polynomial sum_{d=min}^{max} c_d(q) w^d, w = 2 pi i z, whose
/// coefficients are truncated q-series of one common order.
///
/// The window [min_deg, max_deg] is the certified range: coefficients below
/// min_deg are exactly zero, coefficients above max_deg are unknown. Every
/// operation shrinks max_deg so that no reported coefficient depends on an
/// unknown one.
class WJet {
 public:
  WJet(int min_deg, int max_deg, int q_order) : min_(min_deg), q_order_(q_order) {
    if (max_deg < min_deg)
      throw WindowUnderflow("empty w-window [" + std::to_string(min_deg) + ", " +
                            std::to_string(max_deg) + "]");
    coeffs_.assign(static_cast<std::size_t>(max_deg - min_deg + 1), QSeries(q_order));
  }

  /// c(q) w^deg, known through w^max_deg.
  static WJet monomial(int deg, const QSeries& c, int max_deg) {
    WJet j(deg, std::max(deg, max_deg), c.order());
    j[deg] = c;
    if (max_deg < deg) throw WindowUnderflow("monomial above its own window");
    return j;
  }

  /// e^{c w} = sum c^i w^i / i! times the q-series s, through w^max_deg.
  static WJet exponential(const Rational& c, const QSeries& s, int max_deg) {
    WJet j(0, max_deg, s.order());
    Rational term = 1;
    for (int i = 0; i <= max_deg; ++i) {
      j[i] = s * term;
      term *= c;
      term /= i + 1;
    }
    return j;
  }

  int min_deg() const { return min_; }
  int max_deg() const { return min_ + static_cast<int>(coeffs_.size()) - 1; }
  int q_order() const { return q_order_; }

  /// Coefficient of w^d; zero below the window, error above it.
  QSeries coeff(int d) const {
    if (d < min_) return QSeries(q_order_);
    return (*this)[d];
  }

  const QSeries& operator[](int d) const { return coeffs_.at(index(d)); }
  QSeries& operator[](int d) { return coeffs_.at(index(d)); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QSeries& c) { return c.is_zero(); });
  }

  /// Exact multiplication by w^by.
  WJet shifted(int by) const {
    WJet out = *this;
    out.min_ += by;
    return out;
  }

  /// Restrict to [lo, hi]. hi may not exceed the certified maximum.
  WJet window(int lo, int hi) const {
    if (hi > max_deg())
      throw WindowUnderflow("requested w^" + std::to_string(hi) + " but only w^" +
                            std::to_string(max_deg()) + " is certified");
    if (lo > min_) {
      for (int d = min_; d < lo; ++d)
        if (!(*this)[d].is_zero()) throw InvalidArgument("window would drop nonzero coefficients");
    }
    WJet out(lo, hi, q_order_);
    for (int d = std::max(lo, min_); d <= hi; ++d) out[d] = (*this)[d];
    return out;
  }

  WJet& operator+=(const WJet& b) { return *this = combine(*this, b, 1); }
  WJet& operator-=(const WJet& b) { return *this = combine(*this, b, -1); }
  friend WJet operator+(const WJet& a, const WJet& b) { return combine(a, b, 1); }
  friend WJet operator-(const WJet& a, const WJet& b) { return combine(a, b, -1); }

  friend WJet operator-(WJet a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend WJet operator*(WJet a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend WJet operator*(const Rational& s, WJet a) { return std::move(a) * s; }

  /// Scaling by a q-series leaves degrees unchanged.
  friend WJet operator*(const QSeries& s, const WJet& a) {
    WJet out(a.min_, a.max_deg(), std::min(s.order(), a.q_order_));
    for (int d = a.min_; d <= a.max_deg(); ++d) out[d] = s * a[d];
    return out;
  }
  friend WJet operator*(const WJet& a, const QSeries& s) { return s * a; }

  /// Laurent convolution. Certified through
  /// min(a.max + b.min, b.max + a.min).
  friend WJet operator*(const WJet& a, const WJet& b) {
    const int lo = a.min_ + b.min_;
    const int hi = std::min(a.max_deg() + b.min_, b.max_deg() + a.min_);
    WJet out(lo, hi, std::min(a.q_order_, b.q_order_));
    for (int i = a.min_; i <= a.max_deg(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = b.min_; j <= b.max_deg() && i + j <= hi; ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  friend bool operator==(const WJet&, const WJet&) = default;

 private:
  std::size_t index(int d) const {
    if (d < min_ || d > max_deg())
      throw WindowUnderflow("w^" + std::to_string(d) + " outside window [" +
                            std::to_string(min_) + ", " + std::to_string(max_deg()) + "]");
    return static_cast<std::size_t>(d - min_);
  }

  static WJet combine(const WJet& a, const WJet& b, int sign) {
    const int lo = std::min(a.min_, b.min_);
    const int hi = std::min(a.max_deg(), b.max_deg());
    WJet out(lo, hi, std::min(a.q_order_, b.q_order_));
    for (int d = lo; d <= hi; ++d) {
      QSeries c = a.coeff(d);
      if (sign > 0)
        c += b.coeff(d);
      else
        c -= b.coeff(d);
      out[d] = c.truncated(out.q_order_);
    }
    return out;
  }

  int min_;
  int q_order_;
  std::vector<QSeries> coeffs_;
};

/// 1/a. The lowest window coefficient a_m must have a nonzero constant term;
/// the result lives on [-m, -m + (a.max - m)].
inline WJet inverse(const WJet& a) {
  const int m = a.min_deg();
  const int len = a.max_deg() - m;
  if (a[m][0] == 0) throw ZeroConstantTerm();
  WJet b(-m, -m + len, a.q_order());
  const QSeries v0 = inverse(a[m]);
  b[-m] = v0;
  for (int n = 1; n <= len; ++n) {
    QSeries acc(a.q_order());
    for (int i = 1; i <= n; ++i) acc += a[m + i] * b[-m + n - i];
    b[-m + n] = -(v0 * acc);
  }
  return b;
}

/// exp of a jet supported in degrees >= 1 (the w^0 coefficient must vanish).
inline WJet series_exp(const WJet& a) {
  if (a.min_deg() < 0) throw BadConstantTerm("exp of a jet with a pole");
  if (!a.coeff(0).is_zero()) throw BadConstantTerm("exp needs a jet with zero w^0 coefficient");
  const int top = a.max_deg();
  WJet b(0, top, a.q_order());
  b[0] = QSeries::constant(1, a.q_order());
  for (int n = 1; n <= top; ++n) {
    QSeries acc(a.q_order());
    for (int k = 1; k <= n; ++k) {
      QSeries ak = a.coeff(k);
      if (ak.is_zero()) continue;
      acc += (ak * b[n - k]) * Rational(k);
    }
    b[n] = acc * make_rational(1, n);
  }
  return b;
}

/// log of a jet whose w^0 coefficient is exactly 1 and which has no pole.
inline WJet series_log(const WJet& b) {
  if (b.min_deg() < 0) throw BadConstantTerm("log of a jet with a pole");
  if (b.coeff(0) != QSeries::constant(1, b.q_order()))
    throw BadConstantTerm("log needs a jet with w^0 coefficient 1");
  const int top = b.max_deg();
  WJet a(0, top, b.q_order());
  for (int n = 1; n <= top; ++n) {
    QSeries acc = b.coeff(n) * Rational(n);
    for (int k = 1; k < n; ++k) {
      if (a[k].is_zero()) continue;
      acc -= (a[k] * b.coeff(n - k)) * Rational(k);
    }
    a[n] = acc * make_rational(1, n);
  }
  return a;
}

/// d^2/dw^2; the window moves down by two.
inline WJet w_second_derivative(const WJet& a) {
  WJet out(a.min_deg() - 2, a.max_deg() - 2, a.q_order());
  for (int d = a.min_deg(); d <= a.max_deg(); ++d) out[d - 2] = a[d] * Rational(d * (d - 1));
  return out;
}

/// q d/dq on every coefficient.
inline WJet q_derivative(const WJet& a) {
  WJet out = a;
  for (int d = a.min_deg(); d <= a.max_deg(); ++d) out[d] = q_derivative(a[d]);
  return out;
}

}  // namespace mockeis
