#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "mockeis/bernoulli.hpp"
#include "mockeis/errors.hpp"
#include "mockeis/partition.hpp"
#include "mockeis/qseries.hpp"
#include "mockeis/rational.hpp"
#include "mockeis/wjet.hpp"

namespace mockeis {

// ---------------------------------------------------------------------------
// Eisenstein and theta series
// ---------------------------------------------------------------------------

/// G_j = -B_j/(2j) + sum sigma_{j-1}(n) q^n for even j >= 2; the zero series
/// for odd j.
inline QSeries eisenstein(int j, int order) {
  if (j < 1) throw InvalidArgument("Eisenstein weight must be positive");
  QSeries g(order);
  if (j % 2 != 0) return g;
  g[0] = -bernoulli(j) / (2 * j);
  for (int d = 1; d <= order; ++d) {
    const Integer pw = ipow(d, static_cast<unsigned>(j - 1));
    for (int n = d; n <= order; n += d) g[n] += pw;
  }
  return g;
}

namespace detail {

// Calls visit(n, exponent) for every n whose exponent (b n^2 + a n)/2 is at
// most `order`. Every such exponent must be a non-negative integer.
template <typename Visitor>
void for_each_theta_term(int a, int b, int order, Visitor&& visit) {
  if (b < 1) throw InvalidArgument("theta needs b >= 1");
  const long reach = std::labs(a) + 2L * order + 2;
  for (long n = -reach; n <= reach; ++n) {
    const long twice = b * n * n + a * n;
    if (twice > 2L * order) continue;
    if (twice < 0 || twice % 2 != 0)
      throw FractionalExponent("theta_{" + std::to_string(a) + "," + std::to_string(b) +
                               "} has exponent " + std::to_string(twice) + "/2 at n = " +
                               std::to_string(n));
    visit(n, static_cast<int>(twice / 2));
  }
}

}  // namespace detail

/// theta_{a,b} = sum_n (-1)^n q^{(b n^2 + a n)/2}.
inline QSeries theta(int a, int b, int order) {
  QSeries s(order);
  detail::for_each_theta_term(a, b, order, [&](long n, int e) { s[e] += (n % 2 == 0) ? 1 : -1; });
  return s;
}

/// theta^{[m]}_{a,b} = ((1/pi i) d/dtau)^m theta_{a,b}
///                   = sum_n (-1)^n (b n^2 + a n)^m q^{(b n^2 + a n)/2}.
inline QSeries theta_deriv(int a, int b, int m, int order) {
  if (m < 0) throw InvalidArgument("negative derivative order");
  QSeries s(order);
  detail::for_each_theta_term(a, b, order, [&](long n, int e) {
    Integer w = ipow(Integer(2 * e), static_cast<unsigned>(m));
    if (n % 2 != 0) w = -w;
    s[e] += w;
  });
  return s;
}

// ---------------------------------------------------------------------------
// Divisor-like sums
// ---------------------------------------------------------------------------

/// g_{a,b,l}: 1 for l = 0, 0 for odd l, and for even l >= 2
///   (1 - 2^{l-1}) B_l/(2l)
///   + sum_{a n - 1 >= b m >= b} (a n - b m)^{l-1} q^{mn}
///   - sum_{m - 1 >= a b n >= a b} (m - a b n)^{l-1} q^{mn}.
/// Requires a, b >= 1 so both lattice sums are finite below q^N.
inline QSeries divisor_like_g(int a, int b, int ell, int order) {
  if (ell < 0) throw InvalidArgument("divisor_like_g needs l >= 0");
  if (ell == 0) return QSeries::constant(1, order);
  QSeries g(order);
  if (ell % 2 != 0) return g;
  if (a < 1 || b < 1) throw InvalidArgument("divisor_like_g needs a, b >= 1");
  const auto e = static_cast<unsigned>(ell - 1);
  g[0] = (1 - pow2(ell - 1)) * bernoulli(ell) / (2 * ell);
  for (int m = 1;; ++m) {
    const int n_min = (b * m + 1 + a - 1) / a;
    if (static_cast<long>(m) * n_min > order) break;
    for (int n = n_min; m * n <= order; ++n) g[m * n] += ipow(Integer(a * n - b * m), e);
  }
  const int ab = a * b;
  for (int n = 1;; ++n) {
    const int m_min = ab * n + 1;
    if (static_cast<long>(n) * m_min > order) break;
    for (int m = m_min; m * n <= order; ++m) g[m * n] -= ipow(Integer(m - ab * n), e);
  }
  return g;
}

// ---------------------------------------------------------------------------
// k-rank count and moment series
// ---------------------------------------------------------------------------

/// sum_n N_k(m, n) q^n =
///   (1/(q)_inf) sum_{n>=1} (-1)^{n-1} q^{n((2k-1)n-1)/2 + |m| n} (1 - q^n).
inline QSeries kRank_count_series(int k, int m, int order) {
  if (k < 2) throw InvalidArgument("kRank_count_series needs k >= 2");
  const long d = 2L * k - 1;
  const long am = std::labs(m);
  QSeries s(order);
  for (long n = 1;; ++n) {
    const long e = n * (d * n - 1) / 2 + am * n;
    if (e > order) break;
    const int sign = (n % 2 == 1) ? 1 : -1;
    s[static_cast<int>(e)] += sign;
    if (e + n <= order) s[static_cast<int>(e + n)] -= sign;
  }
  return s * inverse(euler_product(order));
}

enum class MomentMethod { direct, divisor_sum, combinatorial, eisenstein };

inline std::string_view to_string(MomentMethod m) {
  switch (m) {
    case MomentMethod::direct: return "direct";
    case MomentMethod::divisor_sum: return "divisor-sum";
    case MomentMethod::combinatorial: return "combinatorial";
    case MomentMethod::eisenstein: return "eisenstein";
  }
  return "?";
}

inline MomentMethod parse_moment_method(std::string_view s) {
  if (s == "direct") return MomentMethod::direct;
  if (s == "divisor-sum") return MomentMethod::divisor_sum;
  if (s == "combinatorial") return MomentMethod::combinatorial;
  if (s == "eisenstein") return MomentMethod::eisenstein;
  throw InvalidArgument("unknown moment method '" + std::string(s) + "'");
}

struct MomentSeries {
  int k;  // 1 for crank moments
  int j;
  QSeries series;
  MomentMethod method;
};

namespace detail {

inline QSeries moments_from_table(const CountTable& t, int j, int order) {
  QSeries s(order);
  for (int n = 0; n <= order; ++n) {
    Integer acc = 0;
    for (int m = -t.max_abs_m(); m <= t.max_abs_m(); ++m) {
      const std::int64_t c = t.at(m, n);
      if (c == 0) continue;
      acc += ipow(Integer(m), static_cast<unsigned>(j)) * Integer(static_cast<long>(c));
    }
    s[n] = acc;
  }
  return s;
}

}  // namespace detail

/// R_{k,j} = sum_n sum_m m^j N_k(m, n) q^n for k >= 3.
inline MomentSeries rank_moment(int k, int j, int order, MomentMethod method) {
  if (k < 3) throw InvalidArgument("rank_moment needs k >= 3");
  if (j < 0) throw InvalidArgument("negative moment order");
  const int d = 2 * k - 1;
  QSeries s(order);
  switch (method) {
    case MomentMethod::direct: {
      if (j % 2 != 0) break;
      if (j == 0) {
        for (long n = 1;; ++n) {
          const long e1 = n * (d * n - 1) / 2;
          if (e1 > order) break;
          const int sign = (n % 2 == 1) ? 1 : -1;
          s[static_cast<int>(e1)] += sign;
          if (e1 + n <= order) s[static_cast<int>(e1 + n)] += sign;
        }
      } else {
        // 2 sum_{n>=1} (-1)^{n+1} q^{n(dn-1)/2} (1 - q^n) sum_{m>=1} m^j q^{mn}
        for (long n = 1;; ++n) {
          const long e = n * (d * n - 1) / 2;
          if (e + n > order) break;
          const int sign = (n % 2 == 1) ? 2 : -2;
          for (long m = 1; e + m * n <= order; ++m) {
            const Integer mj = ipow(Integer(static_cast<long>(m)), static_cast<unsigned>(j));
            s[static_cast<int>(e + m * n)] += sign * mj;
            if (e + (m + 1) * n <= order) s[static_cast<int>(e + (m + 1) * n)] -= sign * mj;
          }
        }
      }
      s = s * inverse(euler_product(order));
      break;
    }
    case MomentMethod::divisor_sum: {
      if (j == 0) {
        s = (QSeries::constant(1, order) - theta(1, d, order)) * inverse(euler_product(order));
        break;
      }
      for (int ell = 2; ell <= j; ++ell) {
        if ((ell - j) % 2 != 0) continue;
        QSeries h = divisor_like_g(2, d, ell, order);
        h[0] += (pow2(ell - 1) - 1) * bernoulli(ell) / (2 * ell);
        s += h * Rational(binomial(static_cast<unsigned>(j), static_cast<unsigned>(ell - 1)));
      }
      s = s * (pow2(2 - j)) * inverse(euler_product(order));
      break;
    }
    case MomentMethod::combinatorial:
      s = detail::moments_from_table(count_table(k, order, order), j, order);
      break;
    case MomentMethod::eisenstein:
      throw InvalidArgument("the eisenstein method applies to crank moments only");
  }
  return {k, j, s, method};
}

/// 2 sinh(w/2)/w = sin(pi z)/(pi z) in w = 2 pi i z, as a jet through w^max_deg.
inline WJet sin_ratio_jet(int max_deg, int q_order) {
  WJet out(0, max_deg, q_order);
  for (int i = 0; i <= max_deg; i += 2)
    out[i] = QSeries::constant(make_rational(Integer(1), pow2(i).get_num() * factorial(i + 1)),
                               q_order);
  return out;
}

/// sum_{j>=2} (B_j/j) w^j/j!, whose exponential is sin_ratio_jet.
inline WJet bernoulli_exponent_jet(int max_deg, int q_order) {
  WJet out(0, max_deg, q_order);
  for (int j = 2; j <= max_deg; ++j)
    out[j] = QSeries::constant(bernoulli(j) / j / Rational(factorial(j)), q_order);
  return out;
}

/// C_j = sum_n sum_m m^j N_1(m, n) q^n.
inline MomentSeries crank_moment(int j, int order, MomentMethod method) {
  if (j < 0) throw InvalidArgument("negative moment order");
  if (method == MomentMethod::combinatorial)
    return {1, j, detail::moments_from_table(count_table(1, order, order), j, order), method};
  if (method != MomentMethod::eisenstein)
    throw InvalidArgument("crank moments support the combinatorial and eisenstein methods");
  // sin(pi z)/(pi z (q)_inf) exp(2 sum G_k w^k/k!) with the sine factor as an
  // exponential of Bernoulli numbers.
  WJet exponent = bernoulli_exponent_jet(j, order);
  for (int kk = 2; kk <= j; ++kk)
    exponent[kk] += eisenstein(kk, order) * (Rational(2) / Rational(factorial(kk)));
  WJet gen = series_exp(exponent);
  QSeries s = gen[j] * inverse(euler_product(order)) * Rational(factorial(j));
  return {1, j, s, method};
}

// ---------------------------------------------------------------------------
// Multi-sum generating function for N_k(m, n)
// ---------------------------------------------------------------------------

namespace detail {

// Integer table c[n][m] for sum_n sum_m c q^n zeta^m with |m| <= order.
class ZetaQTable {
 public:
  explicit ZetaQTable(int order)
      : order_(order), width_(2 * order + 1),
        c_(static_cast<std::size_t>((order + 1) * (2 * order + 1))) {}

  std::int64_t& at(int n, int m) { return c_[static_cast<std::size_t>(n * width_ + m + order_)]; }
  std::int64_t at(int n, int m) const {
    return c_[static_cast<std::size_t>(n * width_ + m + order_)];
  }
  int order() const { return order_; }

  // Multiply in place by 1/(1 - zeta^e q^i), i >= 1.
  void divide_by_one_minus(int e, int i) {
    for (int n = i; n <= order_; ++n)
      for (int m = -order_; m <= order_; ++m) {
        const int src = m - e;
        if (src < -order_ || src > order_) continue;
        at(n, m) += at(n - i, src);
      }
  }

 private:
  int order_;
  int width_;
  std::vector<std::int64_t> c_;
};

}  // namespace detail

/// N_k(m, n) from the multi-sum
///   sum_{n_{k-1} >= ... >= n_1 >= 1} q^{n_1^2 + ... + n_{k-1}^2} /
///     ((q)_{n_{k-1}-n_{k-2}} ... (q)_{n_2-n_1} (zeta q)_{n_1} (zeta^{-1} q)_{n_1}).
/// zeta-powers stay exact while expanding; the window is applied at read-out.
inline CountTable fgk_multisum(int k, int max_abs_m, int order) {
  if (k < 3) throw InvalidArgument("fgk_multisum needs k >= 3");
  if (order > 300) throw WindowTooLarge("fgk_multisum: order above 300 overflows 64-bit counts");
  detail::ZetaQTable total(order);
  std::vector<int> idx(static_cast<std::size_t>(k - 1));

  auto add_term = [&]() {
    int shift = 0;
    for (int v : idx) shift += v * v;
    detail::ZetaQTable t(order);
    t.at(shift, 0) = 1;
    const int n1 = idx.front();
    for (int i = 1; i <= n1; ++i) {
      t.divide_by_one_minus(1, i);
      t.divide_by_one_minus(-1, i);
    }
    for (std::size_t s = 1; s < idx.size(); ++s)
      for (int i = 1; i <= idx[s] - idx[s - 1]; ++i) t.divide_by_one_minus(0, i);
    for (int n = shift; n <= order; ++n)
      for (int m = -order; m <= order; ++m) total.at(n, m) += t.at(n, m);
  };

  // idx[0] = n_1 <= idx[1] = n_2 <= ... with sum of squares <= order.
  auto recurse = [&](auto&& self, std::size_t level, int lo, int used) -> void {
    if (level == idx.size()) {
      add_term();
      return;
    }
    const auto remaining = static_cast<int>(idx.size() - level);
    for (int v = lo; used + remaining * v * v <= order; ++v) {
      idx[level] = v;
      self(self, level + 1, v, used + v * v);
    }
  };
  recurse(recurse, 0, 1, 0);

  CountTable out(k, max_abs_m, order);
  for (int n = 0; n <= order; ++n)
    for (int m = -max_abs_m; m <= max_abs_m; ++m)
      if (m >= -order && m <= order) out.at(m, n) = total.at(n, m);
  return out;
}

}  // namespace mockeis
