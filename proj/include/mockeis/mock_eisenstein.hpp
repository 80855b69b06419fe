#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mockeis/bernoulli.hpp"
#include "mockeis/errors.hpp"
#include "mockeis/partition.hpp"
#include "mockeis/qfunctions.hpp"
#include "mockeis/qseries.hpp"
#include "mockeis/wjet.hpp"

namespace mockeis {

/// A family {f_1, f_2, ...} of q-series sharing one truncation order.
class SeriesFamily {
 public:
  explicit SeriesFamily(int order) : order_(order) {}

  int order() const { return order_; }
  int max_index() const { return static_cast<int>(members_.size()); }

  const QSeries& member(int j) const {
    if (j < 1 || j > max_index())
      throw MissingMember("family has no member " + std::to_string(j) + " (holds 1.." +
                          std::to_string(max_index()) + ")");
    return members_[static_cast<std::size_t>(j - 1)];
  }

  void push_back(QSeries s) {
    if (s.order() != order_) s = s.truncated(order_);
    members_.push_back(std::move(s));
  }

 private:
  int order_;
  std::vector<QSeries> members_;
};

/// {G_1, ..., G_max_j}; odd members vanish.
inline SeriesFamily eisenstein_family(int max_j, int order) {
  SeriesFamily fam(order);
  for (int j = 1; j <= max_j; ++j) fam.push_back(eisenstein(j, order));
  return fam;
}

// ---------------------------------------------------------------------------
// Partition traces
// ---------------------------------------------------------------------------

enum class TraceWeight { phi, psi };

/// phi(lam) = prod_k 2^{l_k} / (l_k! k!^{l_k}); psi = (-1)^{sum l_k} phi.
inline Rational trace_weight(const std::vector<int>& parts, TraceWeight kind) {
  Rational w = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    const int k = parts[i];
    unsigned l = 0;
    while (i < parts.size() && parts[i] == k) {
      ++l;
      ++i;
    }
    w *= make_rational(ipow(2, l), factorial(l) * ipow(factorial(static_cast<unsigned>(k)), l));
  }
  if (kind == TraceWeight::psi && parts.size() % 2 != 0) w = -w;
  return w;
}

inline Rational trace_weight(const Partition& lam, TraceWeight kind) {
  return trace_weight(lam.parts(), kind);
}

/// Tr_n(weight, f) = sum_{lam |- n} weight(lam) prod_k f_k^{l_k}.
inline QSeries trace(int n, TraceWeight weight, const SeriesFamily& family) {
  if (n < 0) throw InvalidArgument("negative trace index");
  if (n > family.max_index())
    throw MissingMember("trace " + std::to_string(n) + " needs members up to " +
                        std::to_string(n));
  QSeries total(family.order());
  for_each_partition(n, [&](const std::vector<int>& parts) {
    for (int p : parts)
      if (family.member(p).is_zero()) return;
    QSeries prod = QSeries::constant(trace_weight(parts, weight), family.order());
    for (int p : parts) prod *= family.member(p);
    total += prod;
  });
  return total;
}

// ---------------------------------------------------------------------------
// The family f_{k,j}
// ---------------------------------------------------------------------------

enum class FamilyRoute { recursionA, recursionB, logRoute };

inline std::string_view to_string(FamilyRoute r) {
  switch (r) {
    case FamilyRoute::recursionA: return "recursionA";
    case FamilyRoute::recursionB: return "recursionB";
    case FamilyRoute::logRoute: return "logRoute";
  }
  return "?";
}

inline FamilyRoute parse_family_route(std::string_view s) {
  if (s == "recursionA") return FamilyRoute::recursionA;
  if (s == "recursionB") return FamilyRoute::recursionB;
  if (s == "logRoute") return FamilyRoute::logRoute;
  throw InvalidArgument("unknown route '" + std::string(s) + "'");
}

struct MockFamily {
  int k;
  int max_j;
  FamilyRoute route;
  /// True for k = 2, which only reproduces the rank analogue by extrapolating
  /// the k >= 3 formulas.
  bool extrapolated;
  SeriesFamily members;

  int order() const { return members.order(); }
  const QSeries& member(int j) const { return members.member(j); }
};

namespace detail {

// j g_{2,2k-1,j} / 2^{j-2}, the w^j/j! coefficient of exp(2 sum f_j w^j/j!).
inline std::vector<QSeries> scaled_divisor_sums(int k, int max_j, int order) {
  std::vector<QSeries> x(static_cast<std::size_t>(max_j + 1), QSeries(order));
  for (int j = 1; j <= max_j; ++j)
    x[static_cast<std::size_t>(j)] = divisor_like_g(2, 2 * k - 1, j, order) * (j * pow2(2 - j));
  return x;
}

inline SeriesFamily family_recursion_a(const std::vector<QSeries>& x, int max_j, int order) {
  SeriesFamily f(order);
  for (int n = 1; n <= max_j; ++n) {
    // f_n = n g_n/2^{n-1} - sum_{l=2}^{n-1} binom(n-1, l-1) f_l (n-l) g_{n-l}/2^{n-l-2}
    //     = x_n/2       - sum_{l=2}^{n-1} binom(n-1, l-1) f_l x_{n-l}
    QSeries s = x[static_cast<std::size_t>(n)] * make_rational(1, 2);
    for (int l = 2; l <= n - 1; ++l) {
      const QSeries& fl = f.member(l);
      const QSeries& xr = x[static_cast<std::size_t>(n - l)];
      if (fl.is_zero() || xr.is_zero()) continue;
      s -= (fl * xr) * Rational(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(l - 1)));
    }
    f.push_back(std::move(s));
  }
  return f;
}

inline SeriesFamily family_recursion_b(const std::vector<QSeries>& x, int max_j, int order) {
  SeriesFamily f(order);
  std::map<int, QSeries> psi_traces;
  auto tr = [&](int m) -> const QSeries& {
    auto it = psi_traces.find(m);
    if (it == psi_traces.end()) it = psi_traces.emplace(m, trace(m, TraceWeight::psi, f)).first;
    return it->second;
  };
  for (int n = 1; n <= max_j; ++n) {
    // f_n = sum_{l=2}^{n} (l g_l / 2^{l-1}) (n-1)!/(l-1)! Tr_{n-l}(psi, f)
    QSeries s(order);
    for (int l = 2; l <= n; ++l) {
      const QSeries& xl = x[static_cast<std::size_t>(l)];
      if (xl.is_zero()) continue;
      const Rational c = make_rational(factorial(static_cast<unsigned>(n - 1)),
                                       2 * factorial(static_cast<unsigned>(l - 1)));
      s += (xl * tr(n - l)) * c;
    }
    f.push_back(std::move(s));
  }
  return f;
}

inline SeriesFamily family_log_route(const std::vector<QSeries>& x, int max_j, int order) {
  // exp(2 sum f_j w^j/j!) = 1 + sum x_j w^j/j!
  WJet gen(0, max_j, order);
  gen[0] = QSeries::constant(1, order);
  for (int j = 1; j <= max_j; ++j)
    gen[j] = x[static_cast<std::size_t>(j)] * make_rational(Integer(1), factorial(static_cast<unsigned>(j)));
  const WJet lg = series_log(gen);
  SeriesFamily f(order);
  for (int j = 1; j <= max_j; ++j)
    f.push_back(lg[j] * make_rational(factorial(static_cast<unsigned>(j)), Integer(2)));
  return f;
}

}  // namespace detail

/// f_{k,1..max_j} truncated at q^order by one of three constructions built on
/// the divisor-like sums g_{2,2k-1,l}. k = 2 is refused unless allow_k2.
inline MockFamily f_family(int k, int max_j, int order, FamilyRoute route, bool allow_k2 = false) {
  if (k < 2 || (k == 2 && !allow_k2))
    throw InvalidArgument("f_family needs k >= 3 (k = 2 only as an explicit extrapolation)");
  if (max_j < 2 || max_j % 2 != 0) throw InvalidArgument("max_j must be even and >= 2");
  if (order < 1) throw InvalidArgument("order must be >= 1");
  const auto x = detail::scaled_divisor_sums(k, max_j, order);
  SeriesFamily members(order);
  switch (route) {
    case FamilyRoute::recursionA: members = detail::family_recursion_a(x, max_j, order); break;
    case FamilyRoute::recursionB: members = detail::family_recursion_b(x, max_j, order); break;
    case FamilyRoute::logRoute: members = detail::family_log_route(x, max_j, order); break;
  }
  return {k, max_j, route, k == 2, std::move(members)};
}

// ---------------------------------------------------------------------------
// Generating jets
// ---------------------------------------------------------------------------

/// sum_{n <= max_deg} Tr_n(weight, family) w^n.
inline WJet trace_jet(const SeriesFamily& family, TraceWeight weight, int max_deg) {
  WJet out(0, max_deg, family.order());
  for (int n = 0; n <= max_deg; ++n) out[n] = trace(n, weight, family);
  return out;
}

/// exp(sign * 2 sum_j f_j w^j/j!) through w^max_deg.
inline WJet family_exponential(const SeriesFamily& family, int sign, int max_deg) {
  WJet e(0, max_deg, family.order());
  for (int j = 1; j <= max_deg; ++j)
    e[j] = family.member(j) *
           make_rational(Integer(2 * sign), factorial(static_cast<unsigned>(j)));
  return series_exp(e);
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// Summary of a residual jet: pass iff every certified coefficient is 0.
struct ResidualReport {
  bool pass = true;
  Rational max_abs = 0;
  std::optional<std::pair<int, int>> first_nonzero;  // (w-degree, q-exponent)
  WJet residual;

  explicit ResidualReport(WJet r) : residual(std::move(r)) {
    for (int d = residual.min_deg(); d <= residual.max_deg(); ++d)
      for (int n = 0; n <= residual.q_order(); ++n) {
        const Rational& c = residual[d][n];
        if (c == 0) continue;
        if (!first_nonzero) first_nonzero = std::make_pair(d, n);
        pass = false;
        if (abs(c) > max_abs) max_abs = abs(c);
      }
  }

  std::string describe() const {
    if (pass) return "zero on w^" + std::to_string(residual.min_deg()) + "..w^" +
                     std::to_string(residual.max_deg()) + ", q^0..q^" +
                     std::to_string(residual.q_order());
    return "first nonzero at w^" + std::to_string(first_nonzero->first) + " q^" +
           std::to_string(first_nonzero->second) + ": " +
           to_string(residual[first_nonzero->first][first_nonzero->second]) +
           " (max |residual| " + to_string(max_abs) + ")";
  }
};

/// Residual of
///   sum_j R_{k,j} w^j/j! + theta_{1,2k-1}/(q)_inf
///     - (2 sinh(w/2)/(w (q)_inf)) sum_j Tr_j(phi, f_k) w^j
/// through w^max_j. The theta term is the correction that makes the identity
/// exact at w^0.
inline ResidualReport verify_trace_identity(int k, int max_j, int order,
                                            MomentMethod moments = MomentMethod::direct) {
  const MockFamily fam = f_family(k, max_j, order, FamilyRoute::recursionA);
  const QSeries inv_euler = inverse(euler_product(order));
  WJet lhs(0, max_j, order);
  for (int j = 0; j <= max_j; ++j)
    lhs[j] = rank_moment(k, j, order, moments).series *
             make_rational(Integer(1), factorial(static_cast<unsigned>(j)));
  lhs[0] += theta(1, 2 * k - 1, order) * inv_euler;
  const WJet rhs = inv_euler * (sin_ratio_jet(max_j, order) * trace_jet(fam.members, TraceWeight::phi, max_j));
  return ResidualReport(lhs - rhs);
}

/// Residual of
///   sum_j C_j w^j/j! - (2 sinh(w/2)/(w (q)_inf)) sum_j Tr_j(phi, G) w^j
/// with combinatorial crank moments.
inline ResidualReport verify_crank_trace_identity(int max_j, int order) {
  const SeriesFamily g = eisenstein_family(max_j, order);
  WJet lhs(0, max_j, order);
  for (int j = 0; j <= max_j; ++j)
    lhs[j] = crank_moment(j, order, MomentMethod::combinatorial).series *
             make_rational(Integer(1), factorial(static_cast<unsigned>(j)));
  const WJet rhs = inverse(euler_product(order)) *
                   (sin_ratio_jet(max_j, order) * trace_jet(g, TraceWeight::phi, max_j));
  return ResidualReport(lhs - rhs);
}

struct CoefficientFailure {
  int j;
  int n;
  Rational value;
};

struct IntegralityReport {
  bool pass = true;
  std::optional<CoefficientFailure> first_failure;
};

/// Every coefficient of f_j + B_j/(2j), j >= 2, must be an integer.
inline IntegralityReport integrality_check(const SeriesFamily& family) {
  IntegralityReport rep;
  for (int j = 2; j <= family.max_index(); ++j) {
    QSeries shifted = family.member(j);
    shifted[0] += bernoulli(j) / (2 * j);
    for (int n = 0; n <= shifted.order(); ++n)
      if (!is_integer(shifted[n])) {
        rep.pass = false;
        rep.first_failure = CoefficientFailure{j, n, shifted[n]};
        return rep;
      }
  }
  return rep;
}

inline IntegralityReport integrality_check(const MockFamily& family) {
  return integrality_check(family.members);
}

struct PatternReport {
  bool pass = true;
  std::optional<CoefficientFailure> first_failure;
  Rational expected = 0;
};

/// Low-order shape of f_{k,j}: constant -B_j/(2j), nothing in q^1..q^{k-1},
/// then (i+1)^j - i^j at q^{k+i} for i = 0..k-1.
inline PatternReport leading_pattern_check(const QSeries& f, int k, int j) {
  if (j < 2 || j % 2 != 0) throw InvalidArgument("leading pattern needs even j >= 2");
  if (f.order() < 2 * k - 1) throw InvalidArgument("leading pattern needs order >= 2k - 1");
  PatternReport rep;
  auto expect = [&](int n, const Rational& want) {
    if (!rep.pass || f[n] == want) return;
    rep.pass = false;
    rep.first_failure = CoefficientFailure{j, n, f[n]};
    rep.expected = want;
  };
  expect(0, -bernoulli(j) / (2 * j));
  for (int n = 1; n < k; ++n) expect(n, 0);
  const auto e = static_cast<unsigned>(j);
  for (int i = 0; i < k; ++i) expect(k + i, Rational(ipow(i + 1, e) - ipow(i, e)));
  return rep;
}

inline PatternReport leading_pattern_check(int k, int j, int order) {
  const MockFamily fam = f_family(k, j, order, FamilyRoute::recursionA);
  return leading_pattern_check(fam.member(j), k, j);
}

}  // namespace mockeis
