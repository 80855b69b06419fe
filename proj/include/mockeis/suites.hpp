#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mockeis/jacobi.hpp"
#include "mockeis/mock_eisenstein.hpp"
#include "mockeis/partition.hpp"
#include "mockeis/qfunctions.hpp"
#include "mockeis/qseries.hpp"

// Named verification suites. Each suite runs a fixed list of exact checks;
// default sizes are the acceptance sizes and every size can be overridden.

namespace mockeis::suites {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

struct SuiteParams {
  std::optional<int> k;
  std::optional<int> maxj;
  std::optional<int> maxn;
  std::optional<int> maxm;
  std::optional<int> order;
  /// Corrupt the reference side of the first comparison (negative control).
  bool inject_fault = false;

  std::vector<int> ks(std::vector<int> fallback) const {
    if (k) return {*k};
    return fallback;
  }
};

inline int value_or(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

/// Collects checks; applies an injected fault to the first comparison only.
class Checker {
 public:
  Checker(std::string suite, bool inject_fault)
      : report_{std::move(suite), {}}, fault_pending_(inject_fault) {}

  void series_equal(std::string name, const QSeries& got, QSeries want) {
    if (take_fault(name)) want[want.order()] += 1;
    if (got.order() != want.order()) {
      add(std::move(name), false,
          "orders differ: " + std::to_string(got.order()) + " vs " + std::to_string(want.order()));
      return;
    }
    for (int n = 0; n <= got.order(); ++n)
      if (got[n] != want[n]) {
        add(std::move(name), false,
            "first difference at q^" + std::to_string(n) + ": " + to_string(got[n]) + " vs " +
                to_string(want[n]));
        return;
      }
    add(std::move(name), true, "equal through q^" + std::to_string(got.order()));
  }

  void series_zero(std::string name, const QSeries& s) {
    series_equal(std::move(name), s, QSeries(s.order()));
  }

  void table_equal(std::string name, const CountTable& got, CountTable want) {
    if (take_fault(name)) want.at(0, want.max_n()) += 1;
    for (int n = 0; n <= got.max_n(); ++n)
      for (int m = -got.max_abs_m(); m <= got.max_abs_m(); ++m)
        if (got.at(m, n) != want.at(m, n)) {
          add(std::move(name), false,
              "first difference at (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                  "): " + std::to_string(got.at(m, n)) + " vs " + std::to_string(want.at(m, n)));
          return;
        }
    add(std::move(name), true,
        "equal on |m| <= " + std::to_string(got.max_abs_m()) + ", n <= " +
            std::to_string(got.max_n()));
  }

  void residual_zero(std::string name, WJet residual) {
    if (take_fault(name)) residual[residual.max_deg()][0] += 1;
    const ResidualReport rep(std::move(residual));
    add(std::move(name), rep.pass, rep.describe());
  }

  void truth(std::string name, bool ok, std::string detail) {
    if (take_fault(name)) ok = !ok;
    add(std::move(name), ok, std::move(detail));
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  bool take_fault(std::string& name) {
    if (!std::exchange(fault_pending_, false)) return false;
    name += " [injected fault]";
    return true;
  }
  void add(std::string name, bool ok, std::string detail) {
    report_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  SuiteReport report_;
  bool fault_pending_;
};

inline std::string kj(int k, int j) { return "k=" + std::to_string(k) + " j=" + std::to_string(j); }

/// Enumeration vs the q-series of N_k(m, n), the multi-sum, symmetry and
/// column sums against R_{k,0}.
inline SuiteReport counts(const SuiteParams& p) {
  Checker c("counts", p.inject_fault);
  const int maxn = value_or(p.maxn, 25);
  const int maxm = value_or(p.maxm, 6);
  for (int k : p.ks({3, 4, 5})) {
    const CountTable enumerated = count_table(k, maxm, maxn);
    CountTable series_table(k, maxm, maxn);
    for (int m = -maxm; m <= maxm; ++m) {
      const QSeries s = kRank_count_series(k, m, maxn);
      for (int n = 0; n <= maxn; ++n) series_table.at(m, n) = s[n].get_num().get_si();
    }
    c.table_equal("enumeration = generating function, k=" + std::to_string(k), enumerated,
                  series_table);

    bool symmetric = true;
    for (int n = 0; n <= maxn; ++n)
      for (int m = 1; m <= maxm; ++m) symmetric = symmetric && enumerated.at(m, n) == enumerated.at(-m, n);
    c.truth("symmetry N_k(m,n) = N_k(-m,n), k=" + std::to_string(k), symmetric,
            symmetric ? "holds" : "asymmetric entry found");

    const CountTable wide = count_table(k, maxn, maxn);
    QSeries column(maxn);
    for (int n = 0; n <= maxn; ++n)
      for (int m = -maxn; m <= maxn; ++m) column[n] += wide.at(m, n);
    c.series_equal("column sums = R_{k,0}, k=" + std::to_string(k), column,
                   rank_moment(k, 0, maxn, MomentMethod::direct).series);
  }
  const int ms_n = value_or(p.maxn, 15);
  const int ms_m = value_or(p.maxm, 5);
  for (int k : p.ks({3})) {
    c.table_equal("multi-sum = enumeration, k=" + std::to_string(k), fgk_multisum(k, ms_m, ms_n),
                  count_table(k, ms_m, ms_n));
  }
  return c.finish();
}

/// (q)_inf sum_j R_j w^j/j! + theta_{1,2k-1} against (2 sinh(w/2)/w)(1 + sum x_j w^j/j!),
/// x_j = j g_{2,2k-1,j}/2^{j-2}.
inline WJet moment_generating_residual(int k, int max_deg, int order) {
  const QSeries euler = euler_product(order);
  WJet lhs(0, max_deg, order);
  for (int j = 0; j <= max_deg; ++j)
    lhs[j] = rank_moment(k, j, order, MomentMethod::direct).series * euler *
             make_rational(Integer(1), factorial(static_cast<unsigned>(j)));
  lhs[0] += theta(1, 2 * k - 1, order);
  const auto x = detail::scaled_divisor_sums(k, max_deg, order);
  WJet gen(0, max_deg, order);
  gen[0] = QSeries::constant(1, order);
  for (int j = 1; j <= max_deg; ++j)
    gen[j] = x[static_cast<std::size_t>(j)] *
             make_rational(Integer(1), factorial(static_cast<unsigned>(j)));
  return lhs - sin_ratio_jet(max_deg, order) * gen;
}

inline SuiteReport moments(const SuiteParams& p) {
  Checker c("moments", p.inject_fault);
  const int maxj = value_or(p.maxj, 10);
  const int order = value_or(p.order, 40);
  const int comb_n = std::min(value_or(p.maxn, 25), kEnumerationCeiling);
  for (int k : p.ks({3, 4, 5})) {
    for (int j = 0; j <= maxj; ++j) {
      const QSeries direct = rank_moment(k, j, order, MomentMethod::direct).series;
      const QSeries divisor = rank_moment(k, j, order, MomentMethod::divisor_sum).series;
      if (j % 2 == 1) {
        c.series_zero("odd moment vanishes (direct), " + kj(k, j), direct);
        c.series_zero("odd moment vanishes (divisor-sum), " + kj(k, j), divisor);
      } else {
        c.series_equal((j == 0 ? "R_{k,0} = (1 - theta)/(q)_inf, " : "direct = divisor-sum, ") +
                           kj(k, j),
                       direct, divisor);
      }
    }
    for (int j = 0; j <= std::min(maxj, 6); ++j)
      c.series_equal("combinatorial = direct, " + kj(k, j),
                     rank_moment(k, j, comb_n, MomentMethod::combinatorial).series,
                     rank_moment(k, j, comb_n, MomentMethod::direct).series);
    c.residual_zero("moment generating function, k=" + std::to_string(k),
                    moment_generating_residual(k, maxj, std::min(order, 30)));
  }
  return c.finish();
}

inline SuiteReport traces(const SuiteParams& p) {
  Checker c("traces", p.inject_fault);
  const int maxj = value_or(p.maxj, 8);
  const int order = value_or(p.order, 30);
  for (int k : p.ks({3, 4, 5})) {
    c.residual_zero("trace identity with theta correction, k=" + std::to_string(k),
                    verify_trace_identity(k, maxj, order).residual);
    const int polya = maxj + maxj % 2 + 2;
    const MockFamily f = f_family(k, polya, order, FamilyRoute::recursionA);
    c.residual_zero("cycle index, phi, k=" + std::to_string(k),
                    trace_jet(f.members, TraceWeight::phi, polya) -
                        family_exponential(f.members, 1, polya));
    c.residual_zero("cycle index, psi, k=" + std::to_string(k),
                    trace_jet(f.members, TraceWeight::psi, polya) -
                        family_exponential(f.members, -1, polya));
  }
  return c.finish();
}

inline SuiteReport integrality(const SuiteParams& p) {
  Checker c("integrality", p.inject_fault);
  const int maxj = value_or(p.maxj, 12);
  const int order = value_or(p.order, 60);
  for (int k : p.ks({3, 4, 5})) {
    const MockFamily f = f_family(k, maxj + maxj % 2, order, FamilyRoute::recursionA);
    IntegralityReport rep = integrality_check(f);
    std::string detail = "f_{k,j} + B_j/(2j) integral for j <= " + std::to_string(maxj) +
                         " through q^" + std::to_string(order);
    if (!rep.pass)
      detail = "j=" + std::to_string(rep.first_failure->j) + " q^" +
               std::to_string(rep.first_failure->n) + " coefficient " +
               to_string(rep.first_failure->value);
    c.truth("integrality, k=" + std::to_string(k), rep.pass, detail);
    bool constants = true;
    for (int j = 1; j <= maxj; ++j)
      constants = constants && f.member(j)[0] == (j == 1 ? Rational(0) : -bernoulli(j) / (2 * j));
    c.truth("constant terms -B_j/(2j), k=" + std::to_string(k), constants,
            constants ? "all match" : "mismatch");
  }
  return c.finish();
}

inline SuiteReport pattern(const SuiteParams& p) {
  Checker c("pattern", p.inject_fault);
  const int maxj = value_or(p.maxj, 8);
  for (int k : p.ks({3, 4, 5})) {
    const int order = std::max(value_or(p.order, 30), 2 * k - 1);
    const MockFamily f = f_family(k, maxj + maxj % 2, order, FamilyRoute::recursionA);
    for (int j = 2; j <= maxj; j += 2) {
      const PatternReport rep = leading_pattern_check(f.member(j), k, j);
      std::string detail = "q^k..q^{2k-1} follow (i+1)^j - i^j";
      if (!rep.pass)
        detail = "q^" + std::to_string(rep.first_failure->n) + " is " +
                 to_string(rep.first_failure->value) + ", expected " + to_string(rep.expected);
      c.truth("leading pattern, " + kj(k, j), rep.pass, detail);
    }
  }
  return c.finish();
}

inline SuiteReport pde(const SuiteParams& p) {
  Checker c("pde", p.inject_fault);
  const int nw = value_or(p.maxj, 7);
  const int order = value_or(p.order, 20);
  c.residual_zero("(H_3 H_1 - (220/3) G_4) A_5 = crank side", pde_residual(nw, order));
  const WJet a5 = assemble_A5(1, order);
  c.series_equal("A_5 residue at w^-1", a5[-1], QSeries::constant(-1, order));
  const int cross = std::min(nw, 6);
  c.residual_zero("A_5 sine terms: inversion = Bernoulli polynomials",
                  assemble_A5_terms(cross, order).total() -
                      assemble_A5_terms(cross, order, SineExpansion::bernoulli).total());
  return c.finish();
}

inline SuiteReport theta_ode(const SuiteParams& p) {
  Checker c("theta-ode", p.inject_fault);
  const int order = value_or(p.order, 40);
  for (ThetaSeries t : {ThetaSeries::theta_1_5, ThetaSeries::theta_3_5}) {
    c.series_zero("operator form, " + std::string(to_string(t)), theta_ode_residual(t, order));
    c.series_zero("expanded form, " + std::string(to_string(t)),
                  theta_ode_residual(t, order, ThetaOdeForm::expanded));
  }
  return c.finish();
}

inline SuiteReport crank(const SuiteParams& p) {
  Checker c("crank", p.inject_fault);
  const int maxj = value_or(p.maxj, 8);
  const int order = std::min(value_or(p.order, 20), kEnumerationCeiling);
  c.residual_zero("crank trace identity", verify_crank_trace_identity(maxj, order).residual);
  for (int j = 0; j <= maxj; ++j)
    c.series_equal("crank moment combinatorial = eisenstein, j=" + std::to_string(j),
                   crank_moment(j, order, MomentMethod::combinatorial).series,
                   crank_moment(j, order, MomentMethod::eisenstein).series);
  return c.finish();
}

inline SuiteReport routes(const SuiteParams& p) {
  Checker c("routes", p.inject_fault);
  const int maxj = value_or(p.maxj, 12);
  const int order = value_or(p.order, 40);
  const int mj = maxj + maxj % 2;
  for (int k : p.ks({3, 4, 5})) {
    const MockFamily a = f_family(k, mj, order, FamilyRoute::recursionA);
    const MockFamily b = f_family(k, mj, order, FamilyRoute::recursionB);
    const MockFamily l = f_family(k, mj, order, FamilyRoute::logRoute);
    for (int j = 1; j <= mj; ++j) {
      c.series_equal("recursionA = recursionB, " + kj(k, j), a.member(j), b.member(j));
      c.series_equal("recursionA = logRoute, " + kj(k, j), a.member(j), l.member(j));
    }
  }
  return c.finish();
}

/// Pentagonal identity plus randomized exp/log and Leibniz checks.
inline SuiteReport series(const SuiteParams& p) {
  Checker c("series", p.inject_fault);
  const int order = value_or(p.order, 60);
  c.series_equal("product (q)_inf = theta_{1,3}", euler_product(order), theta(1, 3, order));
  c.series_equal("product (q)_inf = pentagonal sum", euler_product(order),
                 euler_product_pentagonal(order));
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  auto random_series = [&](int n, bool zero_constant) {
    QSeries s(n);
    for (int i = zero_constant ? 1 : 0; i <= n; ++i) s[i] = make_rational(num(rng), den(rng));
    return s;
  };
  int exp_log_bad = 0, leibniz_bad = 0;
  constexpr int kInstances = 100;
  for (int i = 0; i < kInstances; ++i) {
    const QSeries a = random_series(12, true);
    if (series_log(series_exp(a)) != a) ++exp_log_bad;
    const QSeries x = random_series(12, false), y = random_series(12, false);
    if (q_derivative(x * y) != q_derivative(x) * y + x * q_derivative(y)) ++leibniz_bad;
  }
  c.truth("log(exp(a)) = a on 100 random series", exp_log_bad == 0,
          std::to_string(exp_log_bad) + " failures");
  c.truth("Leibniz rule for q d/dq on 100 random pairs", leibniz_bad == 0,
          std::to_string(leibniz_bad) + " failures");
  return c.finish();
}

struct SuiteEntry {
  std::string_view name;
  SuiteReport (*run)(const SuiteParams&);
};

inline const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"series", series},           {"counts", counts},   {"moments", moments},
      {"routes", routes},           {"traces", traces},   {"integrality", integrality},
      {"pattern", pattern},         {"pde", pde},         {"theta-ode", theta_ode},
      {"crank", crank},
  };
  return entries;
}

/// Runs one named suite, or every suite for "all".
inline std::vector<SuiteReport> run(std::string_view name, const SuiteParams& p) {
  std::vector<SuiteReport> out;
  for (const auto& e : registry())
    if (name == "all" || name == e.name) out.push_back(e.run(p));
  if (out.empty()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace mockeis::suites
