// Runs the ten acceptance criteria at exact tolerance and prints one line per
// criterion. Exit status is nonzero if any criterion fails or overruns its
// time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mockeis/mock_eisenstein.hpp"
#include "mockeis/suites.hpp"
#include "support/reference_tables.hpp"

using namespace mockeis;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_reports(const std::vector<suites::SuiteReport>& reports) {
  int checks = 0;
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      ++checks;
      if (!c.pass) return {false, r.suite + ": " + c.name + " -- " + c.detail};
    }
  return {true, std::to_string(checks) + " checks"};
}

Outcome reference_tables() {
  int compared = 0;
  for (const auto& row : testsupport::reference_rows()) {
    const MockFamily f = f_family(row.k, 8, row.k + 5, FamilyRoute::recursionA);
    const QSeries& s = f.member(row.j);
    auto fail = [&](int n, const std::string& want) {
      return Outcome{false, "f_{" + std::to_string(row.k) + "," + std::to_string(row.j) + "} q^" +
                                std::to_string(n) + ": got " + to_string(s[n]) + ", expected " + want};
    };
    if (s[0] != parse_rational(row.constant)) return fail(0, row.constant);
    ++compared;
    for (int n = 1; n < row.k; ++n)
      if (s[n] != 0) return fail(n, "0");
    for (std::size_t i = 0; i < row.from_qk.size(); ++i) {
      const int n = row.k + static_cast<int>(i);
      if (s[n] != row.from_qk[i]) return fail(n, std::to_string(row.from_qk[i]));
      ++compared;
    }
  }
  return {true, std::to_string(compared) + " printed coefficients"};
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const suites::SuiteParams defaults;
  const std::vector<Criterion> criteria = {
      {1, "published f_{k,j} tables, k in {3,4,5}, j in {2,4,6,8}", 5, reference_tables},
      {2, "recursionA = recursionB = logRoute, j <= 12, order 40", 30,
       [&] { return from_reports(suites::run("routes", defaults)); }},
      {3, "N_k(m,n): enumeration = generating function = multi-sum", 60,
       [&] { return from_reports(suites::run("counts", defaults)); }},
      {4, "moment identities (divisor sums, odd moments, R_{k,0}, counts)", 60,
       [&] { return from_reports(suites::run("moments", defaults)); }},
      {5, "trace identity k in {3,4,5} through w^8 and its crank analogue", 30,
       [&] {
         auto reports = suites::run("traces", defaults);
         reports.push_back(suites::crank(defaults));
         return from_reports(reports);
       }},
      {6, "integrality of f_{k,j} + B_j/(2j), j <= 12, order 60", 10,
       [&] { return from_reports(suites::run("integrality", defaults)); }},
      {7, "leading coefficients (i+1)^j - i^j", 1,
       [&] { return from_reports(suites::run("pattern", defaults)); }},
      {8, "level-5 PDE residual, Nw = 7, Nq = 20", 120,
       [&] { return from_reports(suites::run("pde", defaults)); }},
      {9, "theta ODE residuals at order 40", 5,
       [&] { return from_reports(suites::run("theta-ode", defaults)); }},
      {10, "pentagonal identity, exp/log round trip, Leibniz rule", 10,
       [&] { return from_reports(suites::run("series", defaults)); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_seconds;
    const bool pass = o.pass && in_budget;
    all = all && pass;
    std::printf("criterion %2d %s: %s [%.2fs / %.0fs budget%s] %s\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), secs, c.budget_seconds, in_budget ? "" : ", OVER BUDGET",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
