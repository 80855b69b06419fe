#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mockeis/io.hpp"
#include "mockeis/jacobi.hpp"
#include "mockeis/mock_eisenstein.hpp"
#include "mockeis/qfunctions.hpp"
#include "mockeis/suites.hpp"

namespace {

using namespace mockeis;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::optional<int> k, j, maxj, maxn, maxm, order;
  std::string method;
  std::string route = "recursionA";
  std::string format;
  std::string out;
  std::string suite = "all";
  bool allow_k2 = false;
  bool inject_fault = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open '" + o.out + "' for writing");
  f << text;
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing ") + flag);
  return *v;
}

std::string render_series(const LabeledSeries& s, const std::string& format) {
  if (format == "text") return to_string(s.series) + "\n";
  if (format == "json") return to_json(s).dump() + "\n";
  if (format == "csv") return to_csv(s.series);
  throw InvalidArgument("unsupported format '" + format + "'");
}

int cmd_f(const Options& o) {
  const int k = require(o.k, "--k");
  const int j = require(o.j, "--j");
  const int order = o.order.value_or(30);
  const std::string format = o.format.empty() ? "text" : o.format;
  if (j < 1) throw InvalidArgument("--j must be >= 1");
  if (order < 1) throw InvalidArgument("--order must be >= 1");
  if (format != "text" && format != "json" && format != "bfile")
    throw InvalidArgument("f supports --format text, json or bfile");
  const MockFamily fam =
      f_family(k, std::max(2, j + j % 2), order, parse_family_route(o.route), o.allow_k2);
  if (fam.extrapolated) std::cerr << "note: k = 2 is extrapolated, not asserted by the theory\n";
  const QSeries& f = fam.member(j);
  if (format == "bfile") {
    QSeries shifted = f;
    shifted[0] += bernoulli(j) / (2 * j);
    emit(o, to_bfile(shifted));
    return kExitPass;
  }
  LabeledSeries labeled{"f", k, j, f};
  std::string text = render_series(labeled, format);
  if (format == "json" && fam.extrapolated) {
    auto js = to_json(labeled);
    js["extrapolated"] = true;
    text = js.dump() + "\n";
  }
  emit(o, text);
  return kExitPass;
}

int cmd_table_nk(const Options& o) {
  const int k = require(o.k, "--k");
  const int maxm = o.maxm.value_or(5);
  const int maxn = require(o.maxn, "--maxn");
  const std::string format = o.format.empty() ? "csv" : o.format;
  const CountTable t = count_table(k, maxm, maxn);
  if (format == "csv")
    emit(o, to_csv(t));
  else if (format == "json")
    emit(o, to_json(t).dump() + "\n");
  else
    throw InvalidArgument("table Nk supports --format csv or json");
  return kExitPass;
}

int cmd_table_moments(const Options& o) {
  const int k = require(o.k, "--k");
  const int j = require(o.j, "--j");
  const int order = o.order.value_or(30);
  const std::string format = o.format.empty() ? "csv" : o.format;
  MomentSeries m{};
  if (k == 1) {
    m = crank_moment(j, order, parse_moment_method(o.method.empty() ? "eisenstein" : o.method));
  } else {
    m = rank_moment(k, j, order, parse_moment_method(o.method.empty() ? "direct" : o.method));
  }
  emit(o, render_series({"moment", k, j, m.series}, format));
  return kExitPass;
}

int cmd_table_traces(const Options& o) {
  const int k = require(o.k, "--k");
  const int n = require(o.j, "--j");
  const int order = o.order.value_or(30);
  const std::string format = o.format.empty() ? "csv" : o.format;
  TraceWeight w = TraceWeight::phi;
  if (o.method == "psi")
    w = TraceWeight::psi;
  else if (!o.method.empty() && o.method != "phi")
    throw InvalidArgument("traces take --method phi or psi");
  if (n < 0) throw InvalidArgument("--j must be >= 0");
  const int members = std::max(2, n + n % 2);
  // k = 1 selects the Eisenstein family G, otherwise f_k.
  const SeriesFamily fam =
      k == 1 ? eisenstein_family(members, order)
             : f_family(k, members, order, parse_family_route(o.route), o.allow_k2).members;
  emit(o, render_series({"trace", k, n, trace(n, w, fam)}, format));
  return kExitPass;
}

int cmd_verify(const Options& o) {
  suites::SuiteParams p{o.k, o.maxj, o.maxn, o.maxm, o.order, o.inject_fault};
  const auto reports = suites::run(o.suite, p);
  std::ostringstream text;
  bool all = true;
  for (const auto& r : reports) {
    for (const auto& c : r.checks)
      text << (c.pass ? "PASS " : "FAIL ") << r.suite << ": " << c.name << " -- " << c.detail
           << "\n";
    text << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size()
         << " checks)\n";
    all = all && r.pass();
  }
  emit(o, text.str());
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series for mock Eisenstein series and k-rank moments"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "statistic index k");
    sub->add_option("--j", o.j, "series index j (trace size n for traces)");
    sub->add_option("--maxj", o.maxj, "largest j (w-degree Nw for the pde suite)");
    sub->add_option("--maxn", o.maxn, "largest n in count tables");
    sub->add_option("--maxm", o.maxm, "largest |m| in count tables");
    sub->add_option("--order", o.order, "q truncation order");
    sub->add_option("--method", o.method, "moment method or trace weight");
    sub->add_option("--route", o.route, "recursionA, recursionB or logRoute");
    sub->add_option("--format", o.format, "text, json, bfile or csv");
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_flag("--allow-k2", o.allow_k2, "permit the k = 2 extrapolation");
  };

  auto* f = app.add_subcommand("f", "print f_{k,j}");
  add_common(f);

  auto* table = app.add_subcommand("table", "emit a count, moment or trace table");
  std::string kind;
  table->add_option("kind", kind, "Nk, moments or traces")->required();
  add_common(table);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--suite", o.suite,
                     "all, series, counts, moments, routes, traces, integrality, pattern, pde, "
                     "theta-ode or crank");
  verify->add_flag("--inject-fault", o.inject_fault, "corrupt one reference value (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*f) return cmd_f(o);
    if (*table) {
      if (kind == "Nk") return cmd_table_nk(o);
      if (kind == "moments") return cmd_table_moments(o);
      if (kind == "traces") return cmd_table_traces(o);
      throw InvalidArgument("unknown table kind '" + kind + "'");
    }
    if (*verify) return cmd_verify(o);
  } catch (const mockeis::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
