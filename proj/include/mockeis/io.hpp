#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mockeis/errors.hpp"
#include "mockeis/partition.hpp"
#include "mockeis/qseries.hpp"

// Serialization of series and count tables. Rationals always travel as
// "num/den" strings so nothing is lost on a round trip.

namespace mockeis {

struct LabeledSeries {
  std::string kind;  // "f", "moment", "trace", ...
  int k = 0;
  int j = 0;
  QSeries series;
};

inline nlohmann::ordered_json to_json(const LabeledSeries& s) {
  nlohmann::ordered_json out;
  out["object"] = "qseries";
  out["kind"] = s.kind;
  out["k"] = s.k;
  out["j"] = s.j;
  out["order"] = s.series.order();
  auto coeffs = nlohmann::ordered_json::array();
  for (int n = 0; n <= s.series.order(); ++n) coeffs.push_back(to_fraction_string(s.series[n]));
  out["coefficients"] = std::move(coeffs);
  return out;
}

inline LabeledSeries labeled_series_from_json(const nlohmann::json& in) {
  try {
    if (in.at("object") != "qseries") throw InvalidArgument("JSON object is not a qseries");
    const auto& coeffs = in.at("coefficients");
    const int order = in.at("order").get<int>();
    if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
      throw InvalidArgument("coefficient count does not match order");
    QSeries s(order);
    for (int n = 0; n <= order; ++n)
      s[n] = parse_rational(coeffs[static_cast<std::size_t>(n)].get<std::string>());
    return {in.value("kind", std::string("f")), in.at("k").get<int>(), in.at("j").get<int>(),
            std::move(s)};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed qseries JSON: ") + e.what());
  }
}

inline LabeledSeries parse_labeled_series(const std::string& text) {
  try {
    return labeled_series_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed qseries JSON: ") + e.what());
  }
}

/// OEIS b-file lines "n a(n)". Refuses non-integral coefficients.
inline std::string to_bfile(const QSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    if (!is_integer(s[n]))
      throw NonIntegralSeries("coefficient of q^" + std::to_string(n) + " is " + to_string(s[n]) +
                              "; b-files hold integers only");
    out += std::to_string(n) + " " + s[n].get_num().get_str() + "\n";
  }
  return out;
}

/// "n,coefficient" rows; coefficients in "num/den" form only when fractional.
inline std::string to_csv(const QSeries& s) {
  std::string out = "n,coefficient\n";
  for (int n = 0; n <= s.order(); ++n) out += std::to_string(n) + "," + to_string(s[n]) + "\n";
  return out;
}

/// "m,n,count" rows, n ascending, then m ascending.
inline std::string to_csv(const CountTable& t) {
  std::string out = "m,n,count\n";
  for (int n = 0; n <= t.max_n(); ++n)
    for (int m = -t.max_abs_m(); m <= t.max_abs_m(); ++m)
      out += std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(t.at(m, n)) + "\n";
  return out;
}

inline nlohmann::ordered_json to_json(const CountTable& t) {
  nlohmann::ordered_json out;
  out["object"] = "count_table";
  out["k"] = t.k();
  out["max_abs_m"] = t.max_abs_m();
  out["max_n"] = t.max_n();
  auto rows = nlohmann::ordered_json::array();
  for (int n = 0; n <= t.max_n(); ++n)
    for (int m = -t.max_abs_m(); m <= t.max_abs_m(); ++m)
      rows.push_back({{"m", m}, {"n", n}, {"count", t.at(m, n)}});
  out["entries"] = std::move(rows);
  return out;
}

}  // namespace mockeis
