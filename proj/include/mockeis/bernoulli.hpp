#pragma once

#include <vector>

#include "mockeis/errors.hpp"
#include "mockeis/rational.hpp"

namespace mockeis {

/// Bernoulli numbers B_0..B_{n-1} with B_1 = -1/2, from
/// sum_{k=0}^{m} binom(m+1, k) B_k = 0.
inline std::vector<Rational> compute_bernoulli_numbers(int count) {
  std::vector<Rational> b(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    Rational acc = 0;
    for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

/// Read-only table shared by every caller; filled once on first use.
class BernoulliTable {
 public:
  static constexpr int kSize = 160;

  static const BernoulliTable& instance() {
    static const BernoulliTable table;
    return table;
  }

  const Rational& operator[](int j) const {
    if (j < 0 || j >= kSize) throw InvalidArgument("Bernoulli index out of table range");
    return values_[static_cast<std::size_t>(j)];
  }

 private:
  BernoulliTable() : values_(compute_bernoulli_numbers(kSize)) {}
  std::vector<Rational> values_;
};

inline const Rational& bernoulli(int j) { return BernoulliTable::instance()[j]; }

/// B_j(x) = sum_n binom(j, n) B_{j-n} x^n.
inline Rational bernoulli_poly(int j, const Rational& x) {
  if (j < 0) throw InvalidArgument("negative Bernoulli polynomial degree");
  Rational acc = 0;
  Rational xn = 1;
  for (int n = 0; n <= j; ++n) {
    acc += Rational(binomial(j, n)) * bernoulli(j - n) * xn;
    xn *= x;
  }
  return acc;
}

}  // namespace mockeis
