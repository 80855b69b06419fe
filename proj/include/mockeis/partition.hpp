#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mockeis/errors.hpp"

namespace mockeis {

/// Largest n accepted by the brute-force enumerators. p(40) = 37338.
inline constexpr int kEnumerationCeiling = 40;

/// A partition: non-increasing positive parts. The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InvalidArgument("partition parts must be non-increasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Multiplicity of part k (the l_k of 1^{l_1} 2^{l_2} ...).
  int multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Calls visit(parts) for every partition of n in reverse-lexicographic
/// order, starting at (n) and ending at (1,...,1). No ceiling.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
  if (n < 0) throw InvalidArgument("cannot partition a negative integer");
  std::vector<int> a;
  if (n == 0) {
    visit(std::as_const(a));
    return;
  }
  a.push_back(n);
  while (true) {
    visit(std::as_const(a));
    // Strip trailing ones, then decrement the last part > 1 and refill.
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    int rem = ones + 1;
    const int k = --a.back();
    while (rem > 0) {
      const int p = std::min(k, rem);
      a.push_back(p);
      rem -= p;
    }
  }
}

inline std::vector<Partition> enumerate_partitions(int n) {
  if (n > kEnumerationCeiling)
    throw WindowTooLarge("enumeration ceiling is n = " + std::to_string(kEnumerationCeiling));
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

namespace detail {

// Durfee size of the rows parts[first..] (all later rows are <= parts[first]).
inline int durfee_of_rows(const std::vector<int>& parts, std::size_t first) {
  int r = 0;
  while (first + static_cast<std::size_t>(r) < parts.size() &&
         parts[first + static_cast<std::size_t>(r)] >= r + 1)
    ++r;
  return r;
}

inline std::vector<int> durfee_sizes(const std::vector<int>& parts) {
  std::vector<int> d;
  std::size_t row = 0;
  while (row < parts.size()) {
    const int s = durfee_of_rows(parts, row);
    d.push_back(s);
    row += static_cast<std::size_t>(s);
  }
  return d;
}

inline int crank(const std::vector<int>& parts) {
  const int ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  if (ones == 0) return parts.empty() ? 0 : parts.front();
  const int mu =
      static_cast<int>(std::count_if(parts.begin(), parts.end(), [&](int p) { return p > ones; }));
  return mu - ones;
}

// k-rank for k >= 2, 0 when fewer than k-1 successive Durfee squares exist.
inline int k_rank(const std::vector<int>& parts, int k) {
  const auto d = durfee_sizes(parts);
  if (static_cast<int>(d.size()) < k - 1) return 0;
  const int d1 = d.front();
  const int bound = d[static_cast<std::size_t>(k - 2)];
  int short_columns = 0;
  const int largest = parts.empty() ? 0 : parts.front();
  for (int col = d1 + 1; col <= largest; ++col) {
    const auto len = std::count_if(parts.begin(), parts.end(), [&](int p) { return p >= col; });
    if (len <= bound) ++short_columns;
  }
  const int covered = std::accumulate(d.begin(), d.begin() + (k - 1), 0);
  return short_columns - (static_cast<int>(parts.size()) - covered);
}

}  // namespace detail

/// Sizes (d_1, d_2, ...) of the successive Durfee squares: each square is
/// taken in the rows left below the previous one.
inline std::vector<int> durfee_sizes(const Partition& lam) {
  return detail::durfee_sizes(lam.parts());
}

/// Crank of a partition. The partition (1) is refused: its count is fixed by
/// convention in count_table rather than by the statistic.
inline int crank(const Partition& lam) {
  if (lam.parts() == std::vector<int>{1})
    throw ConventionCase("crank of (1) is a counting convention, not a statistic value");
  return detail::crank(lam.parts());
}

/// Garvan's k-rank (k = 2 is Dyson's rank).
inline int k_rank(const Partition& lam, int k) {
  if (k < 2) throw InvalidArgument("k-rank needs k >= 2");
  return detail::k_rank(lam.parts(), k);
}

/// N_k(m, n) on the window |m| <= max_abs_m, 0 <= n <= max_n.
class CountTable {
 public:
  CountTable(int k, int max_abs_m, int max_n)
      : k_(k), max_abs_m_(max_abs_m), max_n_(max_n), entries_(checked_size(max_abs_m, max_n)) {}

  int k() const { return k_; }
  int max_abs_m() const { return max_abs_m_; }
  int max_n() const { return max_n_; }

  bool contains(int m, int n) const {
    return m >= -max_abs_m_ && m <= max_abs_m_ && n >= 0 && n <= max_n_;
  }

  std::int64_t at(int m, int n) const { return entries_[index(m, n)]; }
  std::int64_t& at(int m, int n) { return entries_[index(m, n)]; }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  static std::size_t checked_size(int max_abs_m, int max_n) {
    if (max_abs_m < 0 || max_n < 0) throw InvalidArgument("negative count-table window");
    return static_cast<std::size_t>((2 * max_abs_m + 1) * (max_n + 1));
  }

  std::size_t index(int m, int n) const {
    if (!contains(m, n))
      throw std::out_of_range("(" + std::to_string(m) + ", " + std::to_string(n) +
                              ") outside count-table window");
    return static_cast<std::size_t>(n * (2 * max_abs_m_ + 1) + (m + max_abs_m_));
  }

  int k_;
  int max_abs_m_;
  int max_n_;
  std::vector<std::int64_t> entries_;
};

/// Brute-force N_k(m, n). k = 1 counts cranks, k = 2 ranks, k >= 3 k-ranks of
/// partitions with at least k - 1 successive Durfee squares. Conventions:
/// N_1(+-1, 1) = 1, N_1(0, 1) = -1, N_2(0, 0) = 0, N_k(m, 0) = 0 for k >= 2.
inline CountTable count_table(int k, int max_abs_m, int max_n) {
  if (k < 1) throw InvalidArgument("count_table needs k >= 1");
  if (max_n > kEnumerationCeiling)
    throw WindowTooLarge("count_table: max_n exceeds enumeration ceiling " +
                         std::to_string(kEnumerationCeiling));
  CountTable table(k, max_abs_m, max_n);
  auto bump = [&](int m, int n, std::int64_t by) {
    if (table.contains(m, n)) table.at(m, n) += by;
  };
  for (int n = 0; n <= max_n; ++n) {
    if (k == 1 && n == 1) {
      bump(-1, 1, 1);
      bump(0, 1, -1);
      bump(1, 1, 1);
      continue;
    }
    if (k >= 2 && n == 0) continue;
    for_each_partition(n, [&](const std::vector<int>& parts) {
      if (k == 1) {
        bump(detail::crank(parts), n, 1);
        return;
      }
      if (static_cast<int>(detail::durfee_sizes(parts).size()) < k - 1) return;
      bump(detail::k_rank(parts, k), n, 1);
    });
  }
  return table;
}

}  // namespace mockeis
