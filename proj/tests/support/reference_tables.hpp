#pragma once

#include <string>
#include <vector>

// Published expansions of f_{k,j}: the constant term, then the coefficients of
// q^k, q^{k+1}, ... q^{k+5}. Coefficients of q^1..q^{k-1} are zero.
// In the k = 4, j = 6 row the sixth entry is printed with exponent 7; read in
// sequence it belongs to q^8.

namespace testsupport {

struct ReferenceRow {
  int k;
  int j;
  std::string constant;
  std::vector<long> from_qk;
};

inline const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {3, 2, "-1/24", {1, 3, 5, 7, 9, 11}},
      {3, 4, "1/240", {1, 15, 65, 169, 333, 557}},
      {3, 6, "-1/504", {1, 63, 665, 3337, 10989, 27581}},
      {3, 8, "1/480", {1, 255, 6305, 58849, 319293, 1216037}},
      {4, 2, "-1/24", {1, 3, 5, 7, 9, 11}},
      {4, 4, "1/240", {1, 15, 65, 175, 363, 635}},
      {4, 6, "-1/504", {1, 63, 665, 3367, 11499, 30491}},
      {4, 8, "1/480", {1, 255, 6305, 58975, 324963, 1283195}},
      {5, 2, "-1/24", {1, 3, 5, 7, 9, 11}},
      {5, 4, "1/240", {1, 15, 65, 175, 369, 665}},
      {5, 6, "-1/504", {1, 63, 665, 3367, 11529, 31001}},
      {5, 8, "1/480", {1, 255, 6305, 58975, 325089, 1288865}},
  };
  return rows;
}

}  // namespace testsupport
