#include "permastat/matrix.hpp"

#include <utility>

namespace permastat {

ExactRational det_exact(const RatMatrix& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw NonSquareMatrix("matrix has " + std::to_string(n) + " rows but a row of length " +
                            std::to_string(row.size()));
  if (n == 0) return 1;

  // clear denominators row by row; det(M) = det(A) / prod(row scales)
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Int scale = 1;
  for (size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (const auto& x : m[i]) l = boost::multiprecision::lcm(l, x.den());
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j].num() * (l / m[i][j].den());
    scale *= l;
  }

  // Bareiss fraction-free elimination: every division below is exact
  int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Int det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return ExactRational(det, scale);
}

} // namespace permastat
