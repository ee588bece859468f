#include "fds/linalg.hpp"

namespace fds {

int bareiss_rank(const Mat<Rat>& m) {
  const int rows = m.rows, cols = m.cols;
  if (rows == 0 || cols == 0) return 0;
  // Clear denominators row by row (row scaling preserves rank).
  std::vector<std::vector<Int>> a(static_cast<size_t>(rows), std::vector<Int>(static_cast<size_t>(cols)));
  for (int i = 0; i < rows; ++i) {
    Int l(1);
    for (int j = 0; j < cols; ++j) l = int_lcm(l, m(i, j).get_den());
    for (int j = 0; j < cols; ++j) {
      Rat scaled = m(i, j) * Rat(l);
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = scaled.get_num();
    }
  }
  Int prev(1);
  int rank = 0;
  const int steps = std::min(rows, cols);
  for (int k = 0; k < steps; ++k) {
    // Full pivoting: any nonzero entry in the trailing block.
    int pi = -1, pj = -1;
    for (int i = k; i < rows && pi < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (sgn(a[static_cast<size_t>(i)][static_cast<size_t>(j)]) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != k) std::swap(a[static_cast<size_t>(pi)], a[static_cast<size_t>(k)]);
    if (pj != k)
      for (int i = 0; i < rows; ++i)
        std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(pj)],
                  a[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    ++rank;
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        Int num = a[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                      a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                  a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                      a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        mpz_divexact(a[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                     num.get_mpz_t(), prev.get_mpz_t());
      }
      a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
    }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return rank;
}

bool psd_from_charpoly_rat(const std::vector<Rat>& coeffs) { return psd_from_charpoly(coeffs); }

}  // namespace fds
