#ifndef FDS_LINALG_HPP
#define FDS_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "fds/algebraic.hpp"
#include "fds/rational.hpp"

namespace fds {

template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), K{}) {}
  K& operator()(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
  const K& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)];
  }
};

inline int k_sign(const Rat& x) { return sgn(x); }
inline int k_sign(const NFElem& x) { return x.sign(); }
inline bool k_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool k_is_zero(const NFElem& x) { return x.is_zero(); }
inline Rat k_from_long(const Rat&, long v) { return Rat(v); }
inline NFElem k_from_long(const NFElem&, long v) { return NFElem(Rat(v)); }

template <class K>
Mat<K> mat_mul(const Mat<K>& A, const Mat<K>& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat<K> C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (k_is_zero(A(i, k))) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) = C(i, j) + A(i, k) * B(k, j);
    }
  return C;
}

template <class K>
Mat<K> mat_transpose(const Mat<K>& A) {
  Mat<K> T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

// Exact rank by ordinary elimination over the field K (also the test oracle
// for bareiss_rank on rationals).
template <class K>
int gauss_rank(Mat<K> m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (!k_is_zero(m(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    K inv = k_from_long(m(rank, col), 1) / m(rank, col);
    for (int i = rank + 1; i < m.rows; ++i) {
      if (k_is_zero(m(i, col))) continue;
      K f = m(i, col) * inv;
      for (int j = col; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Fraction-free Bareiss elimination with full pivoting.
int bareiss_rank(const Mat<Rat>& m);

// Coefficients of det(lambda*I - M), ascending, degree n monic.
// Faddeev-LeVerrier; exact over any field of characteristic zero.
template <class K>
std::vector<K> charpoly(const Mat<K>& M) {
  if (M.rows != M.cols) throw std::invalid_argument("charpoly: square matrix required");
  const int n = M.rows;
  std::vector<K> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = k_from_long(K{}, 1);
  if (n == 0) return c;
  Mat<K> B = M;
  auto trace = [&](const Mat<K>& A) {
    K t{};
    for (int i = 0; i < n; ++i) t = t + A(i, i);
    return t;
  };
  K minus_one = k_from_long(K{}, -1);
  c[static_cast<size_t>(n - 1)] = minus_one * trace(B);
  for (int k = 2; k <= n; ++k) {
    Mat<K> Bk = B;
    for (int i = 0; i < n; ++i) Bk(i, i) = Bk(i, i) + c[static_cast<size_t>(n - k + 1)];
    B = mat_mul(M, Bk);
    K t = trace(B);
    c[static_cast<size_t>(n - k)] = minus_one * t / k_from_long(K{}, k);
  }
  return c;
}

// All eigenvalues nonnegative, by weak sign alternation of det(lambda*I - M):
// coefficient of lambda^k must have sign (-1)^(n-k) or vanish. Valid when all
// roots are real (symmetric input).
template <class K>
bool psd_from_charpoly(const std::vector<K>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  for (int k = 0; k <= n; ++k) {
    int s = k_sign(coeffs[static_cast<size_t>(k)]);
    if (s == 0) continue;
    if (((n - k) % 2 == 0 && s < 0) || ((n - k) % 2 == 1 && s > 0)) return false;
  }
  return true;
}

bool psd_from_charpoly_rat(const std::vector<Rat>& coeffs);

enum class CholStatus { Ok, NotPsd };

// G = P^T (L D L^T) P with unit lower-triangular L and positive diagonal D;
// diagonal (complete) pivoting picks the largest remaining diagonal entry.
// Realizing coordinates are V = sqrt(D) L^T, columns permuted back.
template <class K>
struct CholeskyLDL {
  CholStatus status = CholStatus::Ok;
  int rank = 0;
  std::vector<int> perm;  // perm[k] = original index handled at step k
  Mat<K> L;               // n x rank, unit "diagonal" in pivot order
  std::vector<K> D;       // rank positive pivots
};

template <class K>
CholeskyLDL<K> ldlt_complete_pivot(const Mat<K>& G) {
  if (G.rows != G.cols) throw std::invalid_argument("ldlt: square matrix required");
  const int n = G.rows;
  CholeskyLDL<K> out;
  Mat<K> W = G;
  out.perm.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.perm[static_cast<size_t>(i)] = i;
  out.L = Mat<K>(n, n);
  int k = 0;
  for (; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (k_sign(W(i, i) - W(piv, piv)) > 0) piv = i;
    int psig = k_sign(W(piv, piv));
    if (psig < 0) {
      out.status = CholStatus::NotPsd;
      return out;
    }
    if (psig == 0) break;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(W(piv, j), W(k, j));
      for (int i = 0; i < n; ++i) std::swap(W(i, piv), W(i, k));
      std::swap(out.perm[static_cast<size_t>(piv)], out.perm[static_cast<size_t>(k)]);
      for (int j = 0; j < k; ++j) std::swap(out.L(piv, j), out.L(k, j));
    }
    K d = W(k, k);
    out.D.push_back(d);
    out.L(k, k) = k_from_long(d, 1);
    K dinv = k_from_long(d, 1) / d;
    for (int i = k + 1; i < n; ++i) out.L(i, k) = W(i, k) * dinv;
    for (int i = k + 1; i < n; ++i) {
      if (k_is_zero(W(i, k))) continue;
      K f = out.L(i, k);
      for (int j = k + 1; j < n; ++j) W(i, j) = W(i, j) - f * W(k, j);
    }
    for (int i = k + 1; i < n; ++i) {
      W(i, k) = K{};
      W(k, i) = K{};
    }
  }
  out.rank = k;
  // All remaining diagonal entries vanished; PSD forces the whole block to 0.
  for (int i = k; i < n; ++i)
    for (int j = k; j < n; ++j)
      if (!k_is_zero(W(i, j))) {
        out.status = CholStatus::NotPsd;
        return out;
      }
  return out;
}

// Exact verification P G P^T == L D L^T restricted to the first r pivots.
template <class K>
bool ldlt_roundtrip_ok(const Mat<K>& G, const CholeskyLDL<K>& ch) {
  const int n = G.rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      K acc{};
      for (int k = 0; k < ch.rank; ++k)
        acc = acc + ch.L(i, k) * ch.D[static_cast<size_t>(k)] * ch.L(j, k);
      K expect = G(ch.perm[static_cast<size_t>(i)], ch.perm[static_cast<size_t>(j)]);
      if (!k_is_zero(acc - expect)) return false;
    }
  return true;
}

}  // namespace fds

#endif
