#ifndef FUSCOH_FP_HPP
#define FUSCOH_FP_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fuscoh {

/* Arithmetic over F_p for small primes. Values are stored as uint8_t in 0..p-1. */

inline uint8_t fp_add(uint8_t a, uint8_t b, int p) { return uint8_t((a + b) % p); }
inline uint8_t fp_sub(uint8_t a, uint8_t b, int p) { return uint8_t((a + p - b) % p); }
inline uint8_t fp_mul(uint8_t a, uint8_t b, int p) { return uint8_t((int(a) * int(b)) % p); }
inline uint8_t fp_neg(uint8_t a, int p) { return a ? uint8_t(p - a) : 0; }

inline uint8_t fp_inv(uint8_t a, int p) {
  assert(a != 0);
  // p is tiny; scan.
  for (int x = 1; x < p; ++x)
    if ((x * int(a)) % p == 1) return uint8_t(x);
  throw std::logic_error("fp_inv: not invertible");
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Vec = std::vector<uint8_t>;

/* Dense matrix over F_p, row-major. */
struct Mat {
  int rows = 0, cols = 0;
  Vec a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

  uint8_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (uint8_t x : a)
      if (x) return false;
    return true;
  }
};

inline Mat mat_mul(const Mat& x, const Mat& y, int p) {
  assert(x.cols == y.rows);
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      uint8_t v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = uint8_t((z.at(i, j) + v * y.at(k, j)) % p);
    }
  return z;
}

inline Mat mat_add(const Mat& x, const Mat& y, int p) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = uint8_t((x.a[i] + y.a[i]) % p);
  return z;
}

inline Mat mat_scale(const Mat& x, uint8_t c, int p) {
  Mat z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = uint8_t((c * x.a[i]) % p);
  return z;
}

inline Vec mat_apply(const Mat& m, const Vec& v, int p) {
  assert(int(v.size()) == m.cols);
  Vec w(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    int acc = 0;
    for (int j = 0; j < m.cols; ++j) acc += int(m.at(i, j)) * v[j];
    w[i] = uint8_t(acc % p);
  }
  return w;
}

inline Vec vec_add(const Vec& x, const Vec& y, int p) {
  assert(x.size() == y.size());
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = uint8_t((x[i] + y[i]) % p);
  return z;
}

inline Vec vec_sub(const Vec& x, const Vec& y, int p) {
  assert(x.size() == y.size());
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = uint8_t((x[i] + p - y[i]) % p);
  return z;
}

inline Vec vec_scale(const Vec& x, uint8_t c, int p) {
  Vec z(x.size());
  for (size_t i = 0; i < x.size(); ++i) z[i] = uint8_t((c * x[i]) % p);
  return z;
}

inline bool vec_is_zero(const Vec& v) {
  for (uint8_t x : v)
    if (x) return false;
  return true;
}

/* Gaussian elimination: rank, inverse, kernel of dense matrices. */
inline int mat_rank(Mat m, int p) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, c)) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    uint8_t inv = fp_inv(m.at(rank, c), p);
    for (int j = c; j < m.cols; ++j) m.at(rank, j) = fp_mul(m.at(rank, j), inv, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || !m.at(r, c)) continue;
      uint8_t f = m.at(r, c);
      for (int j = c; j < m.cols; ++j)
        m.at(r, j) = fp_sub(m.at(r, j), fp_mul(f, m.at(rank, j), p), p);
    }
    ++rank;
  }
  return rank;
}

inline Mat mat_inverse(const Mat& m, int p) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Mat w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, n + i) = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (w.at(r, c)) { piv = r; break; }
    if (piv < 0) throw std::domain_error("mat_inverse: singular matrix");
    for (int j = 0; j < 2 * n; ++j) std::swap(w.at(piv, j), w.at(c, j));
    uint8_t inv = fp_inv(w.at(c, c), p);
    for (int j = 0; j < 2 * n; ++j) w.at(c, j) = fp_mul(w.at(c, j), inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == c || !w.at(r, c)) continue;
      uint8_t f = w.at(r, c);
      for (int j = 0; j < 2 * n; ++j)
        w.at(r, j) = fp_sub(w.at(r, j), fp_mul(f, w.at(c, j), p), p);
    }
  }
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
  return out;
}

/* Basis of { x : m x = 0 }. */
inline std::vector<Vec> mat_kernel(Mat m, int p) {
  int n = m.cols;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, c)) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    uint8_t inv = fp_inv(m.at(rank, c), p);
    for (int j = c; j < n; ++j) m.at(rank, j) = fp_mul(m.at(rank, j), inv, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || !m.at(r, c)) continue;
      uint8_t f = m.at(r, c);
      for (int j = c; j < n; ++j)
        m.at(r, j) = fp_sub(m.at(r, j), fp_mul(f, m.at(rank, j), p), p);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = fp_neg(m.at(r, c), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace fuscoh

#endif
