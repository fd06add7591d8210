#pragma once
#include <cmath>
#include <complex>
#include <vector>

#include "hirota/errors.hpp"

namespace hirota {

using cplx = std::complex<double>;

// Dense complex matrices, tiny sizes only (N <= 8): LU with partial pivoting.
struct MatN {
  int n = 0;
  std::vector<cplx> a;  // row-major

  MatN() = default;
  explicit MatN(int n_) : n(n_), a(size_t(n_) * n_, cplx(0.0)) {}
  cplx& operator()(int i, int j) { return a[size_t(i) * n + j]; }
  cplx operator()(int i, int j) const { return a[size_t(i) * n + j]; }

  double max_abs() const {
    double m = 0.0;
    for (auto& x : a) m = std::max(m, std::abs(x));
    return m;
  }
};

inline MatN operator+(const MatN& x, const MatN& y) {
  MatN r(x.n);
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

inline MatN mul(const MatN& x, const MatN& y) {
  MatN r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      cplx v = x(i, k);
      if (v == cplx(0.0)) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

// Hermitian transpose
inline MatN dagger(const MatN& x) {
  MatN r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

inline cplx lu_det(MatN m) {
  cplx det = 1.0;
  int n = m.n;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(m(i, c)) > std::abs(m(piv, c))) piv = i;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.a[size_t(c) * n + j], m.a[size_t(piv) * n + j]);
      det = -det;
    }
    if (m(c, c) == cplx(0.0)) return 0.0;
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      cplx f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Solve m x = b in place (b overwritten with x).
inline std::vector<cplx> lu_solve(MatN m, std::vector<cplx> b) {
  int n = m.n;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(m(i, c)) > std::abs(m(piv, c))) piv = i;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.a[size_t(c) * n + j], m.a[size_t(piv) * n + j]);
      std::swap(b[c], b[piv]);
    }
    if (m(c, c) == cplx(0.0)) throw SingularGram("lu_solve: singular matrix");
    for (int i = c + 1; i < n; ++i) {
      cplx f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
      b[i] -= f * b[c];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    cplx s = b[i];
    for (int j = i + 1; j < n; ++j) s -= m(i, j) * b[j];
    b[i] = s / m(i, i);
  }
  return b;
}

}  // namespace hirota
