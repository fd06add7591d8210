#pragma once
#include <cassert>
#include <complex>
#include <vector>

#include "hirota/errors.hpp"

namespace hirota {

using cplx = std::complex<double>;

// Truncated complex power series in one local parameter. Order is the highest
// retained power; all arithmetic is exact truncation of the formal series.
struct Jet {
  std::vector<cplx> c;  // c[k] multiplies parameter^k

  Jet() : c(1, cplx(0.0)) {}
  explicit Jet(int order, cplx c0 = 0.0) : c(order + 1, cplx(0.0)) { c[0] = c0; }

  int order() const { return static_cast<int>(c.size()) - 1; }
  cplx operator[](int k) const { return k <= order() ? c[k] : cplx(0.0); }

  static Jet constant(cplx v, int order) { return Jet(order, v); }
  static Jet variable(cplx v, int order) {
    Jet j(order, v);
    if (order >= 1) j.c[1] = 1.0;
    return j;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r(std::max(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.c[k] = a[k] + b[k];
  return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r(std::max(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.c[k] = a[k] - b[k];
  return r;
}
inline Jet operator-(const Jet& a) {
  Jet r = a;
  for (auto& x : r.c) x = -x;
  return r;
}
inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r(std::max(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) {
    cplx s = 0.0;
    for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
    r.c[k] = s;
  }
  return r;
}
inline Jet operator*(cplx s, const Jet& a) {
  Jet r = a;
  for (auto& x : r.c) x *= s;
  return r;
}
inline Jet operator*(const Jet& a, cplx s) { return s * a; }
inline Jet operator+(const Jet& a, cplx s) {
  Jet r = a;
  r.c[0] += s;
  return r;
}
inline Jet operator+(cplx s, const Jet& a) { return a + s; }
inline Jet operator-(const Jet& a, cplx s) { return a + (-s); }
inline Jet operator-(cplx s, const Jet& a) { return (-a) + s; }

inline Jet jet_div(const Jet& a, const Jet& b) {
  if (b[0] == cplx(0.0)) throw ZeroArgument("jet_div: zero leading coefficient");
  Jet r(std::max(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) {
    cplx s = a[k];
    for (int j = 0; j < k; ++j) s -= r.c[j] * b[k - j];
    r.c[k] = s / b[0];
  }
  return r;
}
inline Jet operator/(const Jet& a, const Jet& b) { return jet_div(a, b); }
inline Jet operator/(const Jet& a, cplx s) { return (1.0 / s) * a; }

inline Jet jet_exp(const Jet& u) {
  Jet f(u.order());
  f.c[0] = std::exp(u[0]);
  for (int k = 1; k <= u.order(); ++k) {
    cplx s = 0.0;
    for (int j = 1; j <= k; ++j) s += double(j) * u[j] * f.c[k - j];
    f.c[k] = s / double(k);
  }
  return f;
}

inline Jet jet_sinh(const Jet& u) { return 0.5 * (jet_exp(u) - jet_exp(-u)); }
inline Jet jet_cosh(const Jet& u) { return 0.5 * (jet_exp(u) + jet_exp(-u)); }

// sqrt of a jet with nonzero leading coefficient; principal branch of the constant term
inline Jet jet_sqrt(const Jet& u) {
  if (u[0] == cplx(0.0)) throw ZeroArgument("jet_sqrt: zero leading coefficient");
  Jet g(u.order());
  g.c[0] = std::sqrt(u[0]);
  for (int k = 1; k <= u.order(); ++k) {
    cplx s = u[k];
    for (int j = 1; j < k; ++j) s -= g.c[j] * g.c[k - j];
    g.c[k] = s / (2.0 * g.c[0]);
  }
  return g;
}

// arcsinh via v' = u'/sqrt(1+u^2)
inline Jet jet_arcsinh(const Jet& u) {
  Jet w = jet_sqrt(u * u + 1.0);
  Jet du(u.order());
  for (int k = 1; k <= u.order(); ++k) du.c[k - 1] = double(k) * u[k];
  Jet q = du / w;
  Jet v(u.order());
  v.c[0] = std::log(u[0] + std::sqrt(u[0] * u[0] + 1.0));
  for (int k = 1; k <= u.order(); ++k) v.c[k] = q[k - 1] / double(k);
  return v;
}

}  // namespace hirota
