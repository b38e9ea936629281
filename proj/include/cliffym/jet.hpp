#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "multivector.hpp"

namespace cliffym {

// Additive identity with the same shape as `v`.
inline double zero_like(double) { return 0.0; }
inline Complex zero_like(const Complex&) { return {}; }
inline Multivector zero_like(const Multivector& v) { return Multivector(v.sig()); }
inline RealMatrix zero_like(const RealMatrix& v) { return RealMatrix(v.dim()); }

inline double max_norm(double v) { return std::abs(v); }
inline double max_norm(const Complex& v) { return std::abs(v); }
inline double max_norm(const Multivector& v) { return v.max_norm(); }
inline double max_norm(const RealMatrix& v) { return v.max_norm(); }

// Second-order Taylor jet of a function of `dim` real coordinates:
// value, gradient (order >= 1) and symmetric Hessian (order 2, stored full).
// Arithmetic on jets propagates derivatives exactly (forward-mode AD); the
// order of a product is the smaller of its operands' orders.
template <class T>
struct Jet {
  int order = 0;
  int dim = 0;
  T value;
  std::vector<T> grad;
  std::vector<T> hess;

  Jet() = default;
  Jet(T v, int dim_, int order_) : order(order_), dim(dim_), value(std::move(v)) {
    if (order < 0 || order > 2) throw DomainError("jet order must be 0, 1 or 2");
    const T z = zero_like(value);
    if (order >= 1) grad.assign(dim, z);
    if (order >= 2) hess.assign(static_cast<std::size_t>(dim) * dim, z);
  }

  // Independent variable x^mu (0-based) with value v.
  static Jet variable(double v, int mu, int dim_, int order_) {
    Jet j(T(v), dim_, order_);
    if (order_ >= 1) j.grad[mu] = T(1.0);
    return j;
  }

  const T& d(int i) const { return grad[i]; }
  T& d(int i) { return grad[i]; }
  const T& dd(int i, int j) const { return hess[static_cast<std::size_t>(i) * dim + j]; }
  T& dd(int i, int j) { return hess[static_cast<std::size_t>(i) * dim + j]; }

  // Jet of the partial derivative along coordinate mu (one order lower).
  Jet derivative(int mu) const {
    if (order < 1) throw DomainError("derivative requested from an order-0 jet");
    Jet out(grad[mu], dim, order - 1);
    if (order == 2)
      for (int i = 0; i < dim; ++i) out.grad[i] = dd(mu, i);
    return out;
  }

  Jet truncated(int new_order) const {
    if (new_order > order) throw DomainError("cannot raise jet order by truncation");
    Jet out = *this;
    out.order = new_order;
    if (new_order < 2) out.hess.clear();
    if (new_order < 1) out.grad.clear();
    return out;
  }

  double max_norm() const {
    double m = cliffym::max_norm(value);
    for (const auto& g : grad) m = std::max(m, cliffym::max_norm(g));
    for (const auto& h : hess) m = std::max(m, cliffym::max_norm(h));
    return m;
  }

  template <class F>
  Jet map(F&& f) const {
    Jet out;
    out.order = order;
    out.dim = dim;
    out.value = f(value);
    for (const auto& g : grad) out.grad.push_back(f(g));
    for (const auto& h : hess) out.hess.push_back(f(h));
    return out;
  }

  Jet& operator+=(const Jet& o) {
    lower_to(o.order);
    value += o.value;
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] += o.grad[i];
    for (std::size_t i = 0; i < hess.size(); ++i) hess[i] += o.hess[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    lower_to(o.order);
    value -= o.value;
    for (std::size_t i = 0; i < grad.size(); ++i) grad[i] -= o.grad[i];
    for (std::size_t i = 0; i < hess.size(); ++i) hess[i] -= o.hess[i];
    return *this;
  }
  template <class S>
  Jet& operator*=(const S& s) {
    value *= s;
    for (auto& g : grad) g *= s;
    for (auto& h : hess) h *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) { return a *= -1.0; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator*(Jet a, Complex s) requires(!std::is_same_v<T, double>) { return a *= s; }
  friend Jet operator*(Complex s, Jet a) requires(!std::is_same_v<T, double>) { return a *= s; }

 private:
  void lower_to(int o) {
    if (o < order) *this = truncated(o);
  }
};

// Leibniz rule, truncated at the smaller order.
template <class A, class B>
auto operator*(const Jet<A>& a, const Jet<B>& b) -> Jet<decltype(a.value * b.value)> {
  using R = decltype(a.value * b.value);
  if (a.dim != b.dim) throw DomainError("jet dimensions differ");
  Jet<R> out;
  out.dim = a.dim;
  out.order = std::min(a.order, b.order);
  out.value = a.value * b.value;
  if (out.order >= 1) {
    out.grad.reserve(a.dim);
    for (int i = 0; i < a.dim; ++i) out.grad.push_back(a.grad[i] * b.value + a.value * b.grad[i]);
  }
  if (out.order >= 2) {
    out.hess.assign(static_cast<std::size_t>(a.dim) * a.dim, zero_like(out.value));
    for (int i = 0; i < a.dim; ++i)
      for (int j = i; j < a.dim; ++j) {
        R h = a.dd(i, j) * b.value + a.value * b.dd(i, j) + a.grad[i] * b.grad[j] + a.grad[j] * b.grad[i];
        if (i != j) out.dd(j, i) = h;
        out.dd(i, j) = std::move(h);
      }
  }
  return out;
}

// exp(X) for a jet with an algebra-valued value; `one` is the unit of that
// algebra. Terms are summed until the whole term jet falls below tol.
template <class T>
Jet<T> exponential(const Jet<T>& x, const T& one, double tol, int max_terms) {
  if (!(tol > 0.0)) throw DomainError("exponential tolerance must be positive");
  Jet<T> sum(one, x.dim, x.order);
  Jet<T> term = sum;
  double last = 1.0;
  for (int k = 1; k <= max_terms; ++k) {
    term = term * x;
    term *= 1.0 / k;
    sum += term;
    last = term.max_norm();
    if (last < tol) return sum;
  }
  throw ConvergenceError("jet exponential did not converge in " + std::to_string(max_terms) + " terms", last);
}

// Given V = X^{-1} for the value, d(X^{-1}) = -V dX V and
// d2(X^{-1})_{ij} = -V X_ij V + V X_i V X_j V + V X_j V X_i V.
template <class T, class Inv>
Jet<T> inverse_jet(const Jet<T>& x, Inv&& invert_value) {
  const T v = invert_value(x.value);
  Jet<T> out(v, x.dim, x.order);
  if (x.order >= 1)
    for (int i = 0; i < x.dim; ++i) out.grad[i] = -(v * x.grad[i] * v);
  if (x.order >= 2) {
    std::vector<T> vxv;
    for (int i = 0; i < x.dim; ++i) vxv.push_back(v * x.grad[i] * v);
    for (int i = 0; i < x.dim; ++i)
      for (int j = i; j < x.dim; ++j) {
        T h = vxv[i] * x.grad[j] * v + vxv[j] * x.grad[i] * v - v * x.dd(i, j) * v;
        if (i != j) out.dd(j, i) = h;
        out.dd(i, j) = std::move(h);
      }
  }
  return out;
}

}  // namespace cliffym
