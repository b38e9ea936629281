#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"

namespace cliffym {

// Small dense real square matrix, row-major. Used for frame fields y^mu_a
// (row mu, column a).
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(int n) : n_(n), v_(static_cast<std::size_t>(n) * n, 0.0) {}
  RealMatrix(int n, std::vector<double> v) : n_(n), v_(std::move(v)) {
    if (v_.size() != static_cast<std::size_t>(n) * n) throw DomainError("matrix data size mismatch");
  }
  static RealMatrix identity(int n) {
    RealMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return n_; }
  double operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * n_ + j]; }
  double& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * n_ + j]; }

  RealMatrix transpose() const {
    RealMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  double max_norm() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }

  RealMatrix& operator+=(const RealMatrix& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  RealMatrix& operator-=(const RealMatrix& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  RealMatrix& operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
  }
  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }
  friend RealMatrix operator-(RealMatrix a) { return a *= -1.0; }
  friend RealMatrix operator*(RealMatrix a, double s) { return a *= s; }
  friend RealMatrix operator*(double s, RealMatrix a) { return a *= s; }
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  int n_ = 0;
  std::vector<double> v_;
};

}  // namespace cliffym
