#pragma once

#include <functional>
#include <string>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace cliffym {

using MatrixJet = Jet<RealMatrix>;

inline constexpr double kFrameTolerance = 1e-10;

inline RealMatrix metric_matrix(Signature sig) {
  RealMatrix eta(sig.n());
  for (int a = 1; a <= sig.n(); ++a) eta(a - 1, a - 1) = sig.metric(a);
  return eta;
}

// max |Y eta Y^T - eta|: violation of y^mu_a y^nu_b eta^{ab} = eta^{mu nu}.
inline double frame_violation(const RealMatrix& y, Signature sig) {
  const RealMatrix eta = metric_matrix(sig);
  return (y * eta * y.transpose() - eta).max_norm();
}

struct RotationPlane {
  int a = 1;  // 1-based, a < b
  int b = 2;
  Polynomial angle;  // real part is used
};

struct FrameSpec {
  enum class Kind { identity, constant, rotation };
  Kind kind = Kind::identity;
  RealMatrix matrix;                 // constant
  std::vector<RotationPlane> planes; // rotation
};

// n real vector fields y^mu_a(x): row mu, column a.
class FrameField {
 public:
  using JetFn = std::function<MatrixJet(const std::vector<double>&, int)>;

  FrameField(Signature sig, FrameSpec::Kind kind, JetFn fn) : sig_(sig), kind_(kind), fn_(std::move(fn)) {}

  const Signature& sig() const { return sig_; }
  FrameSpec::Kind kind() const { return kind_; }

  MatrixJet jet(const std::vector<double>& x, int order) const {
    if (static_cast<int>(x.size()) != sig_.n()) throw DomainError("point dimension does not match frame");
    return fn_(x, order);
  }
  RealMatrix at(const std::vector<double>& x) const { return jet(x, 0).value; }

  // y^b_nu = eta^{ab} eta_{mu nu} y^mu_a, returned with row b, column nu.
  RealMatrix coframe(const std::vector<double>& x) const {
    const RealMatrix y = at(x);
    RealMatrix c(sig_.n());
    for (int b = 0; b < sig_.n(); ++b)
      for (int nu = 0; nu < sig_.n(); ++nu) c(b, nu) = sig_.metric(b + 1) * sig_.metric(nu + 1) * y(nu, b);
    return c;
  }

  void validate(const std::vector<std::vector<double>>& points, double tol = kFrameTolerance) const {
    for (const auto& x : points) {
      const double v = frame_violation(at(x), sig_);
      if (!(v <= tol)) throw ValidationError("frame orthogonality fails", x, v);
    }
  }

 private:
  Signature sig_;
  FrameSpec::Kind kind_;
  JetFn fn_;
};

inline FrameField make_frame_field(Signature sig, const FrameSpec& spec) {
  const int n = sig.n();
  switch (spec.kind) {
    case FrameSpec::Kind::identity:
      return FrameField(sig, spec.kind, [n](const std::vector<double>&, int order) {
        return MatrixJet(RealMatrix::identity(n), n, order);
      });
    case FrameSpec::Kind::constant: {
      if (spec.matrix.dim() != n) throw DomainError("frame matrix must be n x n");
      const double v = frame_violation(spec.matrix, sig);
      if (!(v <= kFrameTolerance)) throw ValidationError("constant frame is not pseudo-orthogonal", {}, v);
      RealMatrix m = spec.matrix;
      return FrameField(sig, spec.kind, [m, n](const std::vector<double>&, int order) { return MatrixJet(m, n, order); });
    }
    case FrameSpec::Kind::rotation: {
      for (const auto& pl : spec.planes)
        if (pl.a < 1 || pl.b > n || pl.a >= pl.b) throw DomainError("rotation plane indices must satisfy 1 <= a < b <= n");
      const RealMatrix eta = metric_matrix(sig);
      auto planes = spec.planes;
      // Y = exp(K eta) with K antisymmetric satisfies Y eta Y^T = eta.
      return FrameField(sig, spec.kind, [planes, eta, n](const std::vector<double>& x, int order) {
        MatrixJet gen(RealMatrix(n), n, order);
        for (const auto& pl : planes) {
          const Jet<Complex> th = pl.angle.jet(x, order);
          RealMatrix e(n);
          e(pl.a - 1, pl.b - 1) = 1.0;
          e(pl.b - 1, pl.a - 1) = -1.0;
          const RealMatrix ke = e * eta;
          gen.value += ke * th.value.real();
          for (std::size_t i = 0; i < gen.grad.size(); ++i) gen.grad[i] += ke * th.grad[i].real();
          for (std::size_t i = 0; i < gen.hess.size(); ++i) gen.hess[i] += ke * th.hess[i].real();
        }
        return exponential(gen, RealMatrix::identity(n), 1e-16, 80);
      });
    }
  }
  throw DomainError("unknown frame kind");
}

}  // namespace cliffym
