#pragma once

#include <Eigen/Dense>

#include "multivector.hpp"

namespace cliffym {

inline constexpr int kExpTermCap = 64;
inline constexpr double kInverseRcondLimit = 1e-12;

// Power series sum U^k / k!, stopped once a term's max-norm drops below tol.
inline Multivector exponential(const Multivector& u, double tol = 1e-15, int max_terms = kExpTermCap) {
  if (!(tol > 0.0)) throw DomainError("exponential tolerance must be positive");
  Multivector sum = Multivector::scalar(u.sig(), 1.0);
  Multivector term = sum;
  double last = 1.0;
  for (int k = 1; k <= max_terms; ++k) {
    term = term * u * (1.0 / k);
    sum += term;
    last = term.max_norm();
    if (last < tol) return sum;
  }
  throw ConvergenceError("exponential series did not converge in " + std::to_string(max_terms) + " terms", last);
}

// Matrix of X -> U X on the 2^n coefficient space.
inline Eigen::MatrixXcd left_multiplication_matrix(const Multivector& u) {
  const auto size = static_cast<Eigen::Index>(u.size());
  const unsigned neg = u.sig().negative_mask();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
  for (unsigned i = 0; i < u.size(); ++i) {
    if (u[i] == Complex{}) continue;
    for (unsigned j = 0; j < u.size(); ++j) m(i ^ j, j) += static_cast<double>(blade_sign(i, j, neg)) * u[i];
  }
  return m;
}

// Solves U V = e with partial pivoting. For a finite-dimensional algebra a
// right inverse is also a left inverse.
inline Multivector inverse(const Multivector& u, double rcond_limit = kInverseRcondLimit) {
  const Eigen::MatrixXcd m = left_multiplication_matrix(u);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  const double rc = lu.rcond();
  if (!(rc > rcond_limit)) throw SingularError("multivector is singular or ill-conditioned (rcond " + std::to_string(rc) + ")");
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(m.rows());
  rhs(0) = 1.0;
  const Eigen::VectorXcd x = lu.solve(rhs);
  std::vector<Complex> c(x.data(), x.data() + x.size());
  return Multivector(u.sig(), std::move(c));
}

}  // namespace cliffym
