#pragma once

#include <cmath>
#include <vector>

#include "jet.hpp"
#include "multivector.hpp"

namespace cliffym {

struct Monomial {
  std::vector<int> exps;  // one exponent per coordinate
  Complex coeff;
};

// Multivariate polynomial in x^1..x^n with complex coefficients.
struct Polynomial {
  std::vector<Monomial> monomials;

  // Exact value, gradient and Hessian at x.
  Jet<Complex> jet(const std::vector<double>& x, int order) const {
    const int dim = static_cast<int>(x.size());
    Jet<Complex> out(Complex{}, dim, order);
    for (const auto& m : monomials) {
      if (static_cast<int>(m.exps.size()) != dim) throw DomainError("monomial exponent count does not match dimension");
      // d^k/dx^k of x^e at x, for k = 0, 1, 2.
      auto power_derivative = [&](int i, int k) {
        const int e = m.exps[i];
        if (e < k) return 0.0;
        double factor = 1.0;
        for (int j = 0; j < k; ++j) factor *= (e - j);
        return factor * std::pow(x[i], e - k);
      };
      auto product_except = [&](int skip1, int k1, int skip2, int k2) {
        double p = 1.0;
        for (int i = 0; i < dim; ++i) {
          int k = 0;
          if (i == skip1) k += k1;
          if (i == skip2) k += k2;
          p *= power_derivative(i, k);
        }
        return p;
      };
      out.value += m.coeff * product_except(-1, 0, -1, 0);
      if (order >= 1)
        for (int i = 0; i < dim; ++i) out.grad[i] += m.coeff * product_except(i, 1, -1, 0);
      if (order >= 2)
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) out.dd(i, j) += m.coeff * product_except(i, 1, j, 1);
    }
    return out;
  }

  Complex evaluate(const std::vector<double>& x) const { return jet(x, 0).value; }

  int degree() const {
    int d = 0;
    for (const auto& m : monomials) {
      int s = 0;
      for (int e : m.exps) s += e;
      d = std::max(d, s);
    }
    return d;
  }
};

// A multivector whose blade coefficients are polynomials.
struct PolynomialMultivector {
  struct Term {
    unsigned mask;
    Polynomial poly;
  };
  std::vector<Term> terms;

  Jet<Multivector> jet(Signature sig, const std::vector<double>& x, int order) const {
    Jet<Multivector> out(Multivector(sig), static_cast<int>(x.size()), order);
    for (const auto& t : terms) {
      if (t.mask >= sig.blade_count()) throw DomainError("blade mask out of range");
      const Jet<Complex> c = t.poly.jet(x, order);
      const Multivector b = Multivector::blade(sig, t.mask);
      out.value += b * c.value;
      for (std::size_t i = 0; i < out.grad.size(); ++i) out.grad[i] += b * c.grad[i];
      for (std::size_t i = 0; i < out.hess.size(); ++i) out.hess[i] += b * c.hess[i];
    }
    return out;
  }
};

}  // namespace cliffym
