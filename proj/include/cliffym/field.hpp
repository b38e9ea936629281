#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elementary.hpp"
#include "jet.hpp"
#include "polynomial.hpp"

namespace cliffym {

using Point = std::vector<double>;
using MvJet = Jet<Multivector>;

inline constexpr double kDefaultFdStep = 1e-5;
// Second differences lose eps/h^2 to rounding, so they never use a step below this.
inline constexpr double kMinSecondDifferenceStep = 1e-4;

// How derivatives of a field are obtained.
//   polynomial: exact, from the coefficient polynomials
//   composite:  exact to rounding, propagated through jet arithmetic
//   closure:    central finite differences on point values
enum class FieldKind { polynomial, composite, closure };

inline std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::polynomial: return "polynomial";
    case FieldKind::composite: return "composite";
    case FieldKind::closure: return "closure";
  }
  return "?";
}

// Central-difference jets built from point values only.
template <class ValueFn>
std::vector<MvJet> finite_difference_jets(const ValueFn& values, const Point& x, int order, double delta) {
  const int dim = static_cast<int>(x.size());
  const std::vector<Multivector> f0 = values(x);
  std::vector<MvJet> out;
  for (const auto& v : f0) out.emplace_back(v, dim, order);
  if (order == 0) return out;

  auto shifted = [&](int i, double hi, int j, double hj) {
    Point y = x;
    if (i >= 0) y[i] += hi;
    if (j >= 0) y[j] += hj;
    return values(y);
  };
  for (int i = 0; i < dim; ++i) {
    const auto fp = shifted(i, delta, -1, 0.0);
    const auto fm = shifted(i, -delta, -1, 0.0);
    for (std::size_t c = 0; c < out.size(); ++c) out[c].grad[i] = (fp[c] - fm[c]) * (0.5 / delta);
  }
  if (order < 2) return out;

  const double h = std::max(delta, kMinSecondDifferenceStep);
  for (int i = 0; i < dim; ++i) {
    const auto fp = shifted(i, h, -1, 0.0);
    const auto fm = shifted(i, -h, -1, 0.0);
    for (std::size_t c = 0; c < out.size(); ++c) out[c].dd(i, i) = (fp[c] - 2.0 * f0[c] + fm[c]) * (1.0 / (h * h));
    for (int j = i + 1; j < dim; ++j) {
      const auto fpp = shifted(i, h, j, h);
      const auto fpm = shifted(i, h, j, -h);
      const auto fmp = shifted(i, -h, j, h);
      const auto fmm = shifted(i, -h, j, -h);
      for (std::size_t c = 0; c < out.size(); ++c) {
        const Multivector d = (fpp[c] - fpm[c] - fmp[c] + fmm[c]) * (0.25 / (h * h));
        out[c].dd(i, j) = d;
        out[c].dd(j, i) = d;
      }
    }
  }
  return out;
}

// One or more multivector-valued fields on R^{p,q}, evaluated together.
// Vector and covector fields are fields with n components; antisymmetric
// tensors use n*n components in row-major order.
class MultivectorField {
 public:
  using JetFn = std::function<std::vector<MvJet>(const Point&, int)>;
  using ValueFn = std::function<std::vector<Multivector>(const Point&)>;

  static MultivectorField constant(std::vector<Multivector> values) {
    if (values.empty()) throw DomainError("field needs at least one component");
    const Signature sig = values.front().sig();
    std::vector<PolynomialMultivector> polys;
    for (const auto& v : values) {
      PolynomialMultivector pm;
      for (unsigned m = 0; m < v.size(); ++m)
        if (v[m] != Complex{}) pm.terms.push_back({m, Polynomial{{Monomial{std::vector<int>(sig.n(), 0), v[m]}}}});
      polys.push_back(std::move(pm));
    }
    return polynomial(sig, std::move(polys));
  }
  static MultivectorField constant(const Multivector& v) { return constant(std::vector<Multivector>{v}); }

  static MultivectorField polynomial(Signature sig, std::vector<PolynomialMultivector> comps) {
    auto data = std::make_shared<const std::vector<PolynomialMultivector>>(std::move(comps));
    MultivectorField f(sig, data->size(), FieldKind::polynomial, [sig, data](const Point& x, int order) {
      std::vector<MvJet> out;
      for (const auto& c : *data) out.push_back(c.jet(sig, x, order));
      return out;
    });
    f.poly_ = data;
    return f;
  }

  static MultivectorField composite(Signature sig, std::size_t count, JetFn fn) {
    return MultivectorField(sig, count, FieldKind::composite, std::move(fn));
  }

  static MultivectorField closure(Signature sig, std::size_t count, ValueFn values, double delta = kDefaultFdStep) {
    if (!(delta > 0.0)) throw DomainError("finite-difference step must be positive");
    auto fn = [values = std::move(values), delta](const Point& x, int order) {
      return finite_difference_jets(values, x, order, delta);
    };
    MultivectorField f(sig, count, FieldKind::closure, std::move(fn));
    f.delta_ = delta;
    return f;
  }

  const Signature& sig() const { return sig_; }
  std::size_t size() const { return count_; }
  FieldKind kind() const { return kind_; }
  std::optional<double> fd_step() const { return delta_; }
  const std::vector<PolynomialMultivector>* polynomial_data() const { return poly_.get(); }

  std::vector<MvJet> jets(const Point& x, int order) const {
    if (static_cast<int>(x.size()) != sig_.n())
      throw DomainError("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(sig_.n()));
    auto out = fn_(x, order);
    if (out.size() != count_) throw Error("field produced the wrong number of components");
    return out;
  }
  MvJet jet(const Point& x, int order, std::size_t component = 0) const { return jets(x, order).at(component); }

  std::vector<Multivector> values(const Point& x) const {
    std::vector<Multivector> v;
    for (auto& j : jets(x, 0)) v.push_back(std::move(j.value));
    return v;
  }

  MultivectorField component(std::size_t i) const {
    if (i >= count_) throw DomainError("field component out of range");
    auto self = *this;
    MultivectorField f(sig_, 1, kind_, [self, i](const Point& x, int order) {
      return std::vector<MvJet>{self.jets(x, order)[i]};
    });
    f.delta_ = delta_;
    return f;
  }

  // Same values, derivatives by central differences.
  MultivectorField as_finite_difference(double delta = kDefaultFdStep) const {
    auto self = *this;
    return closure(sig_, count_, [self](const Point& x) { return self.values(x); }, delta);
  }

 private:
  MultivectorField(Signature sig, std::size_t count, FieldKind kind, JetFn fn)
      : sig_(sig), count_(count), kind_(kind), fn_(std::move(fn)) {}

  Signature sig_;
  std::size_t count_ = 0;
  FieldKind kind_ = FieldKind::composite;
  JetFn fn_;
  std::optional<double> delta_;
  std::shared_ptr<const std::vector<PolynomialMultivector>> poly_;
};

inline Multivector evaluate(const MultivectorField& f, const Point& x, std::size_t component = 0) {
  return f.jet(x, 0, component).value;
}

// mu is 1-based.
inline Multivector partial_derivative(const MultivectorField& f, int mu, const Point& x, std::size_t component = 0) {
  if (mu < 1 || mu > f.sig().n()) throw DomainError("derivative index out of range");
  return f.jet(x, 1, component).grad[mu - 1];
}

// Jet inverse for multivector jets (pointwise LU on the value).
inline MvJet inverse(const MvJet& x) {
  return inverse_jet(x, [](const Multivector& v) { return inverse(v); });
}

inline MvJet exponential(const MvJet& x, double tol = 1e-15, int max_terms = kExpTermCap) {
  return exponential(x, Multivector::scalar(x.value.sig(), 1.0), tol, max_terms);
}

inline MvJet constant_jet(const Multivector& v, int dim, int order) { return MvJet(v, dim, order); }

inline MvJet commutator(const MvJet& a, const MvJet& b) { return a * b - b * a; }

}  // namespace cliffym
