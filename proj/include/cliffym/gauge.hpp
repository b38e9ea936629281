#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace cliffym {

inline constexpr double kClassSTolerance = 1e-9;

// max over mu of |center_project(S^-1 d_mu S)| at x.
inline double class_s_violation(const MvJet& s_jet) {
  const Multivector sinv = inverse(s_jet.value);
  double worst = 0.0;
  for (const auto& ds : s_jet.grad) worst = std::max(worst, center_project(sinv * ds).max_norm());
  return worst;
}

// Gauge element S(x), invertible with S^-1 d_mu S in the complement of the
// center. Built from a generator A(x) as S = exp(A) or taken as a given field.
class GaugeElement {
 public:
  const MultivectorField& field() const { return s_; }
  const std::optional<MultivectorField>& generator() const { return generator_; }
  const Signature& sig() const { return s_.sig(); }

  MvJet jet(const Point& x, int order) const { return s_.jet(x, order); }
  Multivector at(const Point& x) const { return evaluate(s_, x); }

  // Checks invertibility and class membership at every point.
  void validate(const std::vector<Point>& points, double tol = kClassSTolerance) const {
    for (const auto& x : points) {
      const MvJet j = s_.jet(x, 1);
      double v = 0.0;
      try {
        v = class_s_violation(j);
      } catch (const SingularError&) {
        throw ValidationError("gauge element is singular", x, 0.0);
      }
      if (!(v <= tol)) throw ValidationError("S^-1 dS has a center component", x, v);
    }
  }

  // S^-1 as a gauge element; it lies in the same class.
  GaugeElement inverse() const {
    auto s = s_;
    auto inv = MultivectorField::composite(s.sig(), 1, [s](const Point& x, int order) {
      return std::vector<MvJet>{cliffym::inverse(s.jet(x, order))};
    });
    return GaugeElement(std::move(inv), std::nullopt);
  }

  static GaugeElement identity(Signature sig) {
    return GaugeElement(MultivectorField::constant(Multivector::scalar(sig, 1.0)), std::nullopt);
  }

  static GaugeElement from_field(MultivectorField s, const std::vector<Point>& points, double tol = kClassSTolerance) {
    if (s.size() != 1) throw DomainError("gauge element must be a single multivector field");
    GaugeElement g(std::move(s), std::nullopt);
    g.validate(points, tol);
    return g;
  }

  friend GaugeElement make_gauge_element(const MultivectorField&, const std::vector<Point>&, double, bool);

 private:
  GaugeElement(MultivectorField s, std::optional<MultivectorField> gen) : s_(std::move(s)), generator_(std::move(gen)) {}

  MultivectorField s_;
  std::optional<MultivectorField> generator_;
};

// S(x) = exp(A(x)). With require_bivector, A must be grade 2 at every sample
// point, which keeps S^-1 dS inside the bivector Lie algebra.
inline GaugeElement make_gauge_element(const MultivectorField& a, const std::vector<Point>& points, double tol = 1e-15,
                                       bool require_bivector = true) {
  if (a.size() != 1) throw DomainError("gauge generator must be a single multivector field");
  if (!(tol > 0.0)) throw DomainError("exponential tolerance must be positive");
  if (require_bivector)
    for (const auto& x : points) {
      const Multivector v = evaluate(a, x);
      const double off = (v - grade_project(v, 2)).max_norm();
      if (off > 0.0) throw ValidationError("gauge generator is not a bivector", x, off);
    }
  auto s = MultivectorField::composite(a.sig(), 1, [a, tol](const Point& x, int order) {
    return std::vector<MvJet>{exponential(a.jet(x, order), tol)};
  });
  GaugeElement g(std::move(s), a);
  g.validate(points);
  return g;
}

}  // namespace cliffym
