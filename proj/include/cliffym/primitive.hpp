#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "contraction.hpp"
#include "field_vector.hpp"
#include "gauge.hpp"

namespace cliffym {

inline constexpr double kPrimitiveTolerance = 1e-8;
inline constexpr double kCurvatureTolerance = 1e-7;
inline constexpr double kFiniteDifferenceTolerance = 1e-5;

// Two ways of evaluating C_mu = sum_k mu_k pi[h]_k(W_mu):
//   projection:  each h-projection formed separately, then weighted by mu_k
//   contraction: a single combination sum_l r_l F^l(W_mu) (s_l for odd n)
enum class SolutionForm { projection, contraction };

inline double max_norm(const std::vector<Multivector>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, x.max_norm());
  return m;
}

// W_mu = (d_mu h^rho) h_rho. Result order is one less than the input order.
inline std::vector<MvJet> contracted_derivative(const FieldVectorJets& h) {
  const int n = static_cast<int>(h.up.size());
  std::vector<MvJet> w;
  for (int mu = 0; mu < n; ++mu) {
    MvJet acc = h.up[0].derivative(mu) * h.down[0];
    for (int rho = 1; rho < n; ++rho) acc += h.up[rho].derivative(mu) * h.down[rho];
    w.push_back(std::move(acc));
  }
  return w;
}

// Closed-form C_mu from the jets of h; output order is input order - 1.
inline std::vector<MvJet> solve_primitive(const FieldVectorJets& h, const ContractionTable& t,
                                          SolutionForm form = SolutionForm::contraction) {
  const int n = static_cast<int>(h.up.size());
  if (t.n != n) throw DomainError("table dimension does not match field vector");
  const auto w = contracted_derivative(h);
  const int order = w.front().order;
  std::vector<MvJet> up, down;
  for (int a = 0; a < n; ++a) {
    up.push_back(h.up[a].truncated(order));
    down.push_back(h.down[a].truncated(order));
  }
  auto F = [&](const MvJet& x) { return contract_with<MvJet>(x, up, down); };

  std::vector<MvJet> c;
  for (const auto& wm : w) {
    if (form == SolutionForm::contraction) {
      c.push_back(combine(contraction_powers(wm, t.projection_count(), F), t.coefficients));
      continue;
    }
    MvJet acc(Multivector(wm.value.sig()), wm.dim, order);
    const int kmax = t.even() ? n : (n - 1) / 2;
    for (int k = 1; k <= kmax; ++k) acc += hform_project<MvJet>(wm, k, up, down, t) * to_double(*t.mus[k]);
    c.push_back(std::move(acc));
  }
  return c;
}

// C as an n-component covector field. Its derivatives need second derivatives of h.
inline MultivectorField solve_primitive(const CliffordFieldVector& h, const ContractionTable& t,
                                        SolutionForm form = SolutionForm::contraction) {
  if (t.n != h.sig().n()) throw DomainError("table dimension does not match field vector");
  return MultivectorField::composite(h.sig(), h.sig().n(), [h, t, form](const Point& x, int order) {
    return solve_primitive(h.jets(x, order + 1), t, form);
  });
}

inline std::vector<Multivector> compute_C(const CliffordFieldVector& h, const ContractionTable& t, const Point& x,
                                          SolutionForm form = SolutionForm::contraction) {
  std::vector<Multivector> out;
  for (auto& j : solve_primitive(h.jets(x, 1), t, form)) out.push_back(std::move(j.value));
  return out;
}

// R_{mu rho} = d_mu h_rho - [C_mu, h_rho], stored at mu*n + rho.
inline std::vector<Multivector> primitive_residual(const FieldVectorJets& h, const std::vector<Multivector>& c) {
  const int n = static_cast<int>(h.up.size());
  std::vector<Multivector> r;
  for (int mu = 0; mu < n; ++mu)
    for (int rho = 0; rho < n; ++rho) r.push_back(h.down[rho].grad[mu] - commutator(c[mu], h.down[rho].value));
  return r;
}

inline std::vector<Multivector> primitive_residual(const CliffordFieldVector& h, const MultivectorField& c, const Point& x) {
  if (static_cast<int>(c.size()) != h.sig().n()) throw DomainError("C must have n components");
  return primitive_residual(h.jets(x, 1), c.values(x));
}

// K_{mu nu} = d_mu C_nu - d_nu C_mu - [C_mu, C_nu], stored at mu*n + nu.
inline std::vector<Multivector> curvature_residual(const std::vector<MvJet>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Multivector> r;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      r.push_back(c[nu].grad[mu] - c[mu].grad[nu] - commutator(c[mu].value, c[nu].value));
  return r;
}

inline std::vector<Multivector> curvature_residual(const MultivectorField& c, const Point& x) {
  return curvature_residual(c.jets(x, 1));
}

// Transformed field vector and connection jets:
// h'^rho = S^-1 h^rho S, C'_mu = S^-1 C_mu S - S^-1 d_mu S.
// `s` must carry one order more than `c`.
inline std::pair<std::vector<MvJet>, std::vector<MvJet>> gauge_transform(const std::vector<MvJet>& h_up,
                                                                         const std::vector<MvJet>& c, const MvJet& s) {
  const MvJet sinv = inverse(s);
  std::vector<MvJet> h2, c2;
  for (const auto& v : h_up) h2.push_back(sinv * v * s);
  for (std::size_t mu = 0; mu < c.size(); ++mu) c2.push_back(sinv * c[mu] * s - sinv * s.derivative(static_cast<int>(mu)));
  return {std::move(h2), std::move(c2)};
}

struct GaugedPair {
  std::vector<Multivector> h_up;
  std::vector<Multivector> C;
};

// Pointwise transform; S must be in the gauge class at x.
inline GaugedPair gauge_transform(const CliffordFieldVector& h, const MultivectorField& c, const GaugeElement& s,
                                  const Point& x) {
  const MvJet sj = s.jet(x, 1);
  const double v = class_s_violation(sj);
  if (!(v <= kClassSTolerance)) throw ValidationError("S^-1 dS has a center component", x, v);
  auto [h2, c2] = gauge_transform(h.up().jets(x, 0), c.jets(x, 0), sj);
  GaugedPair out;
  for (auto& j : h2) out.h_up.push_back(std::move(j.value));
  for (auto& j : c2) out.C.push_back(std::move(j.value));
  return out;
}

// Field-level transform of (h, C).
inline std::pair<CliffordFieldVector, MultivectorField> gauge_transform_fields(const CliffordFieldVector& h,
                                                                              const MultivectorField& c,
                                                                              const GaugeElement& s,
                                                                              const std::vector<Point>& points) {
  s.validate(points);
  const Signature sig = h.sig();
  auto hup = h.up();
  auto h2 = MultivectorField::composite(sig, sig.n(), [hup, s](const Point& x, int order) {
    const MvJet sj = s.jet(x, order);
    const MvJet sinv = inverse(sj);
    std::vector<MvJet> out;
    for (const auto& v : hup.jets(x, order)) out.push_back(sinv * v * sj);
    return out;
  });
  auto c2 = MultivectorField::composite(sig, sig.n(), [c, s](const Point& x, int order) {
    return gauge_transform(std::vector<MvJet>{}, c.jets(x, order), s.jet(x, order + 1)).second;
  });
  return {CliffordFieldVector::from_field(std::move(h2), points), std::move(c2)};
}

struct PrimitiveReportEntry {
  Point point;
  double primitive_max = 0.0;
  double curvature_max = 0.0;
  double center_leak = 0.0;
};

struct PrimitiveReport {
  std::vector<PrimitiveReportEntry> entries;
  double primitive_max = 0.0, primitive_mean = 0.0;
  double curvature_max = 0.0, curvature_mean = 0.0;
  double center_leak_max = 0.0, center_leak_mean = 0.0;
};

inline PrimitiveReport primitive_campaign(const CliffordFieldVector& h, const MultivectorField& c,
                                          const std::vector<Point>& points) {
  PrimitiveReport rep;
  for (const auto& x : points) {
    const auto cj = c.jets(x, 1);
    std::vector<Multivector> cv;
    for (const auto& j : cj) cv.push_back(j.value);
    PrimitiveReportEntry e;
    e.point = x;
    e.primitive_max = max_norm(primitive_residual(h.jets(x, 1), cv));
    e.curvature_max = max_norm(curvature_residual(cj));
    for (const auto& v : cv) e.center_leak = std::max(e.center_leak, center_project(v).max_norm());
    rep.entries.push_back(e);
  }
  auto summarize = [&](auto field, double& mx, double& mean) {
    mx = 0.0;
    mean = 0.0;
    for (const auto& e : rep.entries) {
      mx = std::max(mx, e.*field);
      mean += e.*field;
    }
    if (!rep.entries.empty()) mean /= static_cast<double>(rep.entries.size());
  };
  summarize(&PrimitiveReportEntry::primitive_max, rep.primitive_max, rep.primitive_mean);
  summarize(&PrimitiveReportEntry::curvature_max, rep.curvature_max, rep.curvature_mean);
  summarize(&PrimitiveReportEntry::center_leak, rep.center_leak_max, rep.center_leak_mean);
  return rep;
}

}  // namespace cliffym
