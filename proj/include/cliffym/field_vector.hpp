#pragma once

#include <span>
#include <vector>

#include "contraction.hpp"
#include "field.hpp"
#include "frame.hpp"
#include "gauge.hpp"

namespace cliffym {

inline constexpr double kFieldVectorTolerance = 1e-10;

// h^mu and h_mu = eta_{mu nu} h^nu at one point, as jets.
struct FieldVectorJets {
  std::vector<MvJet> up;
  std::vector<MvJet> down;
};

inline std::vector<Multivector> lower(const std::vector<Multivector>& up) {
  std::vector<Multivector> down;
  for (std::size_t mu = 0; mu < up.size(); ++mu) down.push_back(up[mu] * static_cast<double>(up[mu].sig().metric(static_cast<int>(mu) + 1)));
  return down;
}

inline std::vector<MvJet> lower(const std::vector<MvJet>& up) {
  std::vector<MvJet> down;
  for (std::size_t mu = 0; mu < up.size(); ++mu) down.push_back(up[mu] * static_cast<double>(up[mu].value.sig().metric(static_cast<int>(mu) + 1)));
  return down;
}

// Largest violation among: h^mu h^nu + h^nu h^mu = 2 eta^{mu nu} e;
// Tr(h^1 ... h^n) = 0 (odd n); zero center component of each h^mu.
inline double field_vector_violation(const std::vector<Multivector>& h) {
  const Signature sig = h.front().sig();
  const int n = sig.n();
  double worst = 0.0;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu; nu < n; ++nu) {
      Multivector r = h[mu] * h[nu] + h[nu] * h[mu];
      if (mu == nu) r[0] -= 2.0 * sig.metric(mu + 1);
      worst = std::max(worst, r.max_norm());
    }
  if (n % 2 == 1) {
    Multivector prod = h[0];
    for (int mu = 1; mu < n; ++mu) prod = prod * h[mu];
    worst = std::max(worst, std::abs(trace(prod)));
  }
  for (const auto& v : h) worst = std::max(worst, center_project(v).max_norm());
  return worst;
}

// n multivector fields h^mu that behave pointwise like the generators.
class CliffordFieldVector {
 public:
  // Accepts any field with n components that passes the pointwise checks.
  static CliffordFieldVector from_field(MultivectorField up, const std::vector<Point>& points,
                                        double tol = kFieldVectorTolerance) {
    if (static_cast<int>(up.size()) != up.sig().n()) throw DomainError("field vector needs n components");
    CliffordFieldVector h(std::move(up));
    h.validate(points, tol);
    return h;
  }

  static CliffordFieldVector unchecked(MultivectorField up) { return CliffordFieldVector(std::move(up)); }

  const Signature& sig() const { return up_.sig(); }
  const MultivectorField& up() const { return up_; }

  FieldVectorJets jets(const Point& x, int order) const {
    FieldVectorJets j;
    j.up = up_.jets(x, order);
    j.down = lower(j.up);
    return j;
  }
  std::vector<Multivector> at(const Point& x) const { return up_.values(x); }

  void validate(const std::vector<Point>& points, double tol = kFieldVectorTolerance) const {
    for (const auto& x : points) {
      const double v = field_vector_violation(at(x));
      if (!(v <= tol)) throw ValidationError("Clifford field vector relations fail", x, v);
    }
  }

 private:
  explicit CliffordFieldVector(MultivectorField up) : up_(std::move(up)) {}
  MultivectorField up_;
};

// h_nu = eta_{mu nu} h^mu as an n-component field.
inline MultivectorField lower_index(const CliffordFieldVector& h) {
  const auto up = h.up();
  return MultivectorField::composite(h.sig(), up.size(), [up](const Point& x, int order) { return lower(up.jets(x, order)); });
}

// Inverse of lower_index (the metric is its own inverse).
inline MultivectorField raise_index(const MultivectorField& down) {
  return MultivectorField::composite(down.sig(), down.size(), [down](const Point& x, int order) { return lower(down.jets(x, order)); });
}

// Scalar jet of one matrix entry.
inline Jet<double> entry_jet(const MatrixJet& m, int i, int j) {
  Jet<double> out(m.value(i, j), m.dim, m.order);
  for (std::size_t k = 0; k < m.grad.size(); ++k) out.grad[k] = m.grad[k](i, j);
  for (std::size_t k = 0; k < m.hess.size(); ++k) out.hess[k] = m.hess[k](i, j);
  return out;
}

// h^mu(x) = y^mu_a(x) S(x)^-1 e^a S(x).
inline CliffordFieldVector make_clifford_field_vector(const FrameField& y, const GaugeElement& s,
                                                      const std::vector<Point>& points) {
  if (!(y.sig() == s.sig())) throw SignatureMismatch();
  const Signature sig = y.sig();
  const int n = sig.n();
  y.validate(points);
  auto up = MultivectorField::composite(sig, n, [y, s, sig, n](const Point& x, int order) {
    const MvJet sj = s.jet(x, order);
    MvJet sinv;
    try {
      sinv = inverse(sj);
    } catch (const SingularError&) {
      throw ValidationError("gauge element is singular", x, 0.0);
    }
    const MatrixJet yj = y.jet(x, order);
    std::vector<MvJet> conj;
    for (int a = 1; a <= n; ++a) conj.push_back(sinv * constant_jet(Multivector::generator(sig, a), n, order) * sj);
    std::vector<MvJet> h;
    for (int mu = 0; mu < n; ++mu) {
      MvJet acc(Multivector(sig), n, order);
      for (int a = 0; a < n; ++a) acc += entry_jet(yj, mu, a) * conj[a];
      h.push_back(std::move(acc));
    }
    return h;
  });
  return CliffordFieldVector::from_field(std::move(up), points);
}

// pi[h]_k(U) (even n) or pi[h]_k + pi[h]_{n-k} (odd n): the contraction
// formulas with e^a replaced by h^mu and e_a by h_mu. Works on multivectors
// and on jets.
template <class V>
V hform_project(const V& u, int k, std::span<const V> up, std::span<const V> down, const ContractionTable& t) {
  check_projection_index(k, t);
  const auto powers = contraction_powers(u, t.projection_count(), [&](const V& x) { return contract_with<V>(x, up, down); });
  return project_from_powers(powers, k, t);
}

inline Multivector hform_project(const Multivector& u, int k, const std::vector<Multivector>& h_up, const ContractionTable& t) {
  if (static_cast<int>(h_up.size()) != u.sig().n() || t.n != u.sig().n()) throw DomainError("field vector / table size mismatch");
  const auto down = lower(h_up);
  return hform_project<Multivector>(u, k, h_up, down, t);
}

inline Multivector hform_project(const Multivector& u, int k, const std::vector<Multivector>& h_up) {
  return hform_project(u, k, h_up, build_table(u.sig().n()));
}

}  // namespace cliffym
