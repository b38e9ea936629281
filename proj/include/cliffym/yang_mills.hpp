#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "primitive.hpp"

namespace cliffym {

inline constexpr double kYangMillsTolerance = 1e-7;
inline constexpr double kGaugeTolerance = 1e-6;

// Everything needed to evaluate the Yang-Mills residuals at one point.
// All jets are order 1; two-index tensors are stored row-major (n*n).
struct SolutionJets {
  std::vector<MvJet> h_up;  // h^nu
  std::vector<MvJet> C;     // C_mu
  std::vector<MvJet> B;     // B_mu
  std::vector<MvJet> G;     // G_{mu nu}
};

// The family B_mu = sigma h_mu + C_mu, G_{mu nu} = -sigma^2 [h_mu, h_nu],
// J^nu = epsilon h^nu, evaluated lazily point by point.
class YMSolution {
 public:
  using Source = std::function<SolutionJets(const Point&)>;

  YMSolution(Signature sig, Complex sigma, Complex epsilon, Source source)
      : sig_(sig), sigma_(sigma), epsilon_(epsilon), source_(std::make_shared<Source>(std::move(source))) {}

  const Signature& sig() const { return sig_; }
  Complex sigma() const { return sigma_; }
  Complex epsilon() const { return epsilon_; }

  SolutionJets jets_at(const Point& x) const {
    if (static_cast<int>(x.size()) != sig_.n()) throw DomainError("point dimension does not match solution");
    return (*source_)(x);
  }

  // Same fields with a different trial current strength.
  YMSolution with_epsilon(Complex eps) const {
    YMSolution s = *this;
    s.epsilon_ = eps;
    return s;
  }

  MultivectorField h() const { return part(1, [](const SolutionJets& j, Complex) { return j.h_up; }); }
  MultivectorField C() const { return part(1, [](const SolutionJets& j, Complex) { return j.C; }); }
  MultivectorField B() const { return part(1, [](const SolutionJets& j, Complex) { return j.B; }); }
  MultivectorField G() const { return part(2, [](const SolutionJets& j, Complex) { return j.G; }); }
  MultivectorField J() const {
    return part(1, [](const SolutionJets& j, Complex eps) {
      std::vector<MvJet> out;
      for (const auto& v : j.h_up) out.push_back(v * eps);
      return out;
    });
  }

 private:
  template <class Pick>
  MultivectorField part(int rank, Pick pick) const {
    const std::size_t n = static_cast<std::size_t>(sig_.n());
    auto self = *this;
    return MultivectorField::composite(sig_, rank == 1 ? n : n * n, [self, pick](const Point& x, int order) {
      if (order > 1) throw DomainError("solution fields carry first derivatives only");
      auto v = pick(self.jets_at(x), self.epsilon_);
      for (auto& j : v) j = j.truncated(order);
      return v;
    });
  }

  Signature sig_;
  Complex sigma_;
  Complex epsilon_;
  std::shared_ptr<Source> source_;
};

inline Complex epsilon_for(int n, Complex sigma) { return 4.0 * (n - 1) * sigma * sigma * sigma; }

// G_{mu nu} = -sigma^2 [h_mu, h_nu] from jets of h^nu.
inline std::vector<MvJet> closed_form_strength(const std::vector<MvJet>& h_up, Complex sigma) {
  const auto down = lower(h_up);
  const std::size_t n = down.size();
  std::vector<MvJet> g;
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) g.push_back(commutator(down[mu], down[nu]) * (-sigma * sigma));
  return g;
}

// Builds the solution family from (h, C). Refuses inputs whose primitive
// residual exceeds tol at any of the points.
inline YMSolution build_solution(const CliffordFieldVector& h, const MultivectorField& c, Complex sigma,
                                 const std::vector<Point>& points, double tol = kPrimitiveTolerance) {
  if (static_cast<int>(c.size()) != h.sig().n()) throw DomainError("C must have n components");
  for (const auto& x : points) {
    const double r = max_norm(primitive_residual(h, c, x));
    if (!(r <= tol)) throw ValidationError("(h, C) does not solve the primitive equation", x, r);
  }
  const Signature sig = h.sig();
  auto source = [h, c, sigma](const Point& x) {
    SolutionJets s;
    s.h_up = h.up().jets(x, 1);
    s.C = c.jets(x, 1);
    const auto down = lower(s.h_up);
    for (std::size_t mu = 0; mu < down.size(); ++mu) s.B.push_back(down[mu] * sigma + s.C[mu]);
    s.G = closed_form_strength(s.h_up, sigma);
    return s;
  };
  return YMSolution(sig, sigma, epsilon_for(sig.n(), sigma), std::move(source));
}

// d_mu B_nu - d_nu B_mu - [B_mu, B_nu], row-major.
inline std::vector<MvJet> field_strength_jets(const std::vector<MvJet>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<MvJet> out;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) out.push_back(b[nu].derivative(mu) - b[mu].derivative(nu) - commutator(b[mu], b[nu]));
  return out;
}

inline std::vector<Multivector> field_strength(const std::vector<MvJet>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<Multivector> out;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      out.push_back(b[nu].grad[mu] - b[mu].grad[nu] - commutator(b[mu].value, b[nu].value));
  return out;
}

inline std::vector<Multivector> field_strength(const MultivectorField& b, const Point& x) {
  if (static_cast<int>(b.size()) != b.sig().n()) throw DomainError("B must have n components");
  return field_strength(b.jets(x, 1));
}

struct YMResidualEntry {
  Point point;
  std::vector<Multivector> eq1;  // n*n
  std::vector<Multivector> eq2;  // n
  Multivector conservation;
  double eq1_max = 0.0;
  double eq2_max = 0.0;
  double conservation_max = 0.0;
};

// d_mu G^{mu nu} - [B_mu, G^{mu nu}] - epsilon h^nu for each nu.
inline std::vector<Multivector> second_equation_residual(const SolutionJets& s, Complex epsilon) {
  const int n = static_cast<int>(s.B.size());
  const Signature sig = s.B.front().value.sig();
  std::vector<Multivector> out;
  for (int nu = 0; nu < n; ++nu) {
    Multivector acc = s.h_up[nu].value * (-epsilon);
    for (int mu = 0; mu < n; ++mu) {
      const double raise = sig.metric(mu + 1) * sig.metric(nu + 1);
      const MvJet& g = s.G[mu * n + nu];
      acc += (g.grad[mu] - commutator(s.B[mu].value, g.value)) * raise;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

inline YMResidualEntry ym_residuals(const SolutionJets& s, Complex epsilon, const Point& x) {
  YMResidualEntry e;
  e.point = x;
  const int n = static_cast<int>(s.B.size());
  const auto f = field_strength(s.B);
  for (int i = 0; i < n * n; ++i) e.eq1.push_back(f[i] - s.G[i].value);
  e.eq2 = second_equation_residual(s, epsilon);
  e.conservation = Multivector(s.B.front().value.sig());
  for (int nu = 0; nu < n; ++nu)
    e.conservation += (s.h_up[nu].grad[nu] - commutator(s.B[nu].value, s.h_up[nu].value)) * epsilon;
  e.eq1_max = max_norm(e.eq1);
  e.eq2_max = max_norm(e.eq2);
  e.conservation_max = e.conservation.max_norm();
  return e;
}

inline YMResidualEntry ym_residuals(const YMSolution& sol, const Point& x) {
  return ym_residuals(sol.jets_at(x), sol.epsilon(), x);
}

// d_nu J^nu - [B_nu, J^nu].
inline Multivector conservation_residual(const YMSolution& sol, const Point& x) {
  return ym_residuals(sol, x).conservation;
}

struct YMResidualReport {
  std::vector<YMResidualEntry> entries;
  double eq1_max = 0.0;
  double eq2_max = 0.0;
  double conservation_max = 0.0;
};

inline YMResidualReport ym_campaign(const YMSolution& sol, const std::vector<Point>& points) {
  YMResidualReport r;
  for (const auto& x : points) {
    auto e = ym_residuals(sol, x);
    r.eq1_max = std::max(r.eq1_max, e.eq1_max);
    r.eq2_max = std::max(r.eq2_max, e.eq2_max);
    r.conservation_max = std::max(r.conservation_max, e.conservation_max);
    r.entries.push_back(std::move(e));
  }
  return r;
}

// Applies B -> S^-1 B S - S^-1 dS, G -> S^-1 G S, h -> S^-1 h S (hence
// J -> S^-1 J S) and C -> S^-1 C S - S^-1 dS.
inline YMSolution gauge_transform_solution(const YMSolution& sol, const GaugeElement& s, const std::vector<Point>& points) {
  if (!(sol.sig() == s.sig())) throw SignatureMismatch();
  s.validate(points);
  auto source = [sol, s](const Point& x) {
    const SolutionJets base = sol.jets_at(x);
    const MvJet sj = s.jet(x, 2);
    const MvJet sinv = inverse(sj);
    SolutionJets out;
    for (const auto& v : base.h_up) out.h_up.push_back(sinv * v * sj);
    for (const auto& v : base.G) out.G.push_back(sinv * v * sj);
    for (std::size_t mu = 0; mu < base.B.size(); ++mu) {
      const MvJet pure = sinv * sj.derivative(static_cast<int>(mu));
      out.B.push_back(sinv * base.B[mu] * sj - pure);
      out.C.push_back(sinv * base.C[mu] * sj - pure);
    }
    return out;
  };
  return YMSolution(sol.sig(), sol.sigma(), sol.epsilon(), std::move(source));
}

// max over eq1, eq2 and conservation of |R' - S^-1 R S| at x.
inline double gauge_covariance_defect(const YMResidualEntry& original, const YMResidualEntry& transformed, const Multivector& s) {
  const Multivector sinv = inverse(s);
  double worst = 0.0;
  for (std::size_t i = 0; i < original.eq1.size(); ++i)
    worst = std::max(worst, (transformed.eq1[i] - sinv * original.eq1[i] * s).max_norm());
  for (std::size_t i = 0; i < original.eq2.size(); ++i)
    worst = std::max(worst, (transformed.eq2[i] - sinv * original.eq2[i] * s).max_norm());
  worst = std::max(worst, (transformed.conservation - sinv * original.conservation * s).max_norm());
  return worst;
}

// [h_mu, [h^mu, h^nu]] - 4(n-1) h^nu for each nu.
inline std::vector<Multivector> double_commutator_check(const std::vector<Multivector>& h_up) {
  const auto down = lower(h_up);
  const int n = static_cast<int>(h_up.size());
  std::vector<Multivector> out;
  for (int nu = 0; nu < n; ++nu) {
    Multivector acc = h_up[nu] * static_cast<double>(-4 * (n - 1));
    for (int mu = 0; mu < n; ++mu) acc += commutator(down[mu], commutator(h_up[mu], h_up[nu]));
    out.push_back(std::move(acc));
  }
  return out;
}

inline std::vector<Multivector> double_commutator_check(const CliffordFieldVector& h, const Point& x) {
  return double_commutator_check(h.at(x));
}

// The second-equation residual is affine in the trial epsilon. Evaluates it
// at two trial values and returns the least-squares root over all points.
inline Complex recover_epsilon(const YMSolution& sol, const std::vector<Point>& points) {
  const Complex e0 = 0.0, e1 = 1.0;
  Complex num = 0.0;
  double den = 0.0;
  for (const auto& x : points) {
    const SolutionJets s = sol.jets_at(x);
    const auto r0 = second_equation_residual(s, e0);
    const auto r1 = second_equation_residual(s, e1);
    for (std::size_t nu = 0; nu < r0.size(); ++nu)
      for (unsigned m = 0; m < r0[nu].size(); ++m) {
        const Complex d = r1[nu][m] - r0[nu][m];
        num += std::conj(d) * r0[nu][m];
        den += std::norm(d);
      }
  }
  if (den == 0.0) throw SingularError("second-equation residual does not depend on epsilon");
  return e0 - num / den;
}

}  // namespace cliffym
