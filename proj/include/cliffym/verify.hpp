#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "contraction.hpp"
#include "field_vector.hpp"
#include "frame.hpp"
#include "gauge.hpp"
#include "json_io.hpp"
#include "primitive.hpp"
#include "random_config.hpp"
#include "sampling.hpp"
#include "yang_mills.hpp"

namespace cliffym {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitConfig = 2, kExitTolerance = 3, kExitGolden = 4 };

inline MultivectorField gauge_generator_field(const GaugeConfig& g, Signature sig, Rng rng) {
  const PolynomialMultivector a = g.random ? random_bivector_generator(sig, rng, g.scale) : g.generator;
  return MultivectorField::polynomial(sig, {a});
}

inline FrameField frame_field(const FrameConfig& f, Signature sig, Rng rng) {
  return make_frame_field(sig, f.random ? random_frame_spec(sig, rng, f.scale) : f.spec);
}

// Everything the pipeline builds from a config, before any residual is taken.
struct Pipeline {
  std::vector<Point> points;
  GaugeElement S;
  CliffordFieldVector h;
  ContractionTable table;
  MultivectorField C;
  GaugeElement check;  // gauge element for the invariance check
};

// Invalid frames, gauges or field vectors are configuration problems.
inline Pipeline build_pipeline(const RunConfig& cfg) {
  try {
    const Signature sig = cfg.sig;
    auto points = sample_points(sig.n(), cfg.sample_count, cfg.seed, cfg.box);
    auto S = make_gauge_element(gauge_generator_field(cfg.gauge, sig, random_stream(cfg.seed, RandomStream::gauge)), points);
    const FrameField y = frame_field(cfg.frame, sig, random_stream(cfg.seed, RandomStream::frame));
    auto h = make_clifford_field_vector(y, S, points);
    if (cfg.finite_difference) h = CliffordFieldVector::from_field(h.up().as_finite_difference(cfg.fd_step), points);
    auto table = build_table(sig.n());
    auto C = solve_primitive(h, table);
    GaugeConfig check_cfg;
    check_cfg.random = true;
    auto check = make_gauge_element(gauge_generator_field(cfg.gauge_check.value_or(check_cfg), sig,
                                                          random_stream(cfg.seed, RandomStream::gauge_check)),
                                    points);
    return Pipeline{std::move(points), std::move(S), std::move(h), std::move(table), std::move(C), std::move(check)};
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

struct VerifyResult {
  Json report;
  bool passed = false;
  int exit_code() const { return passed ? kExitOk : kExitTolerance; }
};

inline Json tolerances_json(const Tolerances& t) {
  return Json{{"primitive", t.primitive}, {"curvature", t.curvature}, {"yang_mills", t.yang_mills},
              {"gauge", t.gauge}, {"covariance", t.covariance}};
}

// build h -> C -> Yang-Mills solution -> residuals -> gauge check.
// Throws ConfigError for unusable configs; tolerance breaches are reported.
inline VerifyResult run_verify(const RunConfig& cfg) {
  const Pipeline st = build_pipeline(cfg);
  const Signature sig = cfg.sig;
  const int n = sig.n();
  std::vector<std::string> failures;
  auto check = [&](const std::string& what, double value, double tol) {
    if (!(value < tol)) failures.push_back(what);
  };

  Json rep;
  rep["signature"] = Json{{"p", sig.p()}, {"q", sig.q()}};
  rep["sigma"] = complex_json(cfg.sigma);
  const Complex eps_formula = epsilon_for(n, cfg.sigma);
  const Complex eps = cfg.epsilon.value_or(eps_formula);
  rep["epsilon"] = complex_json(eps);
  rep["epsilon_formula"] = complex_json(eps_formula);
  rep["samples"] = st.points.size();
  rep["seed"] = cfg.seed;
  rep["derivatives"] = cfg.finite_difference ? "fd" : "exact";
  if (cfg.finite_difference) rep["fd_step"] = cfg.fd_step;

  const PrimitiveReport prim = primitive_campaign(st.h, st.C, st.points);
  rep["primitive_max"] = prim.primitive_max;
  rep["primitive_mean"] = prim.primitive_mean;
  rep["curvature_max"] = prim.curvature_max;
  rep["curvature_mean"] = prim.curvature_mean;
  rep["center_leak_max"] = prim.center_leak_max;
  check("primitive", prim.primitive_max, cfg.tol.primitive);
  check("curvature", prim.curvature_max, cfg.tol.curvature);

  Json points = Json::array();
  if (!failures.empty()) {
    // A Yang-Mills solution is never assembled from an unsolved primitive pair.
    for (const auto& e : prim.entries)
      points.push_back(Json{{"point", e.point}, {"primitive_max", e.primitive_max}, {"curvature_max", e.curvature_max},
                            {"center_leak", e.center_leak}});
  } else {
    const YMSolution base = build_solution(st.h, st.C, cfg.sigma, st.points, cfg.tol.primitive);
    const YMSolution sol = base.with_epsilon(eps);
    rep["epsilon_recovered"] = complex_json(recover_epsilon(base, st.points));

    const YMSolution moved = gauge_transform_solution(sol, st.check, st.points);
    const auto [h2, c2] = gauge_transform_fields(st.h, st.C, st.check, st.points);
    const PrimitiveReport prim2 = primitive_campaign(h2, c2, st.points);

    double eq1 = 0, eq2 = 0, cons = 0, geq1 = 0, geq2 = 0, gcons = 0, cov = 0;
    for (std::size_t i = 0; i < st.points.size(); ++i) {
      const Point& x = st.points[i];
      const YMResidualEntry r = ym_residuals(sol, x);
      const YMResidualEntry g = ym_residuals(moved, x);
      const double d = gauge_covariance_defect(r, g, st.check.at(x));
      eq1 = std::max(eq1, r.eq1_max);
      eq2 = std::max(eq2, r.eq2_max);
      cons = std::max(cons, r.conservation_max);
      geq1 = std::max(geq1, g.eq1_max);
      geq2 = std::max(geq2, g.eq2_max);
      gcons = std::max(gcons, g.conservation_max);
      cov = std::max(cov, d);
      const auto& e = prim.entries[i];
      points.push_back(Json{{"point", x}, {"primitive_max", e.primitive_max}, {"curvature_max", e.curvature_max},
                            {"center_leak", e.center_leak}, {"eq1_max", r.eq1_max}, {"eq2_max", r.eq2_max},
                            {"conservation_max", r.conservation_max}});
    }
    rep["eq1_max"] = eq1;
    rep["eq2_max"] = eq2;
    rep["conservation_max"] = cons;
    rep["gauge_check"] = Json{{"primitive_max", prim2.primitive_max}, {"curvature_max", prim2.curvature_max},
                              {"eq1_max", geq1}, {"eq2_max", geq2}, {"conservation_max", gcons},
                              {"covariance_max", cov}};
    check("eq1", eq1, cfg.tol.yang_mills);
    check("eq2", eq2, cfg.tol.yang_mills);
    check("conservation", cons, cfg.tol.yang_mills);
    check("gauge_check.primitive", prim2.primitive_max, cfg.tol.gauge);
    check("gauge_check.curvature", prim2.curvature_max, cfg.tol.gauge);
    check("gauge_check.eq1", geq1, cfg.tol.gauge);
    check("gauge_check.eq2", geq2, cfg.tol.gauge);
    check("gauge_check.conservation", gcons, cfg.tol.gauge);
    check("gauge_check.covariance", cov, cfg.tol.covariance);
  }
  rep["tolerances"] = tolerances_json(cfg.tol);
  rep["points"] = std::move(points);
  rep["failures"] = failures;
  rep["passed"] = failures.empty();
  return VerifyResult{std::move(rep), failures.empty()};
}

}  // namespace cliffym
