#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "contraction.hpp"
#include "error.hpp"
#include "frame.hpp"
#include "multivector.hpp"
#include "polynomial.hpp"
#include "primitive.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "yang_mills.hpp"

namespace cliffym {

// Insertion-ordered so that reports are byte-stable and read top-down.
using Json = nlohmann::ordered_json;

// ---- scalars ----

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

// Accepts a number or a [re, im] pair.
inline Complex parse_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError("expected a number or [re, im]");
}

inline Json rational_json(const Rational& r) {
  return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline Rational parse_rational(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ConfigError("rational must be {\"num\", \"den\"}");
  const BigInt num(j.at("num").get<std::string>());
  const BigInt den(j.at("den").get<std::string>());
  if (den == 0) throw ConfigError("rational with zero denominator");
  return Rational(num, den);
}

// ---- multivectors ----

inline Json multivector_json(const Multivector& m) {
  Json coeffs = Json::array();
  for (unsigned i = 0; i < m.size(); ++i) coeffs.push_back(complex_json(m[i]));
  return Json{{"p", m.sig().p()}, {"q", m.sig().q()}, {"coeffs", std::move(coeffs)}};
}

inline Multivector parse_multivector(const Json& j) {
  const Signature sig(j.at("p").get<int>(), j.at("q").get<int>());
  const Json& c = j.at("coeffs");
  if (!c.is_array() || c.size() != sig.blade_count()) throw ConfigError("coeffs must list 2^n [re, im] pairs");
  Multivector m(sig);
  for (unsigned i = 0; i < m.size(); ++i) m[i] = parse_complex(c[i]);
  return m;
}

// ---- contraction tables ----

inline Json integer_matrix_json(const IntegerMatrix& a) {
  Json out = Json::array();
  for (const auto& row : a) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    out.push_back(std::move(r));
  }
  return out;
}

inline Json rational_matrix_json(const RationalMatrix& a) {
  Json out = Json::array();
  for (const auto& row : a) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

inline Json table_json(const ContractionTable& t) {
  Json j;
  j["n"] = t.n;
  j["parity"] = t.even() ? "even" : "odd";
  j["indexing"] =
      "0-based: row k, column l of A is lambda_l^k (1-based a_{k+1,l+1}); lambdas[k] is the F-eigenvalue on grade k";
  Json lam = Json::array();
  for (auto l : t.lambdas) lam.push_back(l);
  j["lambdas"] = std::move(lam);
  j[t.even() ? "A" : "D"] = integer_matrix_json(t.vandermonde);
  j[t.even() ? "B" : "G"] = rational_matrix_json(t.inverse);
  Json mu = Json::array();
  for (const auto& m : t.mus) mu.push_back(m ? rational_json(*m) : Json(nullptr));
  j["mu"] = std::move(mu);
  Json c = Json::array();
  for (const auto& v : t.coefficients) c.push_back(rational_json(v));
  j[t.even() ? "r" : "s"] = std::move(c);
  return j;
}

// Human-readable table dump.
inline std::string table_text(const ContractionTable& t) {
  std::string out = "n = " + std::to_string(t.n) + (t.even() ? " (even)\n" : " (odd)\n");
  out += "lambda:";
  for (auto l : t.lambdas) out += " " + std::to_string(l);
  out += "\n";
  out += t.even() ? "A =\n" : "D =\n";
  for (const auto& row : t.vandermonde) {
    out += " ";
    for (const auto& v : row) out += " " + v.str();
    out += "\n";
  }
  out += t.even() ? "B =\n" : "G =\n";
  for (const auto& row : t.inverse) {
    out += " ";
    for (const auto& v : row) out += " " + to_string(v);
    out += "\n";
  }
  out += "mu:";
  for (const auto& m : t.mus) out += " " + (m ? to_string(*m) : std::string("-"));
  out += "\n";
  out += t.even() ? "r:" : "s:";
  for (const auto& v : t.coefficients) out += " " + to_string(v);
  out += "\n";
  return out;
}

// ---- field specifications ----

inline Polynomial parse_polynomial(const Json& j, int n) {
  Polynomial p;
  for (const auto& m : j.at("monomials")) {
    Monomial mono;
    mono.exps = m.contains("exps") ? m.at("exps").get<std::vector<int>>() : std::vector<int>{};
    if (mono.exps.empty()) mono.exps.assign(n, 0);
    if (static_cast<int>(mono.exps.size()) != n) throw ConfigError("monomial exps must have n entries");
    for (int e : mono.exps)
      if (e < 0) throw ConfigError("monomial exponents must be non-negative");
    mono.coeff = parse_complex(m.at("coeff"));
    p.monomials.push_back(std::move(mono));
  }
  return p;
}

inline Json polynomial_json(const Polynomial& p) {
  Json mons = Json::array();
  for (const auto& m : p.monomials) mons.push_back(Json{{"exps", m.exps}, {"coeff", complex_json(m.coeff)}});
  return Json{{"monomials", std::move(mons)}};
}

struct FrameConfig {
  bool random = false;
  double scale = 0.4;
  FrameSpec spec;
};

struct GaugeConfig {
  bool random = false;
  double scale = 0.3;
  PolynomialMultivector generator;  // bivector terms of A(x), S = exp(A)
};

inline FrameConfig parse_frame(const Json& j, Signature sig) {
  FrameConfig f;
  const int n = sig.n();
  const std::string kind = j.value("kind", "identity");
  if (kind == "identity") {
    f.spec.kind = FrameSpec::Kind::identity;
  } else if (kind == "constant") {
    f.spec.kind = FrameSpec::Kind::constant;
    const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n) throw ConfigError("frame matrix must be n x n");
    f.spec.matrix = RealMatrix(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw ConfigError("frame matrix must be n x n");
      for (int k = 0; k < n; ++k) f.spec.matrix(i, k) = rows[i][k];
    }
  } else if (kind == "rotation") {
    f.spec.kind = FrameSpec::Kind::rotation;
    for (const auto& pl : j.at("planes")) {
      RotationPlane r{pl.at("a").get<int>(), pl.at("b").get<int>(), parse_polynomial(pl.at("poly"), n)};
      if (r.a < 1 || r.b > n || r.a >= r.b) throw ConfigError("rotation plane needs 1 <= a < b <= n");
      f.spec.planes.push_back(std::move(r));
    }
  } else if (kind == "random") {
    f.random = true;
    f.scale = j.value("scale", 0.4);
  } else {
    throw ConfigError("unknown frame kind '" + kind + "'");
  }
  return f;
}

inline GaugeConfig parse_gauge(const Json& j, Signature sig) {
  GaugeConfig g;
  const std::string kind = j.value("kind", "identity");
  if (kind == "identity") return g;
  if (kind == "random") {
    g.random = true;
    g.scale = j.value("scale", 0.3);
    return g;
  }
  if (kind != "exp_bivector") throw ConfigError("unknown gauge kind '" + kind + "'");
  for (const auto& t : j.at("terms")) {
    unsigned mask = 0;
    try {
      mask = parse_blade(t.at("blade").get<std::string>(), sig.n());
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
    if (grade(mask) != 2) throw ConfigError("gauge terms must be bivector blades");
    g.generator.terms.push_back({mask, parse_polynomial(t.at("poly"), sig.n())});
  }
  return g;
}

// ---- run configuration ----

struct Tolerances {
  double primitive = kPrimitiveTolerance;
  double curvature = kCurvatureTolerance;
  double yang_mills = kYangMillsTolerance;
  double gauge = kGaugeTolerance;
  double covariance = 1e-9;

  // Finite-difference truncation dominates every residual on the FD path.
  static Tolerances finite_difference() { return {kFiniteDifferenceTolerance, kFiniteDifferenceTolerance, kFiniteDifferenceTolerance,
                                                  kFiniteDifferenceTolerance, kFiniteDifferenceTolerance}; }
};

struct RunConfig {
  Signature sig{2, 0};
  FrameConfig frame;
  GaugeConfig gauge;
  std::optional<GaugeConfig> gauge_check;  // defaults to a seeded random S
  int sample_count = 16;
  std::uint64_t seed = 0;
  SampleBox box;
  Complex sigma = 1.0;
  std::optional<Complex> epsilon;
  bool finite_difference = false;
  double fd_step = kDefaultFdStep;
  Tolerances tol;
  std::string output;
};

inline Tolerances parse_tolerances(const Json& j, Tolerances t) {
  auto read = [&](const char* key, double& v) {
    if (!j.contains(key)) return;
    v = j.at(key).get<double>();
    if (!(v > 0.0)) throw ConfigError(std::string("tolerance '") + key + "' must be positive");
  };
  read("primitive", t.primitive);
  read("curvature", t.curvature);
  read("yang_mills", t.yang_mills);
  read("gauge", t.gauge);
  read("covariance", t.covariance);
  return t;
}

// Any JSON or structural problem surfaces as ConfigError.
inline RunConfig parse_run_config(const Json& j) {
  try {
    RunConfig c;
    const Json& s = j.at("signature");
    c.sig = Signature(s.at("p").get<int>(), s.at("q").get<int>());
    if (j.contains("frame")) c.frame = parse_frame(j.at("frame"), c.sig);
    if (j.contains("gauge")) c.gauge = parse_gauge(j.at("gauge"), c.sig);
    if (j.contains("gauge_check")) c.gauge_check = parse_gauge(j.at("gauge_check"), c.sig);
    if (j.contains("samples")) {
      const Json& sm = j.at("samples");
      c.sample_count = sm.value("count", 16);
      if (c.sample_count < 0) throw ConfigError("sample count must be non-negative");
      c.seed = sm.value("seed", std::uint64_t{0});
      if (sm.contains("box")) {
        const auto b = sm.at("box").get<std::vector<double>>();
        if (b.size() != 2 || !(b[0] < b[1])) throw ConfigError("box must be [lo, hi] with lo < hi");
        c.box = {b[0], b[1]};
      }
    }
    if (j.contains("sigma")) c.sigma = parse_complex(j.at("sigma"));
    if (j.contains("epsilon")) c.epsilon = parse_complex(j.at("epsilon"));
    if (j.contains("derivatives")) {
      const auto mode = j.at("derivatives").get<std::string>();
      if (mode != "exact" && mode != "fd") throw ConfigError("derivatives must be 'exact' or 'fd'");
      c.finite_difference = mode == "fd";
    }
    if (j.contains("fd_step")) {
      c.fd_step = j.at("fd_step").get<double>();
      if (!(c.fd_step > 0.0)) throw ConfigError("fd_step must be positive");
    }
    c.tol = c.finite_difference ? Tolerances::finite_difference() : Tolerances{};
    if (j.contains("tolerances")) c.tol = parse_tolerances(j.at("tolerances"), c.tol);
    c.output = j.value("output", std::string{});
    return c;
  } catch (const ConfigError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

inline RunConfig parse_run_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_run_config(j);
}

// ---- residual reports ----

inline Json point_json(const Point& x) { return Json(x); }

inline Json primitive_report_json(const PrimitiveReport& r) {
  Json pts = Json::array();
  for (const auto& e : r.entries)
    pts.push_back(Json{{"point", point_json(e.point)},
                       {"primitive_max", e.primitive_max},
                       {"curvature_max", e.curvature_max},
                       {"center_leak", e.center_leak}});
  return Json{{"primitive_max", r.primitive_max}, {"primitive_mean", r.primitive_mean},
              {"curvature_max", r.curvature_max}, {"curvature_mean", r.curvature_mean},
              {"center_leak_max", r.center_leak_max}, {"center_leak_mean", r.center_leak_mean},
              {"points", std::move(pts)}};
}

}  // namespace cliffym
