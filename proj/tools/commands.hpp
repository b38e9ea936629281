#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <cliffym/cliffym.hpp>
#include <cliffym/golden.hpp>
#include <cliffym/json_io.hpp>
#include <cliffym/verify.hpp>

namespace cliffym::cli {

inline int cmd_tables(int n, bool json, std::ostream& out, std::ostream& err) {
  if (n < 1 || n > max_dimension()) {
    err << "error: n must lie in 1.." << max_dimension() << "\n";
    return kExitConfig;
  }
  const ContractionTable t = build_table(n);
  if (json)
    out << table_json(t).dump(2) << "\n";
  else
    out << table_text(t);
  return kExitOk;
}

struct VerifyOptions {
  std::string config_path;
  std::optional<std::string> sigma;
  std::optional<std::string> epsilon;
  std::optional<std::uint64_t> seed;
  bool fd = false;
  std::optional<std::string> output;
};

// "RE" or "RE,IM".
inline Complex parse_complex_arg(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto comma = s.find(',');
    const std::string re = s.substr(0, comma);
    const double r = std::stod(re, &used);
    if (used != re.size()) throw ConfigError("");
    if (comma == std::string::npos) return {r, 0.0};
    const std::string im = s.substr(comma + 1);
    const double i = std::stod(im, &used);
    if (used != im.size()) throw ConfigError("");
    return {r, i};
  } catch (const std::exception&) {
    throw ConfigError("cannot parse complex value '" + s + "'");
  }
}

inline RunConfig load_config(const VerifyOptions& o) {
  std::ifstream in(o.config_path);
  if (!in) throw ConfigError("cannot open config file " + o.config_path);
  std::stringstream ss;
  ss << in.rdbuf();
  RunConfig c = parse_run_config(ss.str());
  if (o.sigma) c.sigma = parse_complex_arg(*o.sigma);
  if (o.epsilon) c.epsilon = parse_complex_arg(*o.epsilon);
  if (o.seed) c.seed = *o.seed;
  if (o.fd && !c.finite_difference) {
    c.finite_difference = true;
    c.tol = Tolerances::finite_difference();
  }
  if (o.output) c.output = *o.output;
  return c;
}

inline int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = load_config(o);
    const VerifyResult r = run_verify(cfg);
    const std::string text = r.report.dump(2) + "\n";
    out << text;
    if (!cfg.output.empty()) {
      std::ofstream f(cfg.output);
      if (!f) throw ConfigError("cannot write report to " + cfg.output);
      f << text;
    }
    if (!r.passed) {
      err << "tolerance breach:";
      for (const auto& f : r.report.at("failures")) err << " " << f.get<std::string>();
      err << "\n";
    }
    return r.exit_code();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
}

inline int cmd_golden(std::ostream& out, std::ostream& err, const EigenvalueRule& lambda = contraction_eigenvalue) {
  const auto m = golden_check(lambda);
  if (!m.empty()) {
    err << m.size() << " golden mismatch(es):\n";
    print_mismatches(err, m);
    return kExitGolden;
  }
  out << "golden tables: A, B (n=2), D, G (n=3), B (n=4), r (n=2, 4), s (n=3) match\n";
  return kExitOk;
}

// Small-n cases end to end: C from the explicit rational coefficients, from the
// projection sum and from the contraction table must agree, and the resulting
// Yang-Mills fields must satisfy every equation.
inline int cmd_demo(int n, std::ostream& out, std::ostream& err) {
  if (n < 2 || n > 4) {
    err << "error: demo supports n = 2, 3, 4\n";
    return kExitConfig;
  }
  static const std::pair<int, int> sigs[] = {{1, 1}, {2, 1}, {1, 3}};
  const Signature sig(sigs[n - 2].first, sigs[n - 2].second);
  const std::vector<std::string>& explicit_coeffs = n == 2 ? golden::r2() : n == 3 ? golden::s3() : golden::r4();

  RunConfig cfg;
  cfg.sig = sig;
  cfg.seed = 2024;
  cfg.frame.random = true;
  cfg.gauge.random = true;
  const Pipeline st = build_pipeline(cfg);

  std::vector<Rational> coeffs;
  for (const auto& c : explicit_coeffs) coeffs.push_back(rational_from_string(c));
  out << "signature " << sig.to_string() << ", " << st.points.size() << " sample points\n";
  out << "C_mu = sum_l c_l F_h^l(W_mu) with c =";
  for (const auto& c : explicit_coeffs) out << " " << c;
  out << "\n";

  double path = 0.0;
  for (const auto& x : st.points) {
    const FieldVectorJets hj = st.h.jets(x, 1);
    const auto w = contracted_derivative(hj);
    std::vector<Multivector> up, down;
    for (int a = 0; a < n; ++a) {
      up.push_back(hj.up[a].value);
      down.push_back(hj.down[a].value);
    }
    auto F = [&](const Multivector& u) { return contract_with<Multivector>(u, up, down); };
    const auto c_table = compute_C(st.h, st.table, x, SolutionForm::contraction);
    const auto c_proj = compute_C(st.h, st.table, x, SolutionForm::projection);
    for (int mu = 0; mu < n; ++mu) {
      const Multivector c_explicit = combine(contraction_powers(w[mu].value, static_cast<int>(coeffs.size()), F), coeffs);
      path = std::max({path, (c_explicit - c_table[mu]).max_norm(), (c_proj[mu] - c_table[mu]).max_norm()});
    }
  }
  const VerifyResult r = run_verify(cfg);
  const auto& rep = r.report;
  out << "max |C_explicit - C_table|, |C_projection - C_table|: " << path << "\n";
  out << "primitive residual " << rep.at("primitive_max").get<double>() << ", curvature " << rep.at("curvature_max").get<double>()
      << "\n";
  if (rep.contains("eq1_max")) {
    const Complex eps = parse_complex(rep.at("epsilon_recovered"));
    out << "eq1 " << rep.at("eq1_max").get<double>() << ", eq2 " << rep.at("eq2_max").get<double>() << ", conservation "
        << rep.at("conservation_max").get<double>() << "\n";
    out << "epsilon recovered " << eps.real() << " (formula 4(n-1)sigma^3 = " << 4 * (n - 1) << ")\n";
    out << "gauge check covariance defect " << rep.at("gauge_check").at("covariance_max").get<double>() << "\n";
  }
  const bool ok = r.passed && path < 1e-12;
  out << (ok ? "demo passed\n" : "demo FAILED\n");
  return ok ? kExitOk : kExitTolerance;
}

}  // namespace cliffym::cli
