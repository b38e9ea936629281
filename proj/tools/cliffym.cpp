#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace cliffym;
  CLI::App app{"Clifford algebra contraction tables and Yang-Mills solution verifier"};
  app.require_subcommand(1);

  int tables_n = 0;
  bool tables_json = false;
  auto* tables = app.add_subcommand("tables", "print the contraction tables for dimension n");
  tables->add_option("--n", tables_n, "dimension n = p + q")->required();
  tables->add_flag("--json", tables_json, "emit JSON with exact rationals");

  cli::VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run a verification campaign from a JSON config");
  verify->add_option("--config", vo.config_path, "config file")->required();
  verify->add_option("--sigma", vo.sigma, "sigma as RE or RE,IM");
  verify->add_option("--epsilon", vo.epsilon, "override epsilon (RE or RE,IM)");
  verify->add_option("--seed", vo.seed, "override the config seed");
  verify->add_flag("--fd", vo.fd, "use central finite differences for h");
  verify->add_option("--output", vo.output, "also write the report to this file");

  auto* golden = app.add_subcommand("golden", "compare computed tables with the reference values");

  int demo_n = 0;
  auto* demo = app.add_subcommand("demo", "run the explicit small-n cases end to end");
  demo->add_option("--n", demo_n, "2, 3 or 4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*tables) return cli::cmd_tables(tables_n, tables_json, std::cout, std::cerr);
    if (*verify) return cli::cmd_verify(vo, std::cout, std::cerr);
    if (*golden) return cli::cmd_golden(std::cout, std::cerr);
    if (*demo) return cli::cmd_demo(demo_n, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
