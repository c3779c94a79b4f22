#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mimem/config.hpp"
#include "mimem/operators.hpp"
#include "mimem/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw mimem::ConfigError("cannot read config file " + path);
  }
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mimetic finite-difference Maxwell solvers"};
  app.require_subcommand(1);

  // run
  std::string preset_name, config_path, out_dir = "out";
  long snapshot_every = 0;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a scenario");
  CLI::Option* preset_opt =
      run_cmd->add_option("--preset", preset_name, "Built-in scenario name");
  run_cmd->add_option("--config", config_path, "Path to a JSON config")
      ->excludes(preset_opt);
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_option("--snapshot-every", snapshot_every,
                      "Capture a snapshot every N steps");

  // ops
  int ops_k = 2;
  std::size_t ops_m = 4, ops_n = 0;
  double ops_dx = 1.0, ops_dy = 1.0;
  std::string ops_dump;
  CLI::App* ops_cmd =
      app.add_subcommand("ops", "Dump an operator as triplet text");
  ops_cmd->add_option("--k", ops_k, "Order of accuracy");
  ops_cmd->add_option("--m", ops_m, "Cells (x)")->required();
  ops_cmd->add_option("--dx", ops_dx, "Spacing (x)");
  ops_cmd->add_option("--n", ops_n, "Cells (y); makes the dump 2D");
  ops_cmd->add_option("--dy", ops_dy, "Spacing (y)");
  ops_cmd->add_option("--dump", ops_dump, "grad | div | lap")->required();

  // verify
  int ver_k = 2;
  std::size_t ver_m = 0, ver_n = 0;
  CLI::App* ver_cmd =
      app.add_subcommand("verify", "Check the discrete operator identities");
  ver_cmd->add_option("--k", ver_k, "Order of accuracy");
  ver_cmd->add_option("--m", ver_m, "Cells (x)")->required();
  ver_cmd->add_option("--n", ver_n, "Cells (y); verifies the 2D operators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (run_cmd->parsed()) {
      mimem::RunConfig cfg;
      if (!preset_name.empty()) {
        cfg = mimem::preset(preset_name);
      } else if (!config_path.empty()) {
        cfg = mimem::parse_config(read_file(config_path));
      } else {
        throw mimem::ConfigError("run needs --preset or --config");
      }
      if (snapshot_every > 0) {
        if (cfg.scenario1d) {
          cfg.scenario1d->snapshot_every =
              static_cast<std::size_t>(snapshot_every);
        }
        if (cfg.scenario2d) {
          cfg.scenario2d->snapshot_steps.clear();
          for (long n = 0; n <= cfg.scenario2d->steps; n += snapshot_every) {
            cfg.scenario2d->snapshot_steps.push_back(n);
          }
          if (cfg.scenario2d->snapshot_steps.back() != cfg.scenario2d->steps) {
            cfg.scenario2d->snapshot_steps.push_back(cfg.scenario2d->steps);
          }
        }
      }
      const mimem::RunResult result = mimem::run(cfg, out_dir);
      std::cout << "wrote " << result.snapshot_files.size()
                << " snapshot file(s) and " << result.manifest_file.string()
                << "\n";
    } else if (ops_cmd->parsed()) {
      mimem::SparseMatrix op;
      const bool two_d = ops_n > 0;
      if (ops_dump == "grad") {
        op = two_d ? mimem::grad2d(ops_k, ops_m, ops_dx, ops_n, ops_dy)
                   : mimem::grad1d(ops_k, ops_m, ops_dx);
      } else if (ops_dump == "div") {
        op = two_d ? mimem::div2d(ops_k, ops_m, ops_dx, ops_n, ops_dy)
                   : mimem::div1d(ops_k, ops_m, ops_dx);
      } else if (ops_dump == "lap") {
        op = two_d ? mimem::laplacian(
                         ops_k, mimem::StaggeredGrid2D(ops_m, ops_dx, ops_n, ops_dy))
                   : mimem::laplacian(ops_k, mimem::StaggeredGrid1D(ops_m, ops_dx));
      } else {
        throw mimem::ConfigError("--dump must be grad, div, or lap");
      }
      op.dump_triplets(std::cout);
    } else if (ver_cmd->parsed()) {
      mimem::IdentityReport report;
      if (ver_n > 0) {
        report = mimem::verify_identities(
            ver_k, mimem::StaggeredGrid2D(ver_m, 1.0, ver_n, 1.0));
      } else {
        report =
            mimem::verify_identities(ver_k, mimem::StaggeredGrid1D(ver_m, 1.0));
      }
      std::cout << "grad_const residual:      " << report.grad_const_residual
                << "\n"
                << "div_const residual:       " << report.div_const_residual
                << "\n"
                << "laplacian_const residual: "
                << report.laplacian_const_residual << "\n"
                << (report.passed() ? "PASS" : "FAIL") << " (tolerance "
                << report.tolerance << ")\n";
      return report.passed() ? kExitOk : kExitRuntimeError;
    }
  } catch (const mimem::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}
