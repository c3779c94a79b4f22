#include "mimem/runner.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "mimem/operators.hpp"
#include "mimem/snapshot.hpp"
#include "mimem/yee.hpp"

namespace mimem {

namespace {

using nlohmann::json;

std::filesystem::path snapshot_path(const std::filesystem::path& dir,
                                    const std::string& prefix, long step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06ld", step);
  return dir / (prefix + "snapshot_" + buf + ".txt");
}

void write_records(const std::filesystem::path& path,
                   const std::vector<SnapshotRecord>& records) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw std::runtime_error("runner: cannot open " + path.string() +
                             " for writing");
  }
  write_snapshot(os, records);
}

json report_to_json(const IdentityReport& r) {
  return {{"grad_const", r.grad_const_residual},
          {"div_const", r.div_const_residual},
          {"laplacian_const", r.laplacian_const_residual},
          {"tolerance", r.tolerance},
          {"passed", r.passed()}};
}

std::vector<SnapshotRecord> records_1d(const MimeticState1D& s) {
  return {{s.n, "ex", "1d-scalar", {s.ex.size()}, s.ex},
          {s.n, "hy", "1d-edge", {s.hy.size()}, s.hy}};
}

std::vector<SnapshotRecord> records_2d(const Scenario2D& sc,
                                       const MimeticState2D& s) {
  const StaggeredGrid2D grid = sc.grid();
  const PhysicalB phys = physical_B(grid, s.b);
  return {{s.n, "e", "2d-scalar", {sc.mx + 2, sc.my + 2}, s.e},
          {s.n, "by", "2d-edge-x", {sc.mx + 1, sc.my}, phys.by},
          {s.n, "bx", "2d-edge-y", {sc.mx, sc.my + 1}, phys.bx}};
}

void run_yee_1d(const Scenario1D& sc, const Observer1D& observer) {
  sc.validate();
  std::vector<double> eps_r(sc.m + 1, 1.0);
  std::vector<double> sigma(sc.m + 1, 0.0);
  if (sc.slab) {
    for (std::size_t i = sc.slab->start; i <= sc.m; ++i) {
      eps_r[i] = sc.slab->eps_r;
      sigma[i] = sc.slab->sigma;
    }
  }
  const YeeCoefficients coeffs =
      lossy_coefficients(eps_r, sigma, sc.dt, sc.eps0);
  YeeState state = make_yee_state(sc.m);
  const auto emit = [&] {
    if (!observer) return;
    MimeticState1D view;
    view.ex = state.ex;
    view.hy = state.hy;
    view.n = state.n;
    observer(view);
  };
  emit();
  for (long n = 1; n <= sc.steps; ++n) {
    const double v = sc.source.amplitude *
                     std::sin(2.0 * std::numbers::pi * sc.source.frequency * sc.dt *
                              static_cast<double>(n));
    yee_step(state, coeffs, PointSource{sc.source.index, v});
    const bool capture =
        (sc.snapshot_every > 0 &&
         n % static_cast<long>(sc.snapshot_every) == 0) ||
        n == sc.steps;
    if (capture) emit();
  }
}

}  // namespace

Scenario2D enlarged_oracle_scenario(const Scenario2D& base, std::size_t scale) {
  if (scale < 2 || ((scale - 1) * base.mx) % 2 != 0 ||
      ((scale - 1) * base.my) % 2 != 0) {
    throw std::invalid_argument(
        "runner: oracle scale must be >= 2 and keep the pulse cell-aligned");
  }
  Scenario2D big = base;
  big.mx = base.mx * scale;
  big.my = base.my * scale;
  big.pulse.cx += static_cast<double>((scale - 1) * base.mx / 2) * base.dx;
  big.pulse.cy += static_cast<double>((scale - 1) * base.my / 2) * base.dy;
  return big;
}

double interior_max_abs_diff(const Scenario2D& base,
                             const std::vector<double>& e_base,
                             std::size_t scale,
                             const std::vector<double>& e_big) {
  const Scenario2D big = enlarged_oracle_scenario(base, scale);
  const StaggeredGrid2D gb = base.grid();
  const StaggeredGrid2D go = big.grid();
  const std::size_t off_x = (scale - 1) * base.mx / 2;
  const std::size_t off_y = (scale - 1) * base.my / 2;
  const std::size_t depth = base.pml ? base.pml->depth : 0;
  double max_diff = 0.0;
  for (std::size_t j = depth + 1; j + depth <= base.my; ++j) {
    for (std::size_t i = depth + 1; i + depth <= base.mx; ++i) {
      const double d = std::abs(e_base[gb.scalar_index(i, j)] -
                                e_big[go.scalar_index(i + off_x, j + off_y)]);
      max_diff = std::max(max_diff, d);
    }
  }
  return max_diff;
}

RunResult run(const RunConfig& config, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  RunResult result;
  json manifest;
  manifest["config"] = json::parse(render(config));

  const auto t0 = std::chrono::steady_clock::now();

  switch (config.kind) {
    case RunKind::Mimetic1D:
    case RunKind::Yee1D: {
      const Scenario1D& sc = *config.scenario1d;
      manifest["courant"] = sc.courant();
      manifest["identity_residuals"] =
          report_to_json(verify_identities(sc.order, StaggeredGrid1D(sc.m, 1.0)));
      const Observer1D observer = [&](const MimeticState1D& s) {
        const auto path = snapshot_path(out_dir, "", s.n);
        write_records(path, records_1d(s));
        result.snapshot_files.push_back(path);
      };
      if (config.kind == RunKind::Mimetic1D) {
        run_1d(sc, observer);
      } else {
        run_yee_1d(sc, observer);
      }
      break;
    }
    case RunKind::Mimetic2D: {
      const Scenario2D& sc = *config.scenario2d;
      manifest["courant"] =
          sc.dt * std::sqrt(1.0 / (sc.dx * sc.dx) + 1.0 / (sc.dy * sc.dy));
      manifest["identity_residuals"] =
          report_to_json(verify_identities(2, sc.grid()));
      run_2d(sc, [&](const MimeticState2D& s) {
        const auto path = snapshot_path(out_dir, "", s.n);
        write_records(path, records_2d(sc, s));
        result.snapshot_files.push_back(path);
      });
      break;
    }
    case RunKind::PmlOracle: {
      const Scenario2D& sc = *config.scenario2d;
      const Scenario2D big = enlarged_oracle_scenario(sc, config.oracle_scale);
      manifest["courant"] =
          sc.dt * std::sqrt(1.0 / (sc.dx * sc.dx) + 1.0 / (sc.dy * sc.dy));
      manifest["identity_residuals"] =
          report_to_json(verify_identities(2, sc.grid()));
      MimeticState2D base_final;
      run_2d(sc, [&](const MimeticState2D& s) {
        const auto path = snapshot_path(out_dir, "base_", s.n);
        write_records(path, records_2d(sc, s));
        result.snapshot_files.push_back(path);
        base_final = s;
      });
      MimeticState2D big_final;
      run_2d(big, [&](const MimeticState2D& s) {
        const auto path = snapshot_path(out_dir, "oracle_", s.n);
        write_records(path, records_2d(big, s));
        result.snapshot_files.push_back(path);
        big_final = s;
      });
      manifest["pml_interior_max_abs_diff"] = interior_max_abs_diff(
          sc, base_final.e, config.oracle_scale, big_final.e);
      break;
    }
    case RunKind::OpsDump: {
      const OpsDumpSpec& spec = *config.ops;
      manifest["courant"] = nullptr;  // no time stepping in a dump
      if (spec.n) {
        manifest["identity_residuals"] = report_to_json(verify_identities(
            spec.order, StaggeredGrid2D(spec.m, spec.dx, *spec.n, spec.dy)));
      } else {
        manifest["identity_residuals"] = report_to_json(
            verify_identities(spec.order, StaggeredGrid1D(spec.m, spec.dx)));
      }
      SparseMatrix op;
      if (spec.n) {
        switch (spec.target) {
          case OpsDumpTarget::Grad:
            op = grad2d(spec.order, spec.m, spec.dx, *spec.n, spec.dy);
            break;
          case OpsDumpTarget::Div:
            op = div2d(spec.order, spec.m, spec.dx, *spec.n, spec.dy);
            break;
          case OpsDumpTarget::Laplacian:
            op = laplacian(spec.order,
                           StaggeredGrid2D(spec.m, spec.dx, *spec.n, spec.dy));
            break;
        }
      } else {
        switch (spec.target) {
          case OpsDumpTarget::Grad:
            op = grad1d(spec.order, spec.m, spec.dx);
            break;
          case OpsDumpTarget::Div:
            op = div1d(spec.order, spec.m, spec.dx);
            break;
          case OpsDumpTarget::Laplacian:
            op = laplacian(spec.order, StaggeredGrid1D(spec.m, spec.dx));
            break;
        }
      }
      const auto path = out_dir / "operator.txt";
      std::ofstream os(path, std::ios::binary);
      op.dump_triplets(os);
      result.snapshot_files.push_back(path);
      break;
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  manifest["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  manifest["snapshots"] = json::array();
  for (const auto& p : result.snapshot_files) {
    manifest["snapshots"].push_back(p.filename().string());
  }

  result.manifest_file = out_dir / "manifest.json";
  std::ofstream os(result.manifest_file, std::ios::binary);
  os << manifest.dump(2) << "\n";
  return result;
}

}  // namespace mimem
