#pragma once

#include <filesystem>
#include <vector>

#include "mimem/config.hpp"

namespace mimem {

/// Scenario enlarged by `scale` in each direction with the pulse shifted to
/// the new center; used as a reflection-free reference for the PML run.
Scenario2D enlarged_oracle_scenario(const Scenario2D& base, std::size_t scale);

/// Max-abs difference over the base grid's non-PML cell centers between a
/// base-run field and the corresponding region of the enlarged-run field.
double interior_max_abs_diff(const Scenario2D& base,
                             const std::vector<double>& e_base,
                             std::size_t scale,
                             const std::vector<double>& e_big);

struct RunResult {
  std::vector<std::filesystem::path> snapshot_files;
  std::filesystem::path manifest_file;
};

/// Executes the configured scenario, writing one snapshot file per capture
/// plus a manifest with the resolved parameters, Courant number, operator
/// identity residuals, and wall time. Snapshot output is byte-deterministic
/// for identical configs.
RunResult run(const RunConfig& config, const std::filesystem::path& out_dir);

}  // namespace mimem
