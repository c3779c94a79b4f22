#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "mimem/maxwell1d.hpp"
#include "mimem/maxwell2d.hpp"

namespace mimem {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RunKind { Yee1D, Mimetic1D, Mimetic2D, OpsDump, PmlOracle };

std::string to_string(RunKind kind);
RunKind run_kind_from_string(const std::string& s);

enum class OpsDumpTarget { Grad, Div, Laplacian };

struct OpsDumpSpec {
  int order = 2;
  std::size_t m = 4;
  double dx = 1.0;
  std::optional<std::size_t> n;  // set for 2D dumps
  double dy = 1.0;
  OpsDumpTarget target = OpsDumpTarget::Grad;

  friend bool operator==(const OpsDumpSpec&, const OpsDumpSpec&) = default;
};

struct RunConfig {
  RunKind kind = RunKind::Mimetic1D;
  std::optional<Scenario1D> scenario1d;
  std::optional<Scenario2D> scenario2d;
  std::optional<OpsDumpSpec> ops;
  std::size_t oracle_scale = 3;  // pml-oracle domain enlargement factor

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Strict parse of a JSON config document: unknown keys are fatal,
/// parameters are validated before any stepping. Throws ConfigError.
RunConfig parse_config(const std::string& text);

/// Inverse of parse_config: parse_config(render(c)) == c for valid c.
std::string render(const RunConfig& config);

/// Built-in scenarios: "sullivan-1d", "sullivan-1d-yee", "sullivan-2d-upml",
/// "sullivan-2d-pml-oracle".
RunConfig preset(const std::string& name);

}  // namespace mimem
