#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace mimem {

/// One field capture: header line "# field layout dims... step", then one
/// value per line with 17 significant digits, row-major (x-fastest) in 2D.
struct SnapshotRecord {
  long step = 0;
  std::string field;   // ex | hy | e | bx | by
  std::string layout;  // 1d-scalar | 1d-edge | 2d-scalar | 2d-edge-x | 2d-edge-y
  std::vector<std::size_t> dims;
  std::vector<double> values;
};

std::string format_value(double v);

void write_snapshot(std::ostream& os, const std::vector<SnapshotRecord>& records);

}  // namespace mimem
