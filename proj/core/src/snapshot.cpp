#include "mimem/snapshot.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace mimem {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_snapshot(std::ostream& os,
                    const std::vector<SnapshotRecord>& records) {
  for (const SnapshotRecord& r : records) {
    std::size_t expected = 1;
    for (std::size_t d : r.dims) expected *= d;
    if (expected != r.values.size()) {
      throw std::invalid_argument("snapshot: value count does not match dims for field " +
                                  r.field);
    }
    os << "# " << r.field << ' ' << r.layout;
    for (std::size_t d : r.dims) os << ' ' << d;
    os << ' ' << r.step << '\n';
    for (double v : r.values) os << format_value(v) << '\n';
  }
}

}  // namespace mimem
