#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace scr {

// Shortest decimal form that round-trips to the identical double, via
// std::to_chars. Deterministic, so repeated runs emit identical bytes.
std::string format_double(double v);

std::string format_u64(std::uint64_t v);
std::string format_int(long long v);

// Rows end with '\n' regardless of platform. Cells are expected not to
// contain commas; none of the emitted schemas need quoting.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
};

}  // namespace scr
