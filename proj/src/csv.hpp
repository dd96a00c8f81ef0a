#pragma once

#include <string>
#include <vector>

namespace fairslot::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<size_t> lines;  // 1-based source line of each row
};

// Minimal comma-separated format: no quoting, no embedded commas. All the
// canonical files in this project stick to that.
std::vector<std::string> split(const std::string& line);

Table read_file(const std::string& path);

// Throws when the leading header columns do not match `expected`. Extra
// trailing columns are allowed (optional columns).
void require_header(const Table& table, const std::vector<std::string>& expected,
                    const std::string& path);

std::string join(const std::vector<std::string>& cells);

// Shortest-precision decimal text that round-trips a double exactly.
std::string fmt_double(double v, int precision = 17);

}  // namespace fairslot::csv
