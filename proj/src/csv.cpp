#include "csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace fairslot::csv {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

Table read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Error::Kind::io, "cannot open file: " + path);
  Table table;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 || table.header.empty()) {
      table.header = split(line);
      continue;
    }
    table.rows.push_back(split(line));
    table.lines.push_back(line_no);
  }
  if (table.header.empty()) fail(Error::Kind::io, "missing header: " + path);
  return table;
}

void require_header(const Table& table, const std::vector<std::string>& expected,
                    const std::string& path) {
  if (table.header.size() < expected.size())
    fail(Error::Kind::io, "bad header in " + path + ": expected " + join(expected));
  for (size_t i = 0; i < expected.size(); ++i) {
    if (table.header[i] != expected[i])
      fail(Error::Kind::io, "bad header in " + path + ": expected " + join(expected));
  }
}

std::string join(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

std::string fmt_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

}  // namespace fairslot::csv
