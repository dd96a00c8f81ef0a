#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace fairslot {

using KvMap = std::map<std::string, std::string>;

inline std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Flat key=value text: entries separated by newlines or ';', '#' starts a
// comment. Later entries override earlier ones.
inline KvMap parse_kv(const std::string& text) {
  KvMap out;
  std::string entry;
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ';') c = '\n';
  std::stringstream ss(normalized);
  while (std::getline(ss, entry)) {
    auto hash = entry.find('#');
    if (hash != std::string::npos) entry.erase(hash);
    entry = trim(entry);
    if (entry.empty()) continue;
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      fail(Error::Kind::config, "bad config entry (expected key=value): " + entry);
    std::string key = trim(entry.substr(0, eq));
    std::string value = trim(entry.substr(eq + 1));
    if (key.empty()) fail(Error::Kind::config, "empty config key in: " + entry);
    out[key] = value;
  }
  return out;
}

inline KvMap parse_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Error::Kind::io, "cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_kv(buf.str());
}

inline double to_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Error::Kind::config, "not a number for " + what + ": '" + s + "'");
  }
}

inline int64_t to_i64(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Error::Kind::config, "not an integer for " + what + ": '" + s + "'");
  }
}

inline uint64_t to_u64(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Error::Kind::config, "not an unsigned integer for " + what + ": '" + s + "'");
  }
}

inline std::vector<std::string> parse_string_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::vector<double> parse_double_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const auto& item : parse_string_list(s)) out.push_back(to_double(item, what));
  return out;
}

inline std::vector<uint64_t> parse_u64_list(const std::string& s, const std::string& what) {
  std::vector<uint64_t> out;
  for (const auto& item : parse_string_list(s)) out.push_back(to_u64(item, what));
  return out;
}

}  // namespace fairslot
