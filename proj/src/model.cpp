#include "model.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <unordered_set>

#include "config.hpp"
#include "csv.hpp"

namespace fs = std::filesystem;

namespace fairslot {

namespace {

std::unordered_map<std::string, uint32_t> index_by_id(const auto& items) {
  std::unordered_map<std::string, uint32_t> map;
  map.reserve(items.size());
  for (uint32_t i = 0; i < items.size(); ++i) map.emplace(items[i].id, i);
  return map;
}

}  // namespace

std::unordered_map<std::string, uint32_t> Instance::billboard_index() const {
  return index_by_id(billboards);
}

std::unordered_map<std::string, uint32_t> Instance::slot_index() const {
  return index_by_id(slots);
}

std::unordered_map<std::string, uint32_t> Instance::advertiser_index() const {
  return index_by_id(advertisers);
}

double Instance::max_panel_size() const {
  double m = 0.0;
  for (const auto& b : billboards) m = std::max(m, b.panel_size);
  return m;
}

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::singleton: return "singleton";
    case Phase::round_robin: return "round_robin";
    case Phase::baseline: return "baseline";
    case Phase::leftover: return "leftover";
  }
  return "unknown";
}

std::optional<Phase> phase_from_name(const std::string& name) {
  if (name == "singleton") return Phase::singleton;
  if (name == "round_robin") return Phase::round_robin;
  if (name == "baseline") return Phase::baseline;
  if (name == "leftover") return Phase::leftover;
  return std::nullopt;
}

bool structurally_equal(const Allocation& a, const Allocation& b) {
  if (a.bundles.size() != b.bundles.size()) return false;
  if (a.slot_phase != b.slot_phase) return false;
  for (size_t i = 0; i < a.bundles.size(); ++i) {
    auto x = a.bundles[i];
    auto y = b.bundles[i];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

std::string to_string(const Violation& v) { return v.entity + ": " + v.rule; }

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  auto add = [&](const std::string& entity, const std::string& rule) {
    out.push_back({entity, rule});
  };

  if (!(inst.gamma >= 0.0 && inst.gamma <= 1.0))
    add("gamma", "penalty ratio must lie in [0, 1]");
  if (!(inst.theta > 0.0)) add("theta", "distance radius must be positive");
  if (inst.horizon_end < inst.horizon_start)
    add("horizon", "horizon end precedes start");

  std::unordered_set<std::string> billboard_ids;
  for (const auto& b : inst.billboards) {
    if (!billboard_ids.insert(b.id).second)
      add("billboard " + b.id, "duplicate billboard id");
    if (!(b.panel_size > 0.0)) add("billboard " + b.id, "panel_size must be positive");
    if (b.lat < -90.0 || b.lat > 90.0)
      add("billboard " + b.id, "latitude outside [-90, 90]");
    if (b.lon < -180.0 || b.lon > 180.0)
      add("billboard " + b.id, "longitude outside [-180, 180]");
    if (b.base_cost < 0.0) add("billboard " + b.id, "base_cost must be nonnegative");
  }

  for (const auto& c : inst.checkins) {
    if (c.timestamp < inst.horizon_start || c.timestamp > inst.horizon_end)
      add("checkin of " + c.user_id, "timestamp outside horizon [T1, T2]");
    if (c.lat < -90.0 || c.lat > 90.0)
      add("checkin of " + c.user_id, "latitude outside [-90, 90]");
    if (c.lon < -180.0 || c.lon > 180.0)
      add("checkin of " + c.user_id, "longitude outside [-180, 180]");
  }

  auto bb_index = inst.billboard_index();
  std::unordered_set<std::string> slot_ids;
  std::unordered_map<std::string, std::vector<int64_t>> starts_per_billboard;
  for (const auto& s : inst.slots) {
    if (!slot_ids.insert(s.id).second) add("slot " + s.id, "duplicate slot id");
    if (!bb_index.count(s.billboard_id))
      add("slot " + s.id, "references unknown billboard " + s.billboard_id);
    if (s.cost < 0.0) add("slot " + s.id, "cost must be nonnegative");
    if (s.influence_cached < 0.0)
      add("slot " + s.id, "cached influence must be nonnegative");
    if (s.duration != inst.delta_slot)
      add("slot " + s.id, "duration differs from the instance slot length");
    starts_per_billboard[s.billboard_id].push_back(s.window_start);
  }

  // Windows of one billboard must be the exact tiling of the horizon in
  // steps of delta: starts T1, T1+delta, ... up to the last full window.
  if (inst.delta_slot > 0) {
    int64_t span = inst.horizon_end - inst.horizon_start;
    int64_t windows = span / inst.delta_slot;
    for (auto& [bid, starts] : starts_per_billboard) {
      std::sort(starts.begin(), starts.end());
      bool ok = int64_t(starts.size()) == windows;
      for (size_t k = 0; ok && k < starts.size(); ++k)
        ok = starts[k] == inst.horizon_start + int64_t(k) * inst.delta_slot;
      if (!ok)
        add("billboard " + bid,
            "slot tiling broken: windows must be disjoint and tile the horizon in steps of delta");
    }
  } else {
    add("delta_slot", "slot duration must be positive");
  }

  std::unordered_set<std::string> adv_ids;
  for (const auto& a : inst.advertisers) {
    if (!adv_ids.insert(a.id).second) add("advertiser " + a.id, "duplicate advertiser id");
    if (a.demand < 0.0) add("advertiser " + a.id, "demand must be nonnegative");
    if (a.budget < 0.0) add("advertiser " + a.id, "budget must be nonnegative");
    if (a.unit_value < 0.0) add("advertiser " + a.id, "unit_value must be nonnegative");
  }

  return out;
}

std::vector<Violation> validate_allocation(const Instance& inst, const Allocation& alloc) {
  std::vector<Violation> out;
  const size_t m = inst.slots.size();

  if (alloc.bundles.size() != inst.advertisers.size()) {
    out.push_back({"allocation",
                   "bundle count differs from advertiser count"});
    return out;
  }

  std::vector<int> owner(m, -1);
  for (size_t i = 0; i < alloc.bundles.size(); ++i) {
    for (uint32_t s : alloc.bundles[i]) {
      if (s >= m) {
        out.push_back({"bundle of " + inst.advertisers[i].id,
                       "unknown slot id (index " + std::to_string(s) + ")"});
        continue;
      }
      if (owner[s] >= 0) {
        out.push_back({"slot " + inst.slots[s].id,
                       "assigned to both " + inst.advertisers[owner[s]].id + " and " +
                           inst.advertisers[i].id + " (bundles must be disjoint)"});
      } else {
        owner[s] = int(i);
      }
    }
  }
  for (size_t s = 0; s < m; ++s) {
    if (owner[s] < 0)
      out.push_back({"slot " + inst.slots[s].id,
                     "not assigned to any advertiser (allocation must cover all slots)"});
  }
  return out;
}

// --- CSV loading / saving ---

namespace {

double parse_double_cell(const std::string& s) {
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters");
  return v;
}

int64_t parse_i64_cell(const std::string& s) {
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters");
  return v;
}

}  // namespace

Loaded<Checkin> load_checkins(const std::string& path) {
  auto table = csv::read_file(path);
  csv::require_header(table, {"user_id", "lat", "lon", "timestamp"}, path);
  Loaded<Checkin> out;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() < 4) {
      out.errors.push_back({table.lines[r], "expected 4 columns"});
      continue;
    }
    try {
      Checkin c;
      c.user_id = row[0];
      c.lat = parse_double_cell(row[1]);
      c.lon = parse_double_cell(row[2]);
      c.timestamp = parse_i64_cell(row[3]);
      if (c.user_id.empty()) throw std::invalid_argument("empty user_id");
      if (c.lat < -90.0 || c.lat > 90.0) throw std::invalid_argument("latitude out of range");
      if (c.lon < -180.0 || c.lon > 180.0) throw std::invalid_argument("longitude out of range");
      out.records.push_back(std::move(c));
    } catch (const std::exception& e) {
      out.errors.push_back({table.lines[r], e.what()});
    }
  }
  return out;
}

Loaded<Billboard> load_billboards(const std::string& path) {
  auto table = csv::read_file(path);
  csv::require_header(table, {"billboard_id", "lat", "lon", "panel_size", "base_cost"}, path);
  Loaded<Billboard> out;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() < 5) {
      out.errors.push_back({table.lines[r], "expected 5 columns"});
      continue;
    }
    try {
      Billboard b;
      b.id = row[0];
      b.lat = parse_double_cell(row[1]);
      b.lon = parse_double_cell(row[2]);
      b.panel_size = parse_double_cell(row[3]);
      b.base_cost = parse_double_cell(row[4]);
      if (b.id.empty()) throw std::invalid_argument("empty billboard_id");
      if (b.lat < -90.0 || b.lat > 90.0) throw std::invalid_argument("latitude out of range");
      if (b.lon < -180.0 || b.lon > 180.0) throw std::invalid_argument("longitude out of range");
      if (!(b.panel_size > 0.0)) throw std::invalid_argument("panel_size must be positive");
      if (b.base_cost < 0.0) throw std::invalid_argument("base_cost must be nonnegative");
      out.records.push_back(std::move(b));
    } catch (const std::exception& e) {
      out.errors.push_back({table.lines[r], e.what()});
    }
  }
  return out;
}

Loaded<Advertiser> load_advertisers(const std::string& path) {
  auto table = csv::read_file(path);
  csv::require_header(table, {"advertiser_id", "demand", "budget"}, path);
  bool has_unit_value = table.header.size() > 3 && table.header[3] == "unit_value";
  Loaded<Advertiser> out;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() < 3) {
      out.errors.push_back({table.lines[r], "expected at least 3 columns"});
      continue;
    }
    try {
      Advertiser a;
      a.id = row[0];
      a.demand = parse_double_cell(row[1]);
      a.budget = parse_double_cell(row[2]);
      if (a.id.empty()) throw std::invalid_argument("empty advertiser_id");
      if (a.demand < 0.0) throw std::invalid_argument("demand must be nonnegative");
      if (a.budget < 0.0) throw std::invalid_argument("budget must be nonnegative");
      if (has_unit_value && row.size() > 3 && !row[3].empty()) {
        a.unit_value = parse_double_cell(row[3]);
        if (a.unit_value < 0.0) throw std::invalid_argument("unit_value must be nonnegative");
      } else {
        a.unit_value = default_unit_value(a.demand, a.budget);
      }
      out.records.push_back(std::move(a));
    } catch (const std::exception& e) {
      out.errors.push_back({table.lines[r], e.what()});
    }
  }
  return out;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Error::Kind::io, "cannot write file: " + path);
  return out;
}

}  // namespace

void save_checkins(const std::vector<Checkin>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "user_id,lat,lon,timestamp\n";
  for (const auto& c : rows)
    out << c.user_id << ',' << csv::fmt_double(c.lat) << ',' << csv::fmt_double(c.lon)
        << ',' << c.timestamp << '\n';
}

void save_billboards(const std::vector<Billboard>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "billboard_id,lat,lon,panel_size,base_cost\n";
  for (const auto& b : rows)
    out << b.id << ',' << csv::fmt_double(b.lat) << ',' << csv::fmt_double(b.lon) << ','
        << csv::fmt_double(b.panel_size) << ',' << csv::fmt_double(b.base_cost) << '\n';
}

void save_advertisers(const std::vector<Advertiser>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "advertiser_id,demand,budget,unit_value\n";
  for (const auto& a : rows)
    out << a.id << ',' << csv::fmt_double(a.demand) << ',' << csv::fmt_double(a.budget)
        << ',' << csv::fmt_double(a.unit_value) << '\n';
}

void save_allocation_csv(const Instance& inst, const Allocation& alloc, const std::string& path) {
  auto out = open_out(path);
  out << "slot_id,advertiser_id,phase\n";
  std::vector<int> owner(inst.slots.size(), -1);
  for (size_t i = 0; i < alloc.bundles.size(); ++i)
    for (uint32_t s : alloc.bundles[i])
      if (s < owner.size()) owner[s] = int(i);
  for (size_t s = 0; s < inst.slots.size(); ++s) {
    out << inst.slots[s].id << ',';
    out << (owner[s] >= 0 ? inst.advertisers[owner[s]].id : std::string());
    out << ',' << (s < alloc.slot_phase.size() ? phase_name(alloc.slot_phase[s]) : "") << '\n';
  }
}

Allocation load_allocation_csv(const Instance& inst, const std::string& path) {
  auto table = csv::read_file(path);
  csv::require_header(table, {"slot_id", "advertiser_id", "phase"}, path);
  auto slot_idx = inst.slot_index();
  auto adv_idx = inst.advertiser_index();
  Allocation alloc;
  alloc.bundles.assign(inst.advertisers.size(), {});
  alloc.slot_phase.assign(inst.slots.size(), Phase::baseline);
  alloc.algorithm = "file";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() < 3) fail(Error::Kind::io, path + ": expected 3 columns");
    auto sit = slot_idx.find(row[0]);
    if (sit == slot_idx.end())
      fail(Error::Kind::invalid_argument, path + ": unknown slot id " + row[0]);
    if (row[1].empty()) continue;  // unassigned row
    auto ait = adv_idx.find(row[1]);
    if (ait == adv_idx.end())
      fail(Error::Kind::invalid_argument, path + ": unknown advertiser id " + row[1]);
    alloc.bundles[ait->second].push_back(sit->second);
    if (auto p = phase_from_name(row[2])) alloc.slot_phase[sit->second] = *p;
  }
  return alloc;
}

void save_instance(const Instance& inst, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  save_billboards(inst.billboards, dir + "/billboards.csv");
  save_checkins(inst.checkins, dir + "/checkins.csv");
  save_advertisers(inst.advertisers, dir + "/advertisers.csv");

  auto out = open_out(dir + "/slots.csv");
  out << "slot_id,billboard_id,window_start,duration,cost,influence_cached\n";
  for (const auto& s : inst.slots)
    out << s.id << ',' << s.billboard_id << ',' << s.window_start << ',' << s.duration
        << ',' << csv::fmt_double(s.cost) << ',' << csv::fmt_double(s.influence_cached)
        << '\n';

  auto cfg = open_out(dir + "/instance.cfg");
  cfg << "theta=" << csv::fmt_double(inst.theta) << '\n'
      << "gamma=" << csv::fmt_double(inst.gamma) << '\n'
      << "horizon_start=" << inst.horizon_start << '\n'
      << "horizon_end=" << inst.horizon_end << '\n'
      << "delta_slot=" << inst.delta_slot << '\n';
}

Instance load_instance(const std::string& dir) {
  Instance inst;
  auto billboards = load_billboards(dir + "/billboards.csv");
  auto checkins = load_checkins(dir + "/checkins.csv");
  auto advertisers = load_advertisers(dir + "/advertisers.csv");
  if (!billboards.errors.empty() || !checkins.errors.empty() || !advertisers.errors.empty())
    fail(Error::Kind::io, "instance directory contains malformed rows: " + dir);
  inst.billboards = std::move(billboards.records);
  inst.checkins = std::move(checkins.records);
  inst.advertisers = std::move(advertisers.records);

  auto table = csv::read_file(dir + "/slots.csv");
  csv::require_header(table,
                      {"slot_id", "billboard_id", "window_start", "duration", "cost",
                       "influence_cached"},
                      dir + "/slots.csv");
  for (const auto& row : table.rows) {
    if (row.size() < 6) fail(Error::Kind::io, dir + "/slots.csv: expected 6 columns");
    BillboardSlot s;
    s.id = row[0];
    s.billboard_id = row[1];
    s.window_start = parse_i64_cell(row[2]);
    s.duration = parse_i64_cell(row[3]);
    s.cost = parse_double_cell(row[4]);
    s.influence_cached = parse_double_cell(row[5]);
    inst.slots.push_back(std::move(s));
  }

  auto cfg = parse_kv_file(dir + "/instance.cfg");
  auto need = [&](const char* key) -> const std::string& {
    auto it = cfg.find(key);
    if (it == cfg.end()) fail(Error::Kind::config, std::string("instance.cfg misses ") + key);
    return it->second;
  };
  inst.theta = to_double(need("theta"), "theta");
  inst.gamma = to_double(need("gamma"), "gamma");
  inst.horizon_start = to_i64(need("horizon_start"), "horizon_start");
  inst.horizon_end = to_i64(need("horizon_end"), "horizon_end");
  inst.delta_slot = to_i64(need("delta_slot"), "delta_slot");
  return inst;
}

}  // namespace fairslot
