#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace fairslot {

struct Billboard {
  std::string id;
  double lat = 0.0;
  double lon = 0.0;
  double panel_size = 0.0;
  double base_cost = 0.0;

  bool operator==(const Billboard&) const = default;
};

struct Checkin {
  std::string user_id;  // the trajectory a check-in belongs to
  double lat = 0.0;
  double lon = 0.0;
  int64_t timestamp = 0;  // seconds since epoch, UTC

  bool operator==(const Checkin&) const = default;
};

struct BillboardSlot {
  std::string id;
  std::string billboard_id;
  int64_t window_start = 0;
  int64_t duration = 0;          // slot length in seconds
  double influence_cached = 0.0; // singleton influence, filled by the exposure build
  double cost = 0.0;

  int64_t window_end() const { return window_start + duration; }

  bool operator==(const BillboardSlot&) const = default;
};

struct Advertiser {
  std::string id;
  double demand = 0.0;          // influence units asked for
  double budget = 0.0;          // money offered
  double unit_value = 0.0;      // money per unit influence
  double influence_scale = 1.0; // per-advertiser valuation hook; 1.0 = shared function

  bool operator==(const Advertiser&) const = default;
};

// Default monetary valuation per unit influence: budget per unit of demanded
// influence. Advertisers demanding nothing value influence at zero unless a
// value is given explicitly.
inline double default_unit_value(double demand, double budget) {
  return demand > 0.0 ? budget / demand : 0.0;
}

struct Instance {
  std::vector<Billboard> billboards;
  std::vector<BillboardSlot> slots;
  std::vector<Checkin> checkins;
  std::vector<Advertiser> advertisers;
  double theta = 100.0;        // exposure radius in meters
  double gamma = 0.5;          // penalty ratio in [0, 1]
  int64_t horizon_start = 0;   // T1
  int64_t horizon_end = 0;     // T2
  int64_t delta_slot = 3600;   // slot duration used for tiling

  bool operator==(const Instance&) const = default;

  std::unordered_map<std::string, uint32_t> billboard_index() const;
  std::unordered_map<std::string, uint32_t> slot_index() const;
  std::unordered_map<std::string, uint32_t> advertiser_index() const;
  double max_panel_size() const;
};

enum class Phase : uint8_t { singleton, round_robin, baseline, leftover };

const char* phase_name(Phase p);
std::optional<Phase> phase_from_name(const std::string& name);

struct Allocation {
  // bundles[i] holds the slot indices assigned to advertiser i, in the order
  // they were picked.
  std::vector<std::vector<uint32_t>> bundles;
  std::vector<Phase> slot_phase;  // indexed by slot
  std::string algorithm;
  uint64_t seed = 0;
};

// Bundle membership is a set; pick order is provenance, not identity.
bool structurally_equal(const Allocation& a, const Allocation& b);

struct Violation {
  std::string entity;
  std::string rule;
};

std::string to_string(const Violation& v);

std::vector<Violation> validate_instance(const Instance& inst);
std::vector<Violation> validate_allocation(const Instance& inst, const Allocation& alloc);

// --- canonical on-disk formats ---

struct RowError {
  size_t line = 0;
  std::string reason;
};

template <typename T>
struct Loaded {
  std::vector<T> records;
  std::vector<RowError> errors;
};

Loaded<Checkin> load_checkins(const std::string& path);
Loaded<Billboard> load_billboards(const std::string& path);
Loaded<Advertiser> load_advertisers(const std::string& path);

void save_checkins(const std::vector<Checkin>& rows, const std::string& path);
void save_billboards(const std::vector<Billboard>& rows, const std::string& path);
void save_advertisers(const std::vector<Advertiser>& rows, const std::string& path);

void save_allocation_csv(const Instance& inst, const Allocation& alloc, const std::string& path);
Allocation load_allocation_csv(const Instance& inst, const std::string& path);

// An instance directory holds billboards.csv, checkins.csv, advertisers.csv,
// slots.csv and instance.cfg.
void save_instance(const Instance& inst, const std::string& dir);
Instance load_instance(const std::string& dir);

}  // namespace fairslot
