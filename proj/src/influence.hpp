#pragma once

#include <span>
#include <vector>

#include "model.hpp"

namespace fairslot {

struct ExposureEntry {
  uint32_t trajectory = 0;
  double probability = 0.0;  // in (0, 1]
};

/// Sparse slot x trajectory structure holding the evaluated exposure
/// probabilities: an entry exists iff some check-in of the trajectory lies
/// within theta meters of the slot's billboard during the slot window.
struct ExposureMatrix {
  std::vector<std::string> trajectory_ids;               // user ids, first-seen order
  std::vector<std::vector<ExposureEntry>> slot_entries;  // per slot, ascending trajectory
  std::vector<double> singleton;                         // I({s}) per slot

  size_t trajectory_count() const { return trajectory_ids.size(); }
  size_t slot_count() const { return slot_entries.size(); }
};

// Pr(b, .) = panel size over the largest panel size in the instance.
double slot_probability(const Billboard& billboard, double max_panel_size);

ExposureMatrix build_exposure(const Instance& inst);

/// Influence of a slot set: expected number of trajectories reached,
/// sum over trajectories of 1 - prod(1 - p). `scale` is the per-advertiser
/// valuation hook; probabilities are scaled and capped at 1.
double influence(const ExposureMatrix& matrix, std::span<const uint32_t> slots,
                 double scale = 1.0);

/// Incremental evaluation of the influence function for a growing slot set.
/// Keeps the per-trajectory survival product q_j = prod(1 - p), so a marginal
/// gain touches only the trajectories exposed to the candidate slot.
class InfluenceState {
 public:
  explicit InfluenceState(const ExposureMatrix& matrix, double scale = 1.0);

  double total() const { return total_; }
  const std::vector<uint32_t>& members() const { return members_; }
  bool contains(uint32_t slot) const;

  double marginal_gain(uint32_t slot) const;
  void add_slot(uint32_t slot);

 private:
  const ExposureMatrix* matrix_;
  double scale_;
  std::vector<double> survival_;
  std::vector<uint32_t> members_;
  std::vector<bool> member_mask_;
  double total_ = 0.0;
  double carry_ = 0.0;  // compensation term for the running sum
};

// Optional exposure cache: slot_id,user_index,probability. Only valid for the
// instance it was built from.
void save_exposure_csv(const ExposureMatrix& matrix, const Instance& inst,
                       const std::string& path);
ExposureMatrix load_exposure_csv(const Instance& inst, const std::string& path);

}  // namespace fairslot
