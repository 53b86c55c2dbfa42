#pragma once

#include <cstdint>

#include "ekr/density.hpp"
#include "ekr/group.hpp"

namespace ekr {

// Resource limits and search behavior shared by the tools. Precedence is
// command-line flags over environment variables over these defaults.
struct RunConfig {
  std::uint64_t element_cap = kDefaultOrderCap;        // EKR_CAP
  std::uint64_t node_budget = kDefaultNodeBudget;      // EKR_BUDGET
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  unsigned workers = 1;                                // EKR_WORKERS
  bool force_exact = false;
  bool deterministic = false;  // pins the search to one worker

  DensityOptions density_options() const;
};

// Defaults overridden by EKR_CAP, EKR_BUDGET and EKR_WORKERS where set;
// throws InvalidInput on values that do not parse as positive integers.
RunConfig config_from_env();

}  // namespace ekr
