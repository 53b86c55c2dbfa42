#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ekr/graph.hpp"

namespace ekr {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultEnumerationLimit = 100'000;

struct CliqueOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  unsigned workers = 1;  // > 1 splits top-level branches; size stays exact
  // Optional known clique used as the initial lower bound (verified first).
  std::vector<std::uint32_t> seed_clique;
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::uint32_t> witness;  // sorted original vertex ids
  std::uint64_t nodes = 0;             // branch-and-bound nodes visited
};

bool is_clique(const UndirectedGraph& g, std::span<const std::uint32_t> vertices);

// Exact maximum clique: branch and bound with a greedy-coloring upper bound
// and degeneracy vertex ordering; ties break toward smaller vertex index.
// Throws BudgetExceeded("search budget exceeded") past options.node_budget.
// With workers > 1 the returned size is schedule-independent; the witness is
// deterministic in single-worker runs.
CliqueResult max_clique(const UndirectedGraph& g, const CliqueOptions& options = {});

// All cliques of size exactly k, where k must be the maximum clique size
// (throws InvalidInput otherwise). Single-worker, deterministic order.
// Throws BudgetExceeded("enumeration limit exceeded") past the limit.
std::vector<std::vector<std::uint32_t>> enumerate_maximum_cliques(
    const UndirectedGraph& g, std::size_t k, const CliqueOptions& options = {});

// Deterministic highest-degree-first greedy clique (lower bound witness).
std::vector<std::uint32_t> greedy_clique_lower_bound(const UndirectedGraph& g);

}  // namespace ekr
