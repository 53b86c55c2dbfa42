#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ekr/perm.hpp"

namespace ekr {

inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;

// A permutation group given by its complete element list. Elements are stored
// in discovery order of a breadth-first closure from the identity with the
// generators applied in input order, so elements[0] is the identity and the
// ordering is deterministic for a fixed generator sequence.
class PermGroup {
 public:
  // Breadth-first closure of `generators`; throws CapExceeded("order cap
  // exceeded") if more than `cap` elements appear, InvalidInput on degree
  // mismatches. Degree-1 and empty generator lists give the trivial group.
  static PermGroup generate(std::size_t degree, std::vector<Perm> generators,
                            std::uint64_t cap = kDefaultOrderCap,
                            std::string name = {});

  // Rebuilds a group from a full element set: picks a small generating subset
  // greedily and re-runs the closure so the element ordering invariant holds.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements,
                                 std::string name = {});

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return elements_.size(); }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  bool contains(const Perm& p) const;
  // Index into elements(), or throws InvalidInput if absent.
  std::uint32_t index_of(const Perm& p) const;
  std::optional<std::uint32_t> find(const Perm& p) const;

 private:
  std::size_t degree_ = 1;
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
};

// ---- Orbit and transitivity structure ----

// Orbits as sorted point lists, ordered by smallest point.
std::vector<std::vector<Point>> orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);
// Transitive and the point stabilizer of 0 is transitive on the rest.
bool is_2_transitive(const PermGroup& g);

// Full point stabilizer of v as a subgroup (complete element filter).
PermGroup stabilizer(const PermGroup& g, Point v);
// max_v |G_v|.
std::uint64_t max_stabilizer_order(const PermGroup& g);

// Indices of fixed-point-free elements.
std::vector<std::uint32_t> derangement_indices(const PermGroup& g);

// ---- Blocks of imprimitivity ----

struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // sorted, ordered by smallest point
  std::vector<std::uint32_t> block_of;     // point -> block index
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

// Finest G-invariant partition with u and v in a common block (Atkinson's
// refinement). Returns nullopt when that partition is trivial (one block).
// Precondition: g transitive, u != v.
std::optional<BlockSystem> minimal_block_system(const PermGroup& g, Point u, Point v);

// All minimal nontrivial systems found from the pairs (0, v), deduplicated.
// For degree 2p this finds every nontrivial system (block sizes 2 and p).
std::vector<BlockSystem> all_block_systems(const PermGroup& g);

// Transitive with no nontrivial block system (degree 1 counts as primitive).
bool is_primitive(const PermGroup& g);

struct QuotientAction {
  PermGroup quotient;                   // induced group on block indices
  PermGroup kernel;                     // elements acting trivially on blocks
  std::vector<std::uint32_t> projection;  // element index -> quotient index
};

// Induced action on the blocks of `bs`; throws InvalidInput if some element
// fails to permute the blocks.
QuotientAction quotient_action(const PermGroup& g, const BlockSystem& bs);

// ---- Element-structure queries ----

// N_G(<g>) for the cyclic subgroup generated by elements()[i].
PermGroup normalizer_of_cyclic(const PermGroup& g, std::uint32_t element_index);

struct SemiregularElement {
  std::uint32_t index;       // element index
  std::size_t cycle_length;  // common cycle length (> 1)
  std::size_t orbit_count;   // degree / cycle_length
};

// All non-identity semiregular elements, in element order.
std::vector<SemiregularElement> find_semiregular_elements(const PermGroup& g);

// True iff some element is a single n-cycle (n = degree), i.e. <g> is regular.
bool has_cyclic_regular_subgroup(const PermGroup& g);

// Every element even.
bool is_subgroup_alternating(const PermGroup& g);

}  // namespace ekr
