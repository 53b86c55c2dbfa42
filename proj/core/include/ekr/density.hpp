#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ekr/clique.hpp"
#include "ekr/graph.hpp"
#include "ekr/group.hpp"

namespace ekr {

// Reduced nonnegative fraction.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};
Rational make_rational(std::uint64_t num, std::uint64_t den);
std::string to_string(const Rational& r);

// Two permutations intersect when they agree at some point.
bool permutations_intersect(const Perm& a, const Perm& b);

// Cayley graph of G whose connection set is the derangements: vertices are
// element indices, u ~ v iff the two permutations agree nowhere. Independent
// sets are exactly the intersecting families.
UndirectedGraph derangement_graph(const PermGroup& g);

struct LabeledGraph {
  UndirectedGraph graph;
  std::vector<std::uint32_t> labels;  // vertex -> element index, ascending
};

// Agreement graph restricted to the elements with a fixed point: u ~ v iff
// the permutations agree somewhere. Every maximum intersecting family
// translates to one containing the identity, all of whose members then have
// fixed points, and the identity vertex is adjacent to every other vertex
// here — so maximum cliques of this graph are exactly the maximum
// intersecting families that contain the identity.
LabeledGraph intersection_graph(const PermGroup& g);

bool is_intersecting_family(const PermGroup& g,
                            std::span<const std::uint32_t> element_indices);

// True when all members send some common point u to a common image w and the
// family size equals |G_u|, i.e. the family is exactly {f in G : f(u) = w}.
bool is_canonical_family(const PermGroup& g,
                         std::span<const std::uint32_t> element_indices);

// Largest common cycle length among semiregular elements (1 when none). The
// powers of such an element pairwise agree nowhere, so the clique-coclique
// bound gives alpha <= |G| / value.
std::size_t semiregular_clique_bound(const PermGroup& g);

// Derangement-graph clique assembled from cosets of a maximal-cycle-length
// semiregular element inside the normalizer of the cyclic group it
// generates: a coset of all-derangements is compatible with another when the
// quotient coset consists of derangements too, and a small exact clique
// search over the coset compatibility graph picks the best union. Returns
// sorted element indices, verified pairwise; empty when no semiregular
// element exists.
std::vector<std::uint32_t> normalizer_coset_clique(const PermGroup& g);

struct DensityOptions {
  bool force_exact = false;  // skip shortcuts and bound closure
  bool compute_strict = false;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  unsigned workers = 1;
};

struct DensityResult {
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::uint64_t stabilizer_order = 0;  // max over points
  std::uint64_t alpha = 0;             // maximum intersecting family size
  Rational rho;                        // alpha / stabilizer_order
  bool is_ekr = false;                 // alpha == stabilizer_order
  std::optional<bool> strict_ekr;      // set when decided
  std::vector<std::uint32_t> family;   // element indices of a maximum family
  std::vector<std::uint32_t> bound_clique;  // derangement clique that closed
                                            // the gap (empty otherwise)
  std::vector<std::string> method;  // pipeline trace
  std::uint64_t nodes = 0;          // branch-and-bound nodes
};

// Exact intersection density rho(G) = alpha / max_v |G_v|, where alpha is the
// maximum size of a set of pairwise-intersecting elements. Tries cheap exact
// routes first (two-transitive shortcut, clique bounds meeting the stabilizer
// bound) and falls back to an exact clique search; force_exact jumps straight
// to the search. compute_strict additionally decides whether every maximum
// family is canonical. Throws CapExceeded/BudgetExceeded on resource limits.
DensityResult intersection_density(const PermGroup& g,
                                   const DensityOptions& options = {});

// All maximum intersecting families that contain the identity, as sorted
// element-index sets in lexicographic order. `alpha` must be the exact
// maximum family size (throws InvalidInput otherwise). Every maximum family
// is a right translate F * h of exactly these.
std::vector<std::vector<std::uint32_t>> maximum_families(
    const PermGroup& g, std::uint64_t alpha, const DensityOptions& options = {});

}  // namespace ekr
