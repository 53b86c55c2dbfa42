#pragma once

#include <span>

#include "ekr/group.hpp"

namespace ekr {

bool is_prime(std::uint64_t n);

// ---- Elementary families ----

PermGroup cyclic_group(std::size_t n);
// Degree n, order 2n; requires n >= 3.
PermGroup dihedral_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);

// Induced action on unordered pairs {i, j}, listed in lexicographic order
// ({0,1}, {0,2}, ..., {n-2,n-1}); requires degree >= 3.
PermGroup action_on_2subsets(const PermGroup& g,
                             std::uint64_t cap = kDefaultOrderCap);
// Lexicographic rank of {i, j} among the 2-subsets of {0..n-1}.
std::size_t pair_rank(std::size_t i, std::size_t j, std::size_t n);

// Imprimitive wreath product: `top.degree()` blocks of size `bottom.degree()`,
// block b covering points [b*bottom.degree(), (b+1)*bottom.degree());
// generated by the bottom group on block 0 plus the top action on blocks.
PermGroup wreath_product(const PermGroup& bottom, const PermGroup& top,
                         std::uint64_t cap = kDefaultOrderCap);

// Sylow p-subgroup of the symmetric group on p^k points: the k-fold iterated
// wreath product of a p-cycle. Order p^((p^k - 1)/(p - 1)).
PermGroup iterated_wreath_sylow(std::size_t p, std::size_t k,
                                std::uint64_t cap = kDefaultOrderCap);

// ---- Binary cyclic codes (length p <= 63, words as bitmasks) ----

struct CyclicCode {
  std::size_t length = 0;
  std::vector<std::uint64_t> basis;  // row-reduced, ordered by pivot
  std::size_t dimension() const { return basis.size(); }
};

// GF(2) span of all cyclic shifts of the seed words.
CyclicCode span_of_cyclic_shifts(std::size_t length,
                                 std::span<const std::uint64_t> seeds);
bool code_contains(const CyclicCode& code, std::uint64_t word);
// Closed under the index map i -> m*i (mod length)?
bool code_invariant_under_multiplier(const CyclicCode& code, std::uint64_t m);

// Seed 0b11, whose shifts span the full even-weight code.
inline constexpr std::uint64_t kAdjacentPairSeed = 0b11;

// ---- Imprimitive degree-2p families ----
//
// Points are p pairs {i, p+i} for i in Z_p. A codeword c of a shift-closed
// even-weight binary code K of length p acts as the involution swapping
// i <-> p+i exactly where c_i = 1, and h is the simultaneous p-cycle
// i -> i+1, p+i -> p+i+1. The group generated is K x| <h>, of order |K| * p.
PermGroup thm16i_group(std::size_t p, std::span<const std::uint64_t> seeds);

// thm16i_group extended by the multiplier i -> m*i (mod p) on both halves,
// where m is the smallest integer > 1 of multiplicative order d mod p.
// Requires d | p-1 and K invariant under the multiplier (d = 1 adds nothing).
// Order |K| * p * d.
PermGroup frobenius_lift(std::size_t p, std::size_t d,
                         std::span<const std::uint64_t> seeds);

}  // namespace ekr
