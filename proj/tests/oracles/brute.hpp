#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here favors transparent correctness over speed and shares no search code
// with the library: plain include/exclude branching and subset dynamic
// programming instead of coloring bounds and degeneracy orders.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ekr/graph.hpp"
#include "ekr/group.hpp"

namespace brute {

// Recomputed from the image tables, independent of ekr::permutations_intersect.
inline bool agree_somewhere(const ekr::Perm& a, const ekr::Perm& b) {
  for (std::size_t v = 0; v < a.degree(); ++v)
    if (a(static_cast<ekr::Point>(v)) == b(static_cast<ekr::Point>(v))) return true;
  return false;
}

namespace detail {

class FamilySearch {
 public:
  explicit FamilySearch(const ekr::PermGroup& g) : g_(g) {}

  std::size_t max_size() {
    std::vector<std::uint32_t> cand(g_.order());
    std::iota(cand.begin(), cand.end(), 0u);
    grow(0, cand);
    return best_;
  }

 private:
  // Include/exclude on the first candidate with the trivial size bound.
  void grow(std::size_t have, const std::vector<std::uint32_t>& cand) {
    if (have > best_) best_ = have;
    if (cand.empty() || have + cand.size() <= best_) return;
    std::vector<std::uint32_t> with;
    for (std::size_t i = 1; i < cand.size(); ++i)
      if (agree_somewhere(g_.element(cand[0]), g_.element(cand[i])))
        with.push_back(cand[i]);
    grow(have + 1, with);
    std::vector<std::uint32_t> without(cand.begin() + 1, cand.end());
    grow(have, without);
  }

  const ekr::PermGroup& g_;
  std::size_t best_ = 0;
};

}  // namespace detail

// Largest set of pairwise-agreeing group elements.
inline std::size_t max_intersecting_family_size(const ekr::PermGroup& g) {
  return detail::FamilySearch(g).max_size();
}

// All size-k families of pairwise-agreeing elements that contain the
// identity (element index 0), as sorted index sets in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> families_with_identity(
    const ekr::PermGroup& g, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cand;
  for (std::uint32_t i = 1; i < g.order(); ++i)
    if (agree_somewhere(g.element(0), g.element(i))) cand.push_back(i);

  struct Rec {
    const ekr::PermGroup& g;
    std::size_t k;
    std::vector<std::vector<std::uint32_t>>& out;
    void run(std::vector<std::uint32_t>& cur,
             const std::vector<std::uint32_t>& cand) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      if (cur.size() + cand.size() < k) return;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        std::vector<std::uint32_t> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
          if (agree_somewhere(g.element(cand[i]), g.element(cand[j])))
            next.push_back(cand[j]);
        cur.push_back(cand[i]);
        run(cur, next);
        cur.pop_back();
      }
    }
  } rec{g, k, out};

  std::vector<std::uint32_t> cur{0};
  if (k > 0) rec.run(cur, cand);
  return out;
}

// Exact maximum clique size by dynamic programming over vertex subsets.
// Requires at most 20 vertices.
inline std::size_t max_clique_size_subsets(const ekr::UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= 1u << v;

  std::vector<char> ok(std::size_t{1} << n, 0);
  ok[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const std::uint32_t v = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    ok[mask] = ok[rest] && (adj[v] & rest) == rest;
    if (ok[mask]) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

// All cliques of size exactly k, as sorted vertex lists in lexicographic
// order, by plain ascending recursion.
inline std::vector<std::vector<std::uint32_t>> all_cliques_of_size(
    const ekr::UndirectedGraph& g, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  struct Rec {
    const ekr::UndirectedGraph& g;
    std::size_t k;
    std::vector<std::vector<std::uint32_t>>& out;
    void run(std::vector<std::uint32_t>& cur, std::uint32_t from) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::uint32_t v = from; v < g.vertex_count(); ++v) {
        bool fits = true;
        for (std::uint32_t u : cur)
          if (!g.adjacent(u, v)) {
            fits = false;
            break;
          }
        if (!fits) continue;
        cur.push_back(v);
        run(cur, v + 1);
        cur.pop_back();
      }
    }
  } rec{g, k, out};
  std::vector<std::uint32_t> cur;
  if (k > 0 && g.vertex_count() > 0) rec.run(cur, 0);
  return out;
}

// Deterministic Erdos-Renyi-style graph; edge chance is percent/100, drawn
// from a fixed-seed mt19937 so every platform sees the same graph.
inline ekr::UndirectedGraph random_graph(std::size_t n, unsigned percent,
                                         std::uint32_t seed) {
  std::mt19937 rng(seed);
  ekr::UndirectedGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % 100 < percent) g.add_edge(u, v);
  return g;
}

}  // namespace brute
