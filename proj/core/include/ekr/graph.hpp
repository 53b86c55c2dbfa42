#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ekr/errors.hpp"

namespace ekr {

inline constexpr std::size_t kMaxGraphVertices = 20'000;

// Simple undirected graph on {0, ..., n-1} with a bit-packed adjacency
// matrix (one row of 64-bit words per vertex) for fast set intersection.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;

  const std::uint64_t* row(std::size_t v) const { return bits_.data() + v * words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// DIMACS ("p edge n m" header, "e u v" lines, 1-based endpoints).
void write_dimacs(std::ostream& out, const UndirectedGraph& g);

}  // namespace ekr
