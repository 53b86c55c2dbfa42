#include "ekr/graph.hpp"

#include <bit>
#include <ostream>
#include <string>

namespace ekr {

UndirectedGraph::UndirectedGraph(std::size_t n) : n_(n), words_((n + 63) / 64) {
  if (n == 0) throw InvalidInput("graph needs at least one vertex");
  if (n > kMaxGraphVertices)
    throw CapExceeded("graph size cap exceeded: " + std::to_string(n) + " vertices");
  bits_.assign(n_ * words_, 0);
}

void UndirectedGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("self-loops are not allowed");
  bits_[u * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[v * words_ + (u >> 6)] |= 1ull << (u & 63);
}

std::size_t UndirectedGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

void write_dimacs(std::ostream& out, const UndirectedGraph& g) {
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) out << "e " << u + 1 << " " << v + 1 << "\n";
}

}  // namespace ekr
