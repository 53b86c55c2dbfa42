#include "ekr/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ekr {

PermGroup PermGroup::generate(std::size_t degree, std::vector<Perm> generators,
                              std::uint64_t cap, std::string name) {
  if (degree == 0) throw InvalidInput("degree must be positive");
  for (const Perm& p : generators)
    if (p.degree() != degree) throw InvalidInput("degree mismatch");

  PermGroup g;
  g.degree_ = degree;
  g.name_ = std::move(name);
  g.generators_ = std::move(generators);

  g.elements_.push_back(Perm::identity(degree));
  g.index_.emplace(g.elements_[0], 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    // elements_ grows while iterating; indexing keeps references stable enough
    for (const Perm& gen : g.generators_) {
      Perm next = g.elements_[head].compose(gen);
      if (g.index_.contains(next)) continue;
      if (g.elements_.size() >= cap) throw CapExceeded("order cap exceeded");
      g.index_.emplace(next, static_cast<std::uint32_t>(g.elements_.size()));
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements,
                                   std::string name) {
  if (elements.empty()) throw InvalidInput("element set is empty");
  std::sort(elements.begin(), elements.end());
  // Greedy generating subset: extend the closure until it covers everything.
  std::vector<Perm> gens;
  PermGroup closure = generate(degree, {}, kDefaultOrderCap);
  try {
    for (const Perm& e : elements) {
      if (closure.contains(e)) continue;
      gens.push_back(e);
      closure = generate(degree, gens, elements.size() + 1);
    }
  } catch (const CapExceeded&) {
    throw InvalidInput("element set is not closed under composition");
  }
  if (closure.order() != elements.size())
    throw InvalidInput("element set is not closed under composition");
  closure.name_ = std::move(name);
  return closure;
}

bool PermGroup::contains(const Perm& p) const { return index_.contains(p); }

std::uint32_t PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InvalidInput("permutation is not a group element");
  return it->second;
}

std::optional<std::uint32_t> PermGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{static_cast<Point>(start)};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const Perm& gen : g.generators()) {
        Point w = gen(orbit[head]);
        if (!seen[w]) {
          seen[w] = true;
          orbit.push_back(w);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

bool is_2_transitive(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  if (g.degree() <= 2) return true;
  // Orbit of point 1 under the stabilizer of 0 must cover {1, ..., n-1}.
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orbit;
  seen[1] = true;
  orbit.push_back(1);
  std::vector<const Perm*> stab_gens;  // full stabilizer elements as generators
  for (const Perm& e : g.elements())
    if (e(0) == 0) stab_gens.push_back(&e);
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const Perm* e : stab_gens) {
      Point w = (*e)(orbit[head]);
      if (!seen[w]) {
        seen[w] = true;
        orbit.push_back(w);
      }
    }
  return orbit.size() == g.degree() - 1;
}

PermGroup stabilizer(const PermGroup& g, Point v) {
  if (v >= g.degree()) throw InvalidInput("stabilized point exceeds degree");
  std::vector<Perm> fixed;
  for (const Perm& e : g.elements())
    if (e(v) == v) fixed.push_back(e);
  return PermGroup::from_elements(g.degree(), std::move(fixed),
                                  g.name().empty() ? "" : g.name() + ".stab");
}

std::uint64_t max_stabilizer_order(const PermGroup& g) {
  std::vector<std::uint64_t> count(g.degree(), 0);
  for (const Perm& e : g.elements())
    for (Point v : e.fixed_points()) ++count[v];
  return *std::max_element(count.begin(), count.end());
}

std::vector<std::uint32_t> derangement_indices(const PermGroup& g) {
  std::vector<std::uint32_t> result;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element(i).is_derangement()) result.push_back(static_cast<std::uint32_t>(i));
  return result;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

BlockSystem blocks_from_classes(UnionFind& uf, std::size_t n) {
  BlockSystem bs;
  bs.block_of.assign(n, UINT32_MAX);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint32_t root = uf.find(static_cast<std::uint32_t>(v));
    if (bs.block_of[root] == UINT32_MAX) {
      bs.block_of[root] = static_cast<std::uint32_t>(bs.blocks.size());
      bs.blocks.emplace_back();
    }
    bs.block_of[v] = bs.block_of[root];
    bs.blocks[bs.block_of[v]].push_back(static_cast<Point>(v));
  }
  return bs;
}

}  // namespace

std::optional<BlockSystem> minimal_block_system(const PermGroup& g, Point u, Point v) {
  if (!is_transitive(g)) throw InvalidInput("group not transitive");
  if (u == v || u >= g.degree() || v >= g.degree())
    throw InvalidInput("block seed points must be distinct and in range");

  UnionFind uf(g.degree());
  std::deque<std::pair<Point, Point>> queue;
  uf.unite(u, v);
  queue.emplace_back(u, v);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const Perm& gen : g.generators()) {
      Point ga = gen(a), gb = gen(b);
      if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
    }
  }
  BlockSystem bs = blocks_from_classes(uf, g.degree());
  if (bs.blocks.size() <= 1) return std::nullopt;
  // Transitivity forces equal block sizes; guard against generator bugs.
  for (const auto& b : bs.blocks)
    if (b.size() != bs.blocks.front().size())
      throw Error("internal error: unequal block sizes");
  return bs;
}

std::vector<BlockSystem> all_block_systems(const PermGroup& g) {
  if (!is_transitive(g)) throw InvalidInput("group not transitive");
  std::vector<BlockSystem> systems;
  for (Point v = 1; v < g.degree(); ++v) {
    auto bs = minimal_block_system(g, 0, v);
    if (!bs) continue;
    bool duplicate = false;
    for (const auto& known : systems)
      if (known.block_of == bs->block_of) {
        duplicate = true;
        break;
      }
    if (!duplicate) systems.push_back(std::move(*bs));
  }
  return systems;
}

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) throw InvalidInput("group not transitive");
  if (g.degree() == 1) return true;
  return all_block_systems(g).empty();
}

QuotientAction quotient_action(const PermGroup& g, const BlockSystem& bs) {
  const std::size_t nblocks = bs.blocks.size();
  auto induced = [&](const Perm& e) {
    std::vector<Point> images(nblocks);
    std::vector<bool> hit(nblocks, false);
    for (std::size_t b = 0; b < nblocks; ++b) {
      std::uint32_t target = bs.block_of[e(bs.blocks[b].front())];
      for (Point pt : bs.blocks[b])
        if (bs.block_of[e(pt)] != target)
          throw InvalidInput("partition is not invariant under the group");
      if (hit[target]) throw InvalidInput("partition is not invariant under the group");
      hit[target] = true;
      images[b] = static_cast<Point>(target);
    }
    return Perm::from_images(std::move(images));
  };

  QuotientAction qa;
  std::vector<Perm> qgens;
  qgens.reserve(g.generators().size());
  for (const Perm& gen : g.generators()) qgens.push_back(induced(gen));
  qa.quotient = PermGroup::generate(nblocks, std::move(qgens), g.order() + 1,
                                    g.name().empty() ? "" : g.name() + ".quot");

  qa.projection.resize(g.order());
  std::vector<Perm> kernel_elements;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Perm q = induced(g.element(i));
    qa.projection[i] = qa.quotient.index_of(q);
    if (qa.projection[i] == 0) kernel_elements.push_back(g.element(i));
  }
  qa.kernel = PermGroup::from_elements(g.degree(), std::move(kernel_elements),
                                       g.name().empty() ? "" : g.name() + ".ker");
  return qa;
}

PermGroup normalizer_of_cyclic(const PermGroup& g, std::uint32_t element_index) {
  if (element_index >= g.order()) throw InvalidInput("element index out of range");
  const Perm& a = g.element(element_index);
  // Element set of <a>.
  std::vector<Perm> cyc{Perm::identity(g.degree())};
  for (Perm p = a; !p.is_identity(); p = p.compose(a)) cyc.push_back(p);
  auto in_cyc = [&](const Perm& p) {
    return std::find(cyc.begin(), cyc.end(), p) != cyc.end();
  };
  std::vector<Perm> result;
  for (const Perm& h : g.elements())
    if (in_cyc(a.conjugated_by(h))) result.push_back(h);
  return PermGroup::from_elements(g.degree(), std::move(result));
}

std::vector<SemiregularElement> find_semiregular_elements(const PermGroup& g) {
  std::vector<SemiregularElement> result;
  for (std::size_t i = 1; i < g.order(); ++i) {
    const Perm& e = g.element(i);
    if (!e.is_semiregular()) continue;
    std::size_t len = e.semiregular_cycle_length();
    result.push_back({static_cast<std::uint32_t>(i), len, g.degree() / len});
  }
  return result;
}

bool has_cyclic_regular_subgroup(const PermGroup& g) {
  if (g.degree() == 1) return true;
  for (const Perm& e : g.elements())
    if (e.is_semiregular() && !e.is_identity() &&
        e.semiregular_cycle_length() == g.degree())
      return true;
  return false;
}

bool is_subgroup_alternating(const PermGroup& g) {
  for (const Perm& e : g.elements())
    if (e.sign() < 0) return false;
  return true;
}

}  // namespace ekr
