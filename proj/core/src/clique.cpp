#include "ekr/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace ekr {

bool is_clique(const UndirectedGraph& g, std::span<const std::uint32_t> vertices) {
  for (std::uint32_t v : vertices)
    if (v >= g.vertex_count()) throw InvalidInput("vertex out of range");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

namespace {

using Word = std::uint64_t;

struct Bits {
  std::vector<Word> w;
  void assign(std::size_t words) { w.assign(words, 0); }
  void set(std::size_t v) { w[v >> 6] |= Word{1} << (v & 63); }
  void clear(std::size_t v) { w[v >> 6] &= ~(Word{1} << (v & 63)); }
  bool empty() const {
    for (Word x : w)
      if (x) return false;
    return true;
  }
  template <typename F>
  void for_each(F&& f) const {  // ascending order
    for (std::size_t i = 0; i < w.size(); ++i)
      for (Word x = w[i]; x; x &= x - 1)
        f((i << 6) + static_cast<std::size_t>(std::countr_zero(x)));
  }
};

struct Frame {
  Bits cand;
  std::vector<std::uint32_t> seq, color;  // candidates sorted by color
  std::vector<Bits> classes;
};

// State shared across workers. The graph is a relabeled copy: vertices appear
// in reverse degeneracy-removal order, so low indices sit in the densest core
// and the sequential coloring produces tight bounds.
struct Shared {
  const UndirectedGraph& g;
  std::size_t words;
  std::uint64_t node_budget;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> best{0};  // clique size lower bound

  std::mutex witness_mu;
  std::vector<std::uint32_t> best_witness;  // relabeled ids
  std::atomic<std::size_t> witness_size{0};

  bool enumerating = false;
  std::size_t enum_target = 0;
  std::uint64_t enumeration_limit = 0;
  std::vector<std::vector<std::uint32_t>>* sink = nullptr;  // single worker

  Shared(const UndirectedGraph& graph, std::uint64_t budget)
      : g(graph), words(graph.words_per_row()), node_budget(budget) {}

  void report(const std::vector<std::uint32_t>& clique) {
    std::scoped_lock lock(witness_mu);
    if (clique.size() > witness_size.load(std::memory_order_relaxed)) {
      best_witness = clique;
      witness_size.store(clique.size(), std::memory_order_relaxed);
    }
  }
};

struct Worker {
  Shared& sh;
  std::vector<Frame> arena;  // pre-sized: references stay valid in recursion
  std::uint64_t local_nodes = 0;

  explicit Worker(Shared& shared)
      : sh(shared), arena(shared.g.vertex_count() + 2) {}

  void bump_nodes() {
    ++local_nodes;
    if (local_nodes >= 1024) flush_nodes();
    if (sh.nodes.load(std::memory_order_relaxed) + local_nodes > sh.node_budget)
      throw BudgetExceeded("search budget exceeded");
  }
  void flush_nodes() {
    sh.nodes.fetch_add(local_nodes, std::memory_order_relaxed);
    local_nodes = 0;
  }

  // Greedy sequential coloring of f.cand; fills f.seq/f.color ordered by
  // ascending color, ascending vertex index within a color class.
  void color_sort(Frame& f) {
    const std::size_t words = sh.words;
    std::size_t used = 0;
    f.cand.for_each([&](std::size_t v) {
      const Word* nv = sh.g.row(v);
      std::size_t c = 0;
      for (; c < used; ++c) {
        const Word* cls = f.classes[c].w.data();
        bool conflict = false;
        for (std::size_t i = 0; i < words; ++i)
          if (cls[i] & nv[i]) {
            conflict = true;
            break;
          }
        if (!conflict) break;
      }
      if (c == used) {
        if (f.classes.size() <= used) f.classes.emplace_back();
        f.classes[used].assign(words);
        ++used;
      }
      f.classes[c].set(v);
    });
    f.seq.clear();
    f.color.clear();
    for (std::size_t c = 0; c < used; ++c)
      f.classes[c].for_each([&](std::size_t v) {
        f.seq.push_back(static_cast<std::uint32_t>(v));
        f.color.push_back(static_cast<std::uint32_t>(c + 1));
      });
  }

  void expand(std::size_t depth, std::vector<std::uint32_t>& current) {
    bump_nodes();
    Frame& f = arena[depth];
    if (f.cand.empty()) {
      if (sh.enumerating) {
        if (current.size() == sh.enum_target) {
          if (sh.sink->size() >= sh.enumeration_limit)
            throw BudgetExceeded("enumeration limit exceeded");
          sh.sink->push_back(current);
        }
        return;
      }
      std::size_t prev = sh.best.load(std::memory_order_relaxed);
      while (current.size() > prev &&
             !sh.best.compare_exchange_weak(prev, current.size())) {
      }
      if (current.size() > sh.witness_size.load(std::memory_order_relaxed))
        sh.report(current);
      return;
    }
    // Candidates are adjacent to every chosen vertex, so reaching the target
    // size with candidates left certifies a strictly larger clique.
    if (sh.enumerating && current.size() == sh.enum_target)
      throw InvalidInput("k is not the maximum clique size");

    color_sort(f);
    Frame& child = arena[depth + 1];
    for (std::size_t i = f.seq.size(); i-- > 0;) {
      std::uint32_t v = f.seq[i];
      std::size_t bound = current.size() + f.color[i];
      if (sh.enumerating ? bound < sh.enum_target
                         : bound <= sh.best.load(std::memory_order_relaxed))
        return;  // colors only shrink toward the front of seq
      f.cand.clear(v);
      child.cand.assign(sh.words);
      const Word* nv = sh.g.row(v);
      for (std::size_t wi = 0; wi < sh.words; ++wi)
        child.cand.w[wi] = f.cand.w[wi] & nv[wi];
      current.push_back(v);
      expand(depth + 1, current);
      current.pop_back();
    }
  }
};

// Degeneracy removal order; ties toward the smallest vertex index.
std::vector<std::uint32_t> degeneracy_order(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    removed[pick] = true;
    order.push_back(static_cast<std::uint32_t>(pick));
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && g.adjacent(pick, v)) --deg[v];
  }
  return order;
}

struct Relabeled {
  UndirectedGraph graph;
  std::vector<std::uint32_t> to_old, to_new;
};

Relabeled relabel_by_degeneracy(const UndirectedGraph& g) {
  std::vector<std::uint32_t> removal = degeneracy_order(g);
  const std::size_t n = g.vertex_count();
  Relabeled r{UndirectedGraph(n), std::vector<std::uint32_t>(n),
              std::vector<std::uint32_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t old = removal[n - 1 - i];  // last removed -> index 0
    r.to_old[i] = old;
    r.to_new[old] = static_cast<std::uint32_t>(i);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) r.graph.add_edge(r.to_new[u], r.to_new[v]);
  return r;
}

std::vector<std::uint32_t> map_sorted(const std::vector<std::uint32_t>& verts,
                                      const std::vector<std::uint32_t>& table) {
  std::vector<std::uint32_t> out;
  out.reserve(verts.size());
  for (std::uint32_t v : verts) out.push_back(table[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Root of the search: one coloring of the whole vertex set. Branch i owns the
// cliques whose last vertex (in seq order) is seq[i], so its candidate set is
// seq[0..i-1] & N(seq[i]) independent of how branches are scheduled.
struct Root {
  Frame frame;
  std::vector<Bits> prefix;
};

Root build_root(Shared& sh) {
  Root root;
  root.frame.cand.assign(sh.words);
  for (std::size_t v = 0; v < sh.g.vertex_count(); ++v) root.frame.cand.set(v);
  Worker scratch(sh);
  scratch.color_sort(root.frame);
  Bits acc;
  acc.assign(sh.words);
  root.prefix.resize(root.frame.seq.size());
  for (std::size_t i = 0; i < root.frame.seq.size(); ++i) {
    root.prefix[i] = acc;
    acc.set(root.frame.seq[i]);
  }
  return root;
}

void run_root_branch(const Root& root, std::size_t i, Worker& w) {
  Shared& sh = w.sh;
  if (sh.enumerating ? root.frame.color[i] < sh.enum_target
                     : root.frame.color[i] <= sh.best.load(std::memory_order_relaxed))
    return;
  std::uint32_t v = root.frame.seq[i];
  Frame& f = w.arena[0];
  f.cand.assign(sh.words);
  const Word* nv = sh.g.row(v);
  for (std::size_t wi = 0; wi < sh.words; ++wi)
    f.cand.w[wi] = root.prefix[i].w[wi] & nv[wi];
  std::vector<std::uint32_t> current{v};
  w.expand(0, current);
}

}  // namespace

std::vector<std::uint32_t> greedy_clique_lower_bound(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::uint32_t> clique;
  Bits cand;
  cand.assign(g.words_per_row());
  for (std::size_t v = 0; v < n; ++v) cand.set(v);
  while (!cand.empty()) {
    std::size_t pick = n;
    cand.for_each([&](std::size_t v) {
      if (pick == n || deg[v] > deg[pick]) pick = v;
    });
    clique.push_back(static_cast<std::uint32_t>(pick));
    const Word* np = g.row(pick);
    for (std::size_t i = 0; i < cand.w.size(); ++i) cand.w[i] &= np[i];
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

CliqueResult max_clique(const UndirectedGraph& g, const CliqueOptions& options) {
  if (!options.seed_clique.empty() && !is_clique(g, options.seed_clique))
    throw InvalidInput("seed clique is not a clique");

  Relabeled r = relabel_by_degeneracy(g);
  Shared sh(r.graph, options.node_budget);

  std::vector<std::uint32_t> seed = greedy_clique_lower_bound(g);
  if (options.seed_clique.size() > seed.size()) seed = options.seed_clique;
  sh.best.store(seed.size());
  sh.witness_size.store(seed.size());
  sh.best_witness = map_sorted(seed, r.to_new);

  Root root = build_root(sh);
  const std::size_t branches = root.frame.seq.size();
  unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    Worker w(sh);
    for (std::size_t i = branches; i-- > 0;) run_root_branch(root, i, w);
    w.flush_nodes();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        Worker w(sh);
        try {
          while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= branches) break;
            run_root_branch(root, branches - 1 - k, w);
          }
          w.flush_nodes();
        } catch (...) {
          w.flush_nodes();
          std::scoped_lock lock(error_mu);
          if (!error) error = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  CliqueResult result;
  result.size = sh.best.load();
  result.witness = map_sorted(sh.best_witness, r.to_old);
  result.nodes = sh.nodes.load();
  return result;
}

std::vector<std::vector<std::uint32_t>> enumerate_maximum_cliques(
    const UndirectedGraph& g, std::size_t k, const CliqueOptions& options) {
  if (k == 0 || k > g.vertex_count())
    throw InvalidInput("clique size out of range");

  Relabeled r = relabel_by_degeneracy(g);
  Shared sh(r.graph, options.node_budget);
  std::vector<std::vector<std::uint32_t>> found;
  sh.enumerating = true;
  sh.enum_target = k;
  sh.enumeration_limit = options.enumeration_limit;
  sh.sink = &found;

  Root root = build_root(sh);
  Worker w(sh);
  for (std::size_t i = root.frame.seq.size(); i-- > 0;) {
    if (root.frame.color[i] < k) break;  // colors only shrink from here on
    run_root_branch(root, i, w);
  }
  w.flush_nodes();
  if (found.empty()) throw InvalidInput("k is not the maximum clique size");

  std::vector<std::vector<std::uint32_t>> result;
  result.reserve(found.size());
  for (auto& clique : found) result.push_back(map_sorted(clique, r.to_old));
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace ekr
