#include "ekr/density.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ekr {

Rational make_rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  std::uint64_t d = std::gcd(num, den);
  if (d == 0) d = 1;
  return Rational{num / d, den / d};
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool permutations_intersect(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch");
  for (std::size_t v = 0; v < a.degree(); ++v)
    if (a(static_cast<Point>(v)) == b(static_cast<Point>(v))) return true;
  return false;
}

namespace {

// Bit rows over all elements: bit v of row u set iff elements u and v agree
// at some point. Built by bucketing elements on their image of each point.
std::vector<std::uint64_t> agreement_rows(const PermGroup& g, std::size_t& words_out) {
  const std::size_t m = g.order();
  const std::size_t words = (m + 63) / 64;
  words_out = words;
  std::vector<std::uint64_t> rows(m * words, 0);
  std::vector<std::uint64_t> mask(words);
  std::vector<std::vector<std::uint32_t>> buckets(g.degree());
  for (std::size_t v = 0; v < g.degree(); ++v) {
    for (auto& b : buckets) b.clear();
    for (std::size_t i = 0; i < m; ++i)
      buckets[g.element(i)(static_cast<Point>(v))].push_back(
          static_cast<std::uint32_t>(i));
    for (const auto& b : buckets) {
      if (b.size() < 2) continue;
      std::fill(mask.begin(), mask.end(), 0);
      for (std::uint32_t i : b) mask[i >> 6] |= std::uint64_t{1} << (i & 63);
      for (std::uint32_t i : b)
        for (std::size_t w = 0; w < words; ++w) rows[i * words + w] |= mask[w];
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    rows[i * words + (i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
  return rows;
}

std::uint64_t stabilizer_order_at(const PermGroup& g, std::size_t v) {
  std::uint64_t count = 0;
  for (const Perm& p : g.elements())
    if (p(static_cast<Point>(v)) == v) ++count;
  return count;
}

}  // namespace

UndirectedGraph derangement_graph(const PermGroup& g) {
  const std::size_t m = g.order();
  std::size_t words = 0;
  std::vector<std::uint64_t> rows = agreement_rows(g, words);
  UndirectedGraph graph(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (!((rows[u * words + (v >> 6)] >> (v & 63)) & 1)) graph.add_edge(u, v);
  return graph;
}

LabeledGraph intersection_graph(const PermGroup& g) {
  const std::size_t m = g.order();
  std::vector<std::uint32_t> labels;
  for (std::size_t i = 0; i < m; ++i)
    if (!g.element(i).is_derangement()) labels.push_back(static_cast<std::uint32_t>(i));
  std::size_t words = 0;
  std::vector<std::uint64_t> rows = agreement_rows(g, words);
  UndirectedGraph graph(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      std::uint32_t v = labels[b];
      if ((rows[labels[a] * words + (v >> 6)] >> (v & 63)) & 1) graph.add_edge(a, b);
    }
  return LabeledGraph{std::move(graph), std::move(labels)};
}

bool is_intersecting_family(const PermGroup& g,
                            std::span<const std::uint32_t> element_indices) {
  for (std::size_t i = 0; i < element_indices.size(); ++i)
    for (std::size_t j = i + 1; j < element_indices.size(); ++j)
      if (!permutations_intersect(g.element(element_indices[i]),
                                  g.element(element_indices[j])))
        return false;
  return true;
}

bool is_canonical_family(const PermGroup& g,
                         std::span<const std::uint32_t> element_indices) {
  if (element_indices.empty()) return false;
  for (std::size_t u = 0; u < g.degree(); ++u) {
    Point w = g.element(element_indices[0])(static_cast<Point>(u));
    bool agree = true;
    for (std::uint32_t i : element_indices)
      if (g.element(i)(static_cast<Point>(u)) != w) {
        agree = false;
        break;
      }
    if (agree && element_indices.size() == stabilizer_order_at(g, u)) return true;
  }
  return false;
}

std::size_t semiregular_clique_bound(const PermGroup& g) {
  std::size_t best = 1;
  for (const SemiregularElement& s : find_semiregular_elements(g))
    best = std::max(best, s.cycle_length);
  return best;
}

std::vector<std::uint32_t> normalizer_coset_clique(const PermGroup& g) {
  std::vector<SemiregularElement> semis = find_semiregular_elements(g);
  if (semis.empty()) return {};
  std::size_t ell = 0;
  for (const SemiregularElement& s : semis) ell = std::max(ell, s.cycle_length);

  std::vector<std::uint32_t> best;
  std::set<std::vector<std::uint32_t>> seen;
  std::size_t tried = 0;
  for (const SemiregularElement& s : semis) {
    if (s.cycle_length != ell) continue;
    const Perm& p = g.element(s.index);
    std::vector<Perm> pow{Perm::identity(g.degree())};
    for (std::size_t k = 1; k < ell; ++k) pow.push_back(pow.back().compose(p));
    std::vector<std::uint32_t> subgroup;
    for (const Perm& q : pow) subgroup.push_back(g.index_of(q));
    std::sort(subgroup.begin(), subgroup.end());
    if (!seen.insert(subgroup).second) continue;
    if (++tried > 64) break;

    PermGroup nrm = normalizer_of_cyclic(g, s.index);
    // Left cosets x<p> inside the normalizer; keep the all-derangement ones.
    std::vector<char> used(nrm.order(), 0);
    std::vector<Perm> reps;
    for (std::size_t j = 0; j < nrm.order(); ++j) {
      if (used[j]) continue;
      const Perm& rep = nrm.element(j);
      bool all_derangement = true;
      for (const Perm& q : pow) {
        Perm member = rep.compose(q);
        used[nrm.index_of(member)] = 1;
        if (!member.is_derangement()) all_derangement = false;
      }
      if (all_derangement) reps.push_back(rep);
    }

    std::vector<std::size_t> chosen;
    if (!reps.empty()) {
      // Cosets are compatible when their quotient coset is all-derangement;
      // a max clique of the compatibility graph extends the base subgroup.
      UndirectedGraph compat(reps.size());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
          Perm diff = reps[i].compose(reps[j].inverse());
          bool ok = true;
          for (const Perm& q : pow)
            if (!diff.compose(q).is_derangement()) {
              ok = false;
              break;
            }
          if (ok) compat.add_edge(i, j);
        }
      }
      try {
        CliqueOptions mini;
        mini.node_budget = 50'000'000;
        CliqueResult res = max_clique(compat, mini);
        chosen.assign(res.witness.begin(), res.witness.end());
      } catch (const BudgetExceeded&) {
        chosen.clear();  // fall back to the base subgroup alone
      }
    }

    std::vector<std::uint32_t> clique = subgroup;
    for (std::size_t c : chosen)
      for (const Perm& q : pow) clique.push_back(g.index_of(reps[c].compose(q)));
    std::sort(clique.begin(), clique.end());
    if (clique.size() > best.size()) best = std::move(clique);
  }

  for (std::size_t i = 0; i < best.size(); ++i)
    for (std::size_t j = i + 1; j < best.size(); ++j)
      if (permutations_intersect(g.element(best[i]), g.element(best[j])))
        throw Error("internal: coset clique failed pairwise verification");
  return best;
}

DensityResult intersection_density(const PermGroup& g, const DensityOptions& options) {
  DensityResult r;
  r.degree = g.degree();
  r.order = g.order();

  std::uint64_t stab = 0;
  std::size_t stab_point = 0;
  for (std::size_t v = 0; v < g.degree(); ++v) {
    std::uint64_t s = stabilizer_order_at(g, v);
    if (s > stab) {
      stab = s;
      stab_point = v;
    }
  }
  r.stabilizer_order = stab;
  std::vector<std::uint32_t> stab_family;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element(i)(static_cast<Point>(stab_point)) == stab_point)
      stab_family.push_back(static_cast<std::uint32_t>(i));
  r.method.push_back("stabilizer family: " + std::to_string(stab) +
                     " elements fixing point " + std::to_string(stab_point));

  bool closed = false;
  if (!options.force_exact && is_2_transitive(g)) {
    r.alpha = stab;
    r.family = stab_family;
    r.method.push_back("two-transitive action: maximum family is a stabilizer coset");
    closed = true;
  }

  if (!closed && !options.force_exact) {
    std::uint64_t ub = r.order;
    std::size_t ell = semiregular_clique_bound(g);
    std::vector<std::uint32_t> closing_clique;
    if (ell > 1) {
      ub = std::min(ub, r.order / ell);
      r.method.push_back("semiregular element of cycle length " +
                         std::to_string(ell) + ": alpha <= " +
                         std::to_string(r.order / ell));
    }
    if (ub > stab) {
      std::vector<std::uint32_t> coset_clique = normalizer_coset_clique(g);
      if (coset_clique.size() > 1) {
        std::uint64_t bound = r.order / coset_clique.size();
        r.method.push_back("normalizer coset clique of size " +
                           std::to_string(coset_clique.size()) +
                           ": alpha <= " + std::to_string(bound));
        if (bound < ub) {
          ub = bound;
          closing_clique = std::move(coset_clique);
        }
      }
    }
    if (ub > stab) {
      UndirectedGraph dg = derangement_graph(g);
      std::vector<std::uint32_t> greedy = greedy_clique_lower_bound(dg);
      std::uint64_t bound = r.order / greedy.size();
      r.method.push_back("greedy derangement clique of size " +
                         std::to_string(greedy.size()) + ": alpha <= " +
                         std::to_string(bound));
      if (bound < ub) {
        ub = bound;
        closing_clique = std::move(greedy);
      }
    }
    if (ub < stab)
      throw Error("internal: clique bound fell below the stabilizer bound");
    if (ub == stab) {
      r.alpha = stab;
      r.family = stab_family;
      r.bound_clique = std::move(closing_clique);
      r.method.push_back("clique bound matches the stabilizer family: alpha = " +
                         std::to_string(stab));
      closed = true;
    }
  }

  if (!closed) {
    LabeledGraph ig = intersection_graph(g);
    CliqueOptions copt;
    copt.node_budget = options.node_budget;
    copt.enumeration_limit = options.enumeration_limit;
    copt.workers = options.workers;
    for (std::uint32_t e : stab_family) {
      auto it = std::lower_bound(ig.labels.begin(), ig.labels.end(), e);
      copt.seed_clique.push_back(
          static_cast<std::uint32_t>(it - ig.labels.begin()));
    }
    CliqueResult res = max_clique(ig.graph, copt);
    r.alpha = res.size;
    r.nodes = res.nodes;
    r.family.clear();
    for (std::uint32_t v : res.witness) r.family.push_back(ig.labels[v]);
    r.method.push_back("exact search over " +
                       std::to_string(ig.graph.vertex_count()) +
                       " elements with fixed points: " +
                       std::to_string(res.nodes) + " nodes");
  }

  r.rho = make_rational(r.alpha, r.stabilizer_order);
  r.is_ekr = r.alpha == r.stabilizer_order;
  if (!r.is_ekr) {
    r.strict_ekr = false;
  } else if (options.compute_strict) {
    auto families = maximum_families(g, r.alpha, options);
    bool all_canonical = true;
    for (const auto& f : families)
      if (!is_canonical_family(g, f)) {
        all_canonical = false;
        break;
      }
    r.strict_ekr = all_canonical;
    r.method.push_back("enumerated " + std::to_string(families.size()) +
                       " maximum families containing the identity");
  }
  return r;
}

std::vector<std::vector<std::uint32_t>> maximum_families(
    const PermGroup& g, std::uint64_t alpha, const DensityOptions& options) {
  LabeledGraph ig = intersection_graph(g);
  CliqueOptions copt;
  copt.node_budget = options.node_budget;
  copt.enumeration_limit = options.enumeration_limit;
  auto cliques = enumerate_maximum_cliques(ig.graph, alpha, copt);
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) {
    std::vector<std::uint32_t> fam;
    fam.reserve(c.size());
    for (std::uint32_t v : c) fam.push_back(ig.labels[v]);
    out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ekr
