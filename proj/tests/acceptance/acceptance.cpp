// Acceptance gate for the intersection-density toolkit. Each numbered
// criterion prints exactly one [PASS]/[FAIL] line and carries a wall-clock
// budget; failures list their reasons underneath and the binary exits
// nonzero if any criterion fails.
//
// Usage: ekr_acceptance [catalog-root]     (default: data/catalogs)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ekr/classify.hpp"
#include "ekr/clique.hpp"
#include "ekr/constructions.hpp"
#include "ekr/density.hpp"
#include "ekr/graph.hpp"
#include "ekr/group.hpp"
#include "ekr/grp_format.hpp"
#include "oracles/brute.hpp"

namespace {

using namespace ekr;
namespace fs = std::filesystem;

struct Criterion {
  std::vector<std::string> problems;
  void check(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

int g_failures = 0;

template <typename Fn>
void criterion(int number, const std::string& title, double limit_seconds,
               Fn&& body) {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  if (secs >= limit_seconds) c.problems.push_back("over the time budget");
  bool ok = c.problems.empty();
  if (!ok) ++g_failures;
  std::printf("[%s] %d. %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL",
              number, title.c_str(), secs, limit_seconds);
  for (const std::string& p : c.problems)
    std::printf("       - %s\n", p.c_str());
  std::fflush(stdout);
}

// Every density computed here flows through this wrapper so the
// clique-coclique audit in criterion 6 sees the complete record.
struct DensityProbe {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t alpha = 0;
  std::size_t bound_clique = 0;
};
std::vector<DensityProbe> g_probes;

DensityResult probe_density(const PermGroup& g,
                            const DensityOptions& options = {}) {
  DensityResult r = intersection_density(g, options);
  g_probes.push_back({g.name(), r.order, r.alpha, r.bound_clique.size()});
  return r;
}

std::vector<PermGroup> load_dir(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".grp") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<PermGroup> out;
  out.reserve(files.size());
  for (const fs::path& f : files) out.push_back(read_grp_file(f));
  return out;
}

bool rho_is(const DensityResult& r, std::uint64_t num, std::uint64_t den) {
  return r.rho == make_rational(num, den);
}

// The family, viewed as permutations, is a group of order 4 in which every
// element squares to the identity (a Klein four-group).
bool is_klein_group_family(const PermGroup& g,
                           const std::vector<std::uint32_t>& family) {
  if (family.size() != 4) return false;
  std::vector<Perm> ps;
  for (std::uint32_t idx : family) ps.push_back(g.element(idx));
  for (const Perm& a : ps) {
    if (!a.compose(a).is_identity()) return false;
    for (const Perm& b : ps)
      if (std::find(ps.begin(), ps.end(), a.compose(b)) == ps.end())
        return false;
  }
  return true;
}

// ---- 1. pair actions of S4 and A4, plus A4 in its natural action ----

void criterion_1(Criterion& c) {
  DensityOptions strict;
  strict.compute_strict = true;

  PermGroup s4p = action_on_2subsets(symmetric_group(4));
  DensityResult r = probe_density(s4p, strict);
  c.check(rho_is(r, 1, 1), "pairs(S4): rho != 1");
  c.check(r.is_ekr, "pairs(S4): not EKR");
  c.check(r.strict_ekr == std::optional<bool>(false),
          "pairs(S4): strict-EKR not decided false");
  auto families = maximum_families(s4p, r.alpha);
  std::size_t canonical = 0, klein_non_canonical = 0;
  for (const auto& f : families) {
    if (is_canonical_family(s4p, f))
      ++canonical;
    else if (is_klein_group_family(s4p, f))
      ++klein_non_canonical;
  }
  c.check(families.size() == 4, "pairs(S4): expected 4 maximum families");
  c.check(canonical == 3, "pairs(S4): expected 3 canonical families");
  c.check(klein_non_canonical == 1,
          "pairs(S4): Klein kernel not reported as the non-canonical witness");

  PermGroup a4p = action_on_2subsets(alternating_group(4));
  c.check(rho_is(probe_density(a4p), 2, 1), "pairs(A4): rho != 2");

  PermGroup a4 = alternating_group(4);
  r = probe_density(a4, strict);
  c.check(rho_is(r, 1, 1), "A4: rho != 1");
  c.check(r.strict_ekr == std::optional<bool>(false),
          "A4: strict-EKR not decided false");
  bool witness = false;
  for (const auto& f : maximum_families(a4, r.alpha))
    if (f.size() == 3 && !is_canonical_family(a4, f)) witness = true;
  c.check(witness, "A4: no non-canonical maximum family of size 3");
}

// ---- 2. the flagship pair: A5 and S5 acting on unordered pairs ----

void criterion_2(Criterion& c) {
  PermGroup a5p = action_on_2subsets(alternating_group(5));
  DensityResult r = probe_density(a5p);
  c.check(rho_is(r, 2, 1), "pairs(A5): rho != 2");
  c.check(r.alpha == 12, "pairs(A5): alpha != 12");
  c.check(r.family.size() == 12, "pairs(A5): witness family size != 12");
  c.check(is_intersecting_family(a5p, r.family),
          "pairs(A5): witness family is not intersecting");
  // Some maximum family must be closed under products that all fix a point
  // (a subgroup witness of size 12).
  bool subgroup_witness = false;
  for (const auto& f : maximum_families(a5p, r.alpha)) {
    bool all_products_fix = true;
    for (std::uint32_t i : f)
      for (std::uint32_t j : f)
        if (a5p.element(i).compose(a5p.element(j)).fixed_points().empty())
          all_products_fix = false;
    if (all_products_fix) subgroup_witness = true;
  }
  c.check(subgroup_witness,
          "pairs(A5): no size-12 witness with all pairwise products fixing "
          "a point");

  PermGroup s5p = action_on_2subsets(symmetric_group(5));
  r = probe_density(s5p);
  c.check(rho_is(r, 1, 1), "pairs(S5): rho != 1");
  c.check(r.alpha == 12, "pairs(S5): alpha != 12");
  c.check(r.bound_clique.size() >= 10,
          "pairs(S5): no pairwise non-intersecting clique of size >= 10");
  c.check(r.nodes == 0, "pairs(S5): exhaustive search was needed");
}

// ---- 3. density 1 across the prime-power degrees 4, 8, 9 ----

void criterion_3(Criterion& c, const std::vector<const PermGroup*>& groups) {
  for (auto [p, k] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    PermGroup w = iterated_wreath_sylow(p, k);
    if (!rho_is(probe_density(w), 1, 1))
      c.problems.push_back(w.name() + ": rho != 1");
  }
  for (const PermGroup* g : groups)
    if (!rho_is(probe_density(*g), 1, 1))
      c.problems.push_back(g->name() + ": rho != 1");
}

// ---- 4. classification across degrees 6 and 10 ----

void criterion_4(Criterion& c, const std::vector<PermGroup>& deg6,
                 const std::vector<PermGroup>& deg10) {
  c.check(deg6.size() == 16, "expected 16 transitive groups of degree 6");
  std::vector<PermGroup> all;
  all.insert(all.end(), deg6.begin(), deg6.end());
  for (const PermGroup& g : deg10)
    if (g.order() <= 5000) all.push_back(g);

  std::size_t deg6_rho2 = 0;
  for (const PermGroup& g : all) {
    DensityResult r = probe_density(g);
    Classification2p cls = classify_2p(g);
    if (r.rho.den != 1 || (r.rho.num != 1 && r.rho.num != 2))
      c.problems.push_back(g.name() + ": rho " + to_string(r.rho) +
                           " outside {1, 2}");
    if (!(r.rho == cls.predicted_rho))
      c.problems.push_back(g.name() + ": rho " + to_string(r.rho) +
                           " != predicted " + to_string(cls.predicted_rho));
    if (g.degree() == 6 && r.rho == make_rational(2, 1)) {
      ++deg6_rho2;
      if (g.order() != 12 || cls.cls != TwoPClass::CASE_I)
        c.problems.push_back(g.name() +
                             ": unexpected degree-6 group of density 2");
    }
  }
  c.check(deg6_rho2 == 1,
          "degree 6: expected exactly one group of density 2, saw " +
              std::to_string(deg6_rho2));

  SpectrumReport spec = rho_spectrum(all);
  for (const auto& [value, count] : spec.counts)
    if (value.den != 1)
      c.problems.push_back("spectrum value " + to_string(value) +
                           " has denominator != 1");
  c.check(!spec.counts.empty(), "empty spectrum");
}

// ---- 5. even-weight code kernel with a multiplier of order d ----

void criterion_5(Criterion& c) {
  const std::vector<std::uint64_t> seeds = {kAdjacentPairSeed};
  struct Expect {
    std::size_t d;
    bool ekr, strict;
  };
  for (Expect e : {Expect{1, false, false}, {2, true, false}, {4, true, true}}) {
    PermGroup g = frobenius_lift(5, e.d, seeds);
    DensityOptions opts;
    opts.compute_strict = true;
    DensityResult r = probe_density(g, opts);
    if (r.is_ekr != e.ekr)
      c.problems.push_back(g.name() + ": EKR " + (r.is_ekr ? "yes" : "no") +
                           ", expected " + (e.ekr ? "yes" : "no"));
    if (r.strict_ekr != std::optional<bool>(e.strict))
      c.problems.push_back(g.name() + ": strict-EKR mismatch");
  }
}

// ---- 6. property suites ----

void criterion_6(Criterion& c, const std::vector<PermGroup>& deg5,
                 const std::vector<PermGroup>& deg6,
                 const std::vector<PermGroup>& deg7,
                 const std::vector<PermGroup>& deg10,
                 const std::vector<PermGroup>& deg14,
                 const std::vector<const PermGroup*>& everything) {
  // Translation invariance: right-translating a family by any group element
  // preserves whether it is intersecting.
  std::mt19937 rng(2026);
  for (const PermGroup& g :
       {action_on_2subsets(symmetric_group(4)),
        action_on_2subsets(alternating_group(5)), alternating_group(4),
        thm16i_group(5, std::vector<std::uint64_t>{kAdjacentPairSeed})}) {
    DensityResult r = intersection_density(g);
    c.check(is_intersecting_family(g, r.family),
            g.name() + ": maximum family not intersecting");
    std::vector<std::uint32_t> non_intersecting = {0,
                                                   derangement_indices(g)[0]};
    for (int trial = 0; trial < 12; ++trial) {
      const Perm& t = g.element(rng() % g.order());
      std::vector<std::uint32_t> shifted;
      for (std::uint32_t idx : r.family)
        shifted.push_back(g.index_of(g.element(idx).compose(t)));
      c.check(is_intersecting_family(g, shifted),
              g.name() + ": translated maximum family not intersecting");
      shifted.clear();
      for (std::uint32_t idx : non_intersecting)
        shifted.push_back(g.index_of(g.element(idx).compose(t)));
      c.check(!is_intersecting_family(g, shifted),
              g.name() + ": translated non-intersecting set became "
                         "intersecting");
    }
  }

  // Clique-coclique: alpha times any pairwise non-intersecting clique size
  // is at most |G|, on every density report this binary has produced.
  c.check(!g_probes.empty(), "no density reports were recorded");
  for (const DensityProbe& p : g_probes)
    if (p.bound_clique != 0 && p.alpha * p.bound_clique > p.order)
      c.problems.push_back(p.name + ": alpha * clique > order");
  // ...and against independently computed derangement-graph cliques.
  for (const PermGroup& g : deg6) {
    auto clique = greedy_clique_lower_bound(derangement_graph(g));
    DensityResult r = intersection_density(g);
    c.check(r.alpha * clique.size() <= g.order(),
            g.name() + ": alpha * greedy clique > order");
  }

  std::vector<PermGroup> two_p;
  two_p.insert(two_p.end(), deg6.begin(), deg6.end());
  two_p.insert(two_p.end(), deg10.begin(), deg10.end());
  two_p.insert(two_p.end(), deg14.begin(), deg14.end());

  auto expect_suite = [&](const std::string& name,
                          std::vector<PermGroup> groups) {
    SuiteReport rep = run_suite(name, std::move(groups));
    c.check(rep.failed == 0, "suite " + name + ": " +
                                 std::to_string(rep.failed) + " failed");
    c.check(rep.passed > 0, "suite " + name + ": nothing checked");
    return rep;
  };

  expect_suite("lem-semiq", two_p);        // quotient monotonicity
  expect_suite("prop-dm2", two_p);         // kernel flip witnesses
  expect_suite("prop-minimal",             // subgroup monotonicity
               {action_on_2subsets(alternating_group(4)),
                action_on_2subsets(symmetric_group(4)),
                action_on_2subsets(alternating_group(5)),
                action_on_2subsets(symmetric_group(5))});

  std::vector<PermGroup> prime_degree;
  prime_degree.insert(prime_degree.end(), deg5.begin(), deg5.end());
  prime_degree.insert(prime_degree.end(), deg7.begin(), deg7.end());
  expect_suite("lem-prime", prime_degree);  // normalizer strictness

  std::vector<PermGroup> all;
  for (const PermGroup* g : everything) all.push_back(*g);
  SuiteReport rep = expect_suite("derangement-existence", all);
  c.check(rep.passed == all.size(),
          "derangement-existence: not every catalog group was checked");
}

// ---- 7. agreement with brute-force oracles ----

void criterion_7(Criterion& c, const std::vector<const PermGroup*>& catalog) {
  std::vector<PermGroup> constructions = {
      action_on_2subsets(symmetric_group(4)),
      action_on_2subsets(alternating_group(4)),
      action_on_2subsets(alternating_group(5)),
      action_on_2subsets(symmetric_group(5)),
      thm16i_group(5, std::vector<std::uint64_t>{kAdjacentPairSeed}),
      frobenius_lift(5, 2, std::vector<std::uint64_t>{kAdjacentPairSeed}),
      iterated_wreath_sylow(2, 2),
      iterated_wreath_sylow(2, 3),
      iterated_wreath_sylow(3, 2),
  };
  std::vector<const PermGroup*> pool = catalog;
  for (const PermGroup& g : constructions) pool.push_back(&g);

  std::size_t compared = 0;
  for (const PermGroup* g : pool) {
    if (g->order() > 200) continue;
    ++compared;
    DensityResult r = probe_density(*g);
    std::size_t reference = brute::max_intersecting_family_size(*g);
    if (r.alpha != reference)
      c.problems.push_back(g->name() + ": alpha " + std::to_string(r.alpha) +
                           " != brute " + std::to_string(reference));
  }
  c.check(compared >= 60, "too few order <= 200 groups compared: " +
                              std::to_string(compared));

  for (int i = 0; i < 200; ++i) {
    std::size_t n = 4 + static_cast<std::size_t>(i % 21);  // 4..24 vertices
    unsigned percent = 20 + 15 * (i % 5);
    UndirectedGraph g = brute::random_graph(n, percent, 1000 + i);
    CliqueResult r = max_clique(g);
    std::size_t reference = brute::max_clique_size_subsets(g);
    if (r.size != reference) {
      c.problems.push_back("random graph " + std::to_string(i) + ": clique " +
                           std::to_string(r.size) + " != brute " +
                           std::to_string(reference));
      break;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  fs::path root = argc > 1 ? argv[1] : "data/catalogs";
  if (!fs::exists(root)) {
    std::fprintf(stderr, "catalog directory not found: %s\n",
                 root.string().c_str());
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<PermGroup>> catalog;
  for (int d : {4, 5, 6, 7, 8, 9, 10, 14})
    catalog.push_back(load_dir(root / ("deg" + std::to_string(d))));
  const auto& deg4 = catalog[0];
  const auto& deg5 = catalog[1];
  const auto& deg6 = catalog[2];
  const auto& deg7 = catalog[3];
  const auto& deg8 = catalog[4];
  const auto& deg9 = catalog[5];
  const auto& deg10 = catalog[6];
  const auto& deg14 = catalog[7];

  std::vector<const PermGroup*> everything;
  std::size_t total = 0;
  for (const auto& groups : catalog) {
    total += groups.size();
    for (const PermGroup& g : groups) everything.push_back(&g);
  }
  std::printf("loaded %zu catalog groups in %.2f s\n", total,
              std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count());

  std::vector<const PermGroup*> degrees_489;
  for (const auto* groups : {&deg4, &deg8, &deg9})
    for (const PermGroup& g : *groups) degrees_489.push_back(&g);

  criterion(1, "pair actions of S4 and A4, natural A4", 1.0, criterion_1);
  criterion(2, "flagship pair: A5 and S5 on unordered pairs", 10.0,
            criterion_2);
  criterion(3, "density 1 at the prime-power degrees 4, 8, 9", 60.0,
            [&](Criterion& c) { criterion_3(c, degrees_489); });
  criterion(4, "classification at degrees 6 and 10", 300.0,
            [&](Criterion& c) { criterion_4(c, deg6, deg10); });
  criterion(5, "even-weight kernel lifts at p = 5", 60.0, criterion_5);
  criterion(6, "property suites", 300.0, [&](Criterion& c) {
    criterion_6(c, deg5, deg6, deg7, deg10, deg14, everything);
  });
  criterion(7, "agreement with brute-force oracles", 300.0,
            [&](Criterion& c) { criterion_7(c, everything); });

  std::printf("acceptance: %d of 7 criteria passed\n", 7 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
