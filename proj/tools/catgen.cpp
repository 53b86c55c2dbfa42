// Generates the bundled transitive-group catalogs under data/catalogs/.
//
// Strategy, per degree n: every transitive group either preserves a block
// system (and embeds in a wreath product we can decompose) or is primitive
// (and embeds in one of a short list of maximal primitive groups, all of
// moderate order, or is Alt/Sym):
//
//   n=4   subgroups of S4
//   n=5   subgroups of AGL(1,5), plus A5, S5
//   n=6   blocks of 2 / 3 via wreath decompositions over the degree-3
//         classes; primitive ones inside PGL(2,5) on the projective line;
//         plus A6, S6
//   n=7   subgroups of AGL(1,7) and of PSL(3,2) on the projective plane;
//         plus A7, S7 (prime degree: every transitive group is primitive)
//   n=8   blocks of 2 / 4 over the degree-4 classes; primitive ones inside
//         PGL(2,7) and AGL(3,2); plus A8, S8
//   n=9   subgroups of S3 wr S3, AGL(2,3), PGammaL(2,8); plus A9, S9
//   n=10  blocks of 2 / 5 over the degree-5 classes; primitive ones inside
//         PGammaL(2,9); A10 and S10 are counted but not written
//   n=14  a curated (non-exhaustive) family list for the degree-2p suites
//
// Subgroup enumeration inside a hull uses cyclic extension: every subgroup
// is reached from the trivial group and the perfect subgroups by repeatedly
// adjoining a normalizing element of prime coset order. Perfect seeds come
// from the hull's derived series plus deterministic random 2-generated
// subgroups reduced to their perfect cores.
//
// Block systems with blocks of size 2: G <= C2 wr Q is determined by its
// flip kernel K (a Q-invariant subspace of F2^m) and one kernel-coset lift
// per generator of Q; all choices are enumerated. Two blocks of size k:
// the block kernel N <= P x P is a subdirect product (enumerated by normal
// subgroup + generator-image combinations), extended by a block swap tested
// against all of Sk x Sk modulo N.
//
// Classes are merged by conjugacy in Sn (invariant fingerprint first, then
// an exact base-point-normalized scan). Final counts are checked against
// the published numbers of transitive groups per degree.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ekr/constructions.hpp"
#include "ekr/errors.hpp"
#include "ekr/group.hpp"
#include "ekr/grp_format.hpp"
#include "ekr/perm_io.hpp"

namespace {

using namespace ekr;

Perm perm_from_fn(std::size_t n, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(f(i));
  return Perm::from_images(std::move(images));
}

PermGroup make_group(std::size_t degree, std::vector<Perm> gens,
                     const std::string& name, std::uint64_t expected_order) {
  PermGroup g = PermGroup::generate(degree, std::move(gens), 5'000'000, name);
  if (g.order() != expected_order)
    throw Error(name + ": got order " + std::to_string(g.order()) +
                ", expected " + std::to_string(expected_order));
  return g;
}

// ---------------------------------------------------------------------------
// Multiplication-table view of a small group ("hull") for fast subgroup work.
// ---------------------------------------------------------------------------

struct Hull {
  const PermGroup* g = nullptr;
  std::uint32_t n = 0;
  std::vector<std::uint16_t> mul;  // n*n, mul[a*n+b] = index of a o b
  std::vector<std::uint16_t> inv;

  std::uint16_t at(std::uint32_t a, std::uint32_t b) const {
    return mul[a * n + b];
  }
};

Hull build_hull(const PermGroup& g) {
  if (g.order() > 4000) throw Error("hull too large: " + std::to_string(g.order()));
  Hull h;
  h.g = &g;
  h.n = static_cast<std::uint32_t>(g.order());
  h.mul.resize(static_cast<std::size_t>(h.n) * h.n);
  h.inv.resize(h.n);
  for (std::uint32_t a = 0; a < h.n; ++a) {
    const Perm& pa = g.element(a);
    for (std::uint32_t b = 0; b < h.n; ++b) {
      std::uint16_t c = static_cast<std::uint16_t>(g.index_of(pa.compose(g.element(b))));
      h.mul[a * h.n + b] = c;
      if (c == 0) h.inv[a] = static_cast<std::uint16_t>(b);
    }
  }
  return h;
}

using IdxSet = std::vector<std::uint16_t>;  // sorted element indices

struct IdxSetHash {
  std::size_t operator()(const IdxSet& v) const noexcept {
    std::size_t h = v.size();
    for (std::uint16_t x : v) h = h * 1000003u + x + 0x9e3779b9u;
    return h;
  }
};

// Closure of a generator list under the table (words in the generators).
IdxSet closure_idx(const Hull& h, const IdxSet& gens) {
  std::vector<std::uint8_t> in(h.n, 0);
  IdxSet els;
  in[0] = 1;
  els.push_back(0);
  for (std::size_t qi = 0; qi < els.size(); ++qi)
    for (std::uint16_t g : gens) {
      std::uint16_t y = h.at(els[qi], g);
      if (!in[y]) {
        in[y] = 1;
        els.push_back(y);
      }
    }
  std::sort(els.begin(), els.end());
  return els;
}

IdxSet greedy_gens(const Hull& h, const IdxSet& els) {
  IdxSet gens;
  IdxSet have = {0};
  for (std::uint16_t e : els) {
    if (std::binary_search(have.begin(), have.end(), e)) continue;
    gens.push_back(e);
    have = closure_idx(h, gens);
    if (have.size() == els.size()) break;
  }
  return gens;
}

// Normal closure of `start` under conjugation by `conj` inside <conj>.
IdxSet normal_closure_idx(const Hull& h, IdxSet start, const IdxSet& conj) {
  IdxSet gens = std::move(start);
  for (;;) {
    IdxSet cur = closure_idx(h, gens);
    std::vector<std::uint8_t> in(h.n, 0);
    for (std::uint16_t x : cur) in[x] = 1;
    IdxSet fresh;
    for (std::uint16_t g : conj) {
      const std::size_t fixed = gens.size();
      for (std::size_t di = 0; di < fixed; ++di) {
        std::uint16_t c = h.at(h.at(g, gens[di]), h.inv[g]);
        if (!in[c]) {
          in[c] = 1;
          fresh.push_back(c);
        }
      }
    }
    if (fresh.empty()) return cur;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
  }
}

// Derived subgroup of the subgroup generated by `gens`.
IdxSet derived_idx(const Hull& h, const IdxSet& gens) {
  IdxSet comms;
  for (std::uint16_t a : gens)
    for (std::uint16_t b : gens) {
      // [a,b] = a^-1 o b^-1 o a o b
      std::uint16_t c = h.at(h.at(h.at(h.inv[a], h.inv[b]), a), b);
      if (c != 0) comms.push_back(c);
    }
  if (comms.empty()) return {0};
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return normal_closure_idx(h, std::move(comms), gens);
}

// Last term of the derived series of <gens> (trivial when solvable).
IdxSet perfect_core_idx(const Hull& h, IdxSet els, IdxSet gens) {
  for (;;) {
    IdxSet d = derived_idx(h, gens);
    if (d.size() == els.size()) return els;  // perfect
    if (d.size() <= 1) return {0};
    els = d;
    gens = greedy_gens(h, els);
  }
}

struct Sub {
  IdxSet els;
  IdxSet gens;
};

// All subgroups of the hull by cyclic extension from the trivial group and
// the perfect seeds.
std::vector<Sub> all_subgroups(const Hull& h, unsigned random_pairs = 6000) {
  std::unordered_set<IdxSet, IdxSetHash> seen;
  std::vector<Sub> subs;
  std::deque<std::size_t> work;

  auto add = [&](IdxSet els, IdxSet gens) {
    if (seen.insert(els).second) {
      subs.push_back({std::move(els), std::move(gens)});
      work.push_back(subs.size() - 1);
    }
  };

  add({0}, {});

  // Seeds: the hull itself, its derived series, and perfect cores of random
  // 2-generated subgroups (deterministic).
  {
    IdxSet whole(h.n);
    std::iota(whole.begin(), whole.end(), 0);
    IdxSet wgens = greedy_gens(h, whole);
    add(whole, wgens);
    IdxSet cur = whole, curgens = wgens;
    for (;;) {
      IdxSet d = derived_idx(h, curgens);
      if (d.size() <= 1 || d.size() == cur.size()) break;
      IdxSet dgens = greedy_gens(h, d);
      add(d, dgens);
      cur = std::move(d);
      curgens = std::move(dgens);
    }
  }
  std::mt19937 rng(1789);
  for (unsigned t = 0; t < random_pairs; ++t) {
    std::uint16_t x = static_cast<std::uint16_t>(rng() % h.n);
    std::uint16_t y = static_cast<std::uint16_t>(rng() % h.n);
    if (x == 0 || y == 0) continue;
    IdxSet gens = {x, y};
    IdxSet els = closure_idx(h, gens);
    IdxSet core = perfect_core_idx(h, els, gens);
    if (core.size() > 1) add(core, greedy_gens(h, core));
  }

  auto is_prime = [](std::uint32_t m) {
    if (m < 2) return false;
    for (std::uint32_t d = 2; d * d <= m; ++d)
      if (m % d == 0) return false;
    return true;
  };

  while (!work.empty()) {
    const std::size_t hi = work.front();
    work.pop_front();
    const IdxSet els = subs[hi].els;    // copy: subs may reallocate
    const IdxSet gens = subs[hi].gens;
    std::vector<std::uint8_t> in(h.n, 0);
    for (std::uint16_t x : els) in[x] = 1;

    // Normalizer of the subgroup in the hull.
    IdxSet norm;
    for (std::uint32_t w = 0; w < h.n; ++w) {
      bool ok = true;
      for (std::uint16_t g : gens)
        if (!in[h.at(h.at(static_cast<std::uint16_t>(w), g), h.inv[w])]) {
          ok = false;
          break;
        }
      if (ok) norm.push_back(static_cast<std::uint16_t>(w));
    }

    // One candidate per coset of the subgroup inside the normalizer.
    std::vector<std::uint8_t> visited(h.n, 0);
    for (std::uint16_t x : els) visited[x] = 1;
    for (std::uint16_t g : norm) {
      if (visited[g]) continue;
      for (std::uint16_t x : els) visited[h.at(x, g)] = 1;
      std::uint32_t m = 1;
      std::uint16_t p = g;
      while (!in[p]) {
        p = h.at(p, g);
        ++m;
      }
      if (!is_prime(m)) continue;
      IdxSet bigger;
      bigger.reserve(els.size() * m);
      bigger.insert(bigger.end(), els.begin(), els.end());
      std::uint16_t power = g;
      for (std::uint32_t i = 1; i < m; ++i) {
        for (std::uint16_t x : els) bigger.push_back(h.at(x, power));
        power = h.at(power, g);
      }
      std::sort(bigger.begin(), bigger.end());
      IdxSet ngens = gens;
      ngens.push_back(g);
      add(std::move(bigger), std::move(ngens));
    }
  }
  return subs;
}

bool sub_is_transitive(const Hull& h, const Sub& s) {
  const PermGroup& g = *h.g;
  std::size_t n = g.degree();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Point> frontier = {0};
  in[0] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    Point v = frontier.back();
    frontier.pop_back();
    for (std::uint16_t gi : s.gens) {
      Point w = g.element(gi)(v);
      if (!in[w]) {
        in[w] = 1;
        ++count;
        frontier.push_back(w);
      }
    }
  }
  return count == n;
}

// ---------------------------------------------------------------------------
// Candidate groups with a provenance tag.
// ---------------------------------------------------------------------------

struct Candidate {
  PermGroup group;
  std::string source;
};

std::vector<Candidate> transitive_subgroups(const PermGroup& hull_group,
                                            const std::string& source) {
  Hull h = build_hull(hull_group);
  std::vector<Candidate> out;
  for (const Sub& s : all_subgroups(h)) {
    if (s.els.size() < hull_group.degree()) continue;  // too small to be transitive
    if (!sub_is_transitive(h, s)) continue;
    std::vector<Perm> els;
    els.reserve(s.els.size());
    for (std::uint16_t i : s.els) els.push_back(hull_group.element(i));
    out.push_back({PermGroup::from_elements(hull_group.degree(), std::move(els)),
                   source});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Blocks of size 2: G <= C2 wr Q on 2m points, pairs {i, i+m}.
// ---------------------------------------------------------------------------

std::uint32_t apply_perm_to_mask(const Perm& q, std::uint32_t w, std::size_t m) {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (w >> i & 1u) r |= 1u << q(static_cast<Point>(i));
  return r;
}

std::vector<std::vector<std::uint32_t>> invariant_subspaces(const PermGroup& q,
                                                            std::size_t m) {
  // Orbits of Q on nonzero masks.
  std::vector<std::uint32_t> orbit_of(1u << m, 0);
  std::vector<std::vector<std::uint32_t>> orbit_list;
  std::vector<std::uint8_t> seen(1u << m, 0);
  seen[0] = 1;
  for (std::uint32_t v = 1; v < (1u << m); ++v) {
    if (seen[v]) continue;
    std::vector<std::uint32_t> orbit = {v};
    seen[v] = 1;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
      for (const Perm& g : q.generators()) {
        std::uint32_t w = apply_perm_to_mask(g, orbit[qi], m);
        if (!seen[w]) {
          seen[w] = 1;
          orbit.push_back(w);
        }
      }
    orbit_list.push_back(std::move(orbit));
  }
  if (orbit_list.size() > 20) throw Error("too many mask orbits");

  // Spans of unions of orbits, deduplicated: every invariant subspace is the
  // span of the orbits it contains.
  std::set<std::vector<std::uint32_t>> spans;
  for (std::uint32_t sel = 0; sel < (1u << orbit_list.size()); ++sel) {
    std::vector<std::uint8_t> in(1u << m, 0);
    std::vector<std::uint32_t> span = {0};
    in[0] = 1;
    for (std::size_t oi = 0; oi < orbit_list.size(); ++oi) {
      if (!(sel >> oi & 1u)) continue;
      for (std::uint32_t v : orbit_list[oi])
        if (!in[v]) {
          std::vector<std::uint32_t> add;
          for (std::uint32_t s : span)
            if (!in[s ^ v]) add.push_back(s ^ v);
          for (std::uint32_t a : add)
            if (!in[a]) {
              in[a] = 1;
              span.push_back(a);
            }
        }
    }
    std::sort(span.begin(), span.end());
    spans.insert(std::move(span));
  }
  return {spans.begin(), spans.end()};
}

std::vector<Candidate> blocks_of_2(const std::vector<PermGroup>& tops) {
  const std::size_t m = tops.front().degree();
  const std::size_t deg = 2 * m;
  auto flip = [&](std::uint32_t mask) {
    return perm_from_fn(deg, [&](std::size_t x) {
      std::size_t i = x < m ? x : x - m;
      bool f = mask >> i & 1u;
      return x < m ? (f ? x + m : x) : (f ? x - m : x);
    });
  };
  auto lift = [&](std::uint32_t v, const Perm& q) {
    return perm_from_fn(deg, [&](std::size_t x) {
      std::size_t j = q(static_cast<Point>(x < m ? x : x - m));
      bool f = v >> j & 1u;
      bool lower = x < m;
      return (lower != f) ? j : j + m;
    });
  };

  std::vector<Candidate> out;
  for (const PermGroup& q : tops) {
    const auto& qgens = q.generators();
    if (qgens.size() > 3) throw Error("quotient with too many generators");
    for (const auto& span : invariant_subspaces(q, m)) {
      std::vector<std::uint8_t> in_span(1u << m, 0);
      for (std::uint32_t v : span) in_span[v] = 1;
      // Basis of the span.
      std::vector<Perm> kernel_gens;
      {
        std::vector<std::uint32_t> basis;
        std::vector<std::uint8_t> got(1u << m, 0);
        got[0] = 1;
        std::vector<std::uint32_t> have = {0};
        for (std::uint32_t v : span)
          if (!got[v]) {
            basis.push_back(v);
            std::vector<std::uint32_t> add;
            for (std::uint32_t s : have) add.push_back(s ^ v);
            for (std::uint32_t a : add)
              if (!got[a]) {
                got[a] = 1;
                have.push_back(a);
              }
          }
        for (std::uint32_t b : basis) kernel_gens.push_back(flip(b));
      }
      // Coset representatives of the span in F2^m.
      std::vector<std::uint32_t> reps;
      {
        std::vector<std::uint8_t> covered(1u << m, 0);
        for (std::uint32_t v = 0; v < (1u << m); ++v)
          if (!covered[v]) {
            reps.push_back(v);
            for (std::uint32_t s : span) covered[v ^ s] = 1;
          }
      }
      const std::uint64_t target = std::uint64_t(span.size()) * q.order();
      // Odometer over one coset representative per quotient generator.
      std::vector<std::size_t> pick(qgens.size(), 0);
      for (;;) {
        std::vector<Perm> gens = kernel_gens;
        for (std::size_t i = 0; i < qgens.size(); ++i)
          gens.push_back(lift(reps[pick[i]], qgens[i]));
        try {
          PermGroup g = PermGroup::generate(deg, std::move(gens), target);
          if (g.order() == target && is_transitive(g))
            out.push_back({std::move(g), "2-block lift over " + q.name()});
        } catch (const CapExceeded&) {
          // kernel grew past the chosen subspace; another choice covers this
        }
        std::size_t d = 0;
        while (d < pick.size() && ++pick[d] == reps.size()) pick[d++] = 0;
        if (d == pick.size()) break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Two blocks of size k: N <= P x P subdirect, extended by a block swap.
// ---------------------------------------------------------------------------

std::vector<Candidate> two_blocks(const std::vector<PermGroup>& bottoms) {
  const std::size_t k = bottoms.front().degree();
  const std::size_t deg = 2 * k;
  auto diag = [&](const Perm& a, const Perm& b) {
    return perm_from_fn(deg, [&](std::size_t x) {
      return x < k ? a(static_cast<Point>(x))
                   : k + b(static_cast<Point>(x - k));
    });
  };
  auto swapper = [&](const Perm& a, const Perm& b) {
    // i -> k + b(i), k+j -> a(j); squares to diag(a o b, b o a).
    return perm_from_fn(deg, [&](std::size_t x) {
      return x < k ? k + b(static_cast<Point>(x))
                   : static_cast<std::size_t>(a(static_cast<Point>(x - k)));
    });
  };
  PermGroup sym_k = symmetric_group(k);

  std::vector<Candidate> out;
  for (const PermGroup& p : bottoms) {
    Hull hp = build_hull(p);
    const auto& pgens = p.generators();
    if (pgens.size() > 3) throw Error("bottom with too many generators");

    // Normal subgroups of P.
    std::vector<Sub> normals;
    for (const Sub& s : all_subgroups(hp, 2000)) {
      std::vector<std::uint8_t> in(hp.n, 0);
      for (std::uint16_t x : s.els) in[x] = 1;
      bool normal = true;
      for (std::uint32_t w = 0; w < hp.n && normal; ++w)
        for (std::uint16_t g : s.gens)
          if (!in[hp.at(hp.at(static_cast<std::uint16_t>(w), g), hp.inv[w])]) {
            normal = false;
            break;
          }
      if (normal) normals.push_back(s);
    }

    for (const Sub& m_sub : normals) {
      std::vector<std::uint8_t> in_m(hp.n, 0);
      for (std::uint16_t x : m_sub.els) in_m[x] = 1;
      // Coset representatives of M in P.
      std::vector<std::uint16_t> reps;
      {
        std::vector<std::uint8_t> covered(hp.n, 0);
        for (std::uint32_t v = 0; v < hp.n; ++v)
          if (!covered[v]) {
            reps.push_back(static_cast<std::uint16_t>(v));
            for (std::uint16_t s : m_sub.els)
              covered[hp.at(s, static_cast<std::uint16_t>(v))] = 1;
          }
      }
      const std::uint64_t ntarget = p.order() * m_sub.els.size();

      std::vector<std::size_t> pick(pgens.size(), 0);
      for (;;) {
        // Second projection must be all of P.
        IdxSet proj_gens = m_sub.gens;
        for (std::size_t i = 0; i < pgens.size(); ++i)
          proj_gens.push_back(reps[pick[i]]);
        bool onto = closure_idx(hp, proj_gens).size() == p.order();
        if (onto) {
          std::vector<Perm> ngens;
          for (std::uint16_t mg : m_sub.gens)
            ngens.push_back(diag(Perm::identity(k), p.element(mg)));
          for (std::size_t i = 0; i < pgens.size(); ++i)
            ngens.push_back(diag(pgens[i], p.element(reps[pick[i]])));
          try {
            PermGroup n_grp = PermGroup::generate(deg, std::move(ngens), ntarget);
            if (n_grp.order() == ntarget) {
              // Swap extensions: one representative per N-coset of valid swaps.
              std::vector<Perm> accepted;
              for (const Perm& a : sym_k.elements())
                for (const Perm& b : sym_k.elements()) {
                  Perm t = swapper(a, b);
                  if (!n_grp.contains(t.compose(t))) continue;
                  bool normalizes = true;
                  Perm tinv = t.inverse();
                  for (const Perm& ng : n_grp.generators())
                    if (!n_grp.contains(t.compose(ng).compose(tinv))) {
                      normalizes = false;
                      break;
                    }
                  if (!normalizes) continue;
                  bool dup = false;
                  for (const Perm& prev : accepted)
                    if (n_grp.contains(t.compose(prev.inverse()))) {
                      dup = true;
                      break;
                    }
                  if (dup) continue;
                  accepted.push_back(t);
                  std::vector<Perm> els = n_grp.elements();
                  for (const Perm& ne : n_grp.elements())
                    els.push_back(ne.compose(t));
                  PermGroup g = PermGroup::from_elements(deg, std::move(els));
                  if (is_transitive(g))
                    out.push_back({std::move(g),
                                   "block swap over " + p.name()});
                }
            }
          } catch (const CapExceeded&) {
          }
        }
        std::size_t d = 0;
        while (d < pick.size() && ++pick[d] == reps.size()) pick[d++] = 0;
        if (d == pick.size()) break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit hulls: affine and projective groups of small degree.
// ---------------------------------------------------------------------------

PermGroup frobenius_hull(std::size_t p, std::size_t mult, const std::string& name,
                         std::uint64_t expected) {
  // <x -> x+1, x -> mult*x> on 0..p-1.
  std::vector<Perm> gens = {
      perm_from_fn(p, [&](std::size_t x) { return (x + 1) % p; }),
      perm_from_fn(p, [&](std::size_t x) { return x * mult % p; })};
  return make_group(p, std::move(gens), name, expected);
}

// PGL(2,q) on the projective line {0..q-1, inf=q} for prime q.
PermGroup pgl2_prime(std::size_t q, std::size_t scalar, std::uint64_t expected,
                     const std::string& name) {
  const std::size_t inf = q;
  auto inv_mod = [&](std::size_t x) {
    for (std::size_t y = 1; y < q; ++y)
      if (x * y % q == 1) return y;
    throw Error("no inverse");
  };
  std::vector<Perm> gens = {
      perm_from_fn(q + 1, [&](std::size_t x) { return x == inf ? inf : (x + 1) % q; }),
      perm_from_fn(q + 1, [&](std::size_t x) { return x == inf ? inf : x * scalar % q; }),
      perm_from_fn(q + 1, [&](std::size_t x) {
        if (x == 0) return inf;
        if (x == inf) return std::size_t(0);
        return inv_mod(x);
      })};
  return make_group(q + 1, std::move(gens), name, expected);
}

// PSL(2,13) on 14 points: like PGL but with -1/x and square scalars only.
PermGroup psl2_13_on14() {
  const std::size_t q = 13, inf = q;
  auto inv_mod = [&](std::size_t x) {
    for (std::size_t y = 1; y < q; ++y)
      if (x * y % q == 1) return y;
    throw Error("no inverse");
  };
  std::vector<Perm> gens = {
      perm_from_fn(q + 1, [&](std::size_t x) { return x == inf ? inf : (x + 1) % q; }),
      perm_from_fn(q + 1, [&](std::size_t x) { return x == inf ? inf : x * 4 % q; }),
      perm_from_fn(q + 1, [&](std::size_t x) {
        if (x == 0) return inf;
        if (x == inf) return std::size_t(0);
        return (q - inv_mod(x)) % q;
      })};
  return make_group(q + 1, std::move(gens), "PSL(2,13)", 1092);
}

// GL(3,2) acting on the 7 nonzero vectors of F2^3 (projective plane).
PermGroup psl3_2_on7() {
  auto rot = [](std::size_t v) {  // coordinate 3-cycle
    return ((v << 1) & 0b110) | ((v >> 2) & 1);
  };
  auto shear = [](std::size_t v) {  // x0 += x1
    return v ^ ((v >> 1) & 1);
  };
  std::vector<Perm> gens = {
      perm_from_fn(7, [&](std::size_t x) { return rot(x + 1) - 1; }),
      perm_from_fn(7, [&](std::size_t x) { return shear(x + 1) - 1; })};
  return make_group(7, std::move(gens), "PSL(3,2)", 168);
}

// AGL(3,2) on the 8 vectors of F2^3.
PermGroup agl3_2_on8() {
  std::vector<Perm> gens = {
      perm_from_fn(8, [](std::size_t v) { return ((v << 1) & 0b110) | ((v >> 2) & 1); }),
      perm_from_fn(8, [](std::size_t v) { return v ^ ((v >> 1) & 1); }),
      perm_from_fn(8, [](std::size_t v) { return v ^ 1; })};
  return make_group(8, std::move(gens), "AGL(3,2)", 1344);
}

// AGL(2,3) on the 9 vectors of F3^2, encoded 3a+b.
PermGroup agl2_3_on9() {
  auto enc = [](std::size_t a, std::size_t b) { return 3 * a + b; };
  std::vector<Perm> gens = {
      perm_from_fn(9, [&](std::size_t x) { return enc((x / 3 + x % 3) % 3, x % 3); }),
      perm_from_fn(9, [&](std::size_t x) { return enc(2 * (x % 3) % 3, x / 3); }),
      perm_from_fn(9, [&](std::size_t x) { return enc(2 * (x / 3) % 3, x % 3); }),
      perm_from_fn(9, [&](std::size_t x) { return enc((x / 3 + 1) % 3, x % 3); }),
      perm_from_fn(9, [&](std::size_t x) { return enc(x / 3, (x % 3 + 1) % 3); })};
  return make_group(9, std::move(gens), "AGL(2,3)", 432);
}

// PGammaL(2,8) on the projective line over F8 (9 points).
PermGroup pgammal2_8_on9() {
  auto mul8 = [](std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & 8) a ^= 0b1011;  // x^3 = x + 1
    }
    return r;
  };
  auto inv8 = [&](std::uint32_t a) {
    for (std::uint32_t x = 1; x < 8; ++x)
      if (mul8(a, x) == 1) return x;
    throw Error("no inverse");
  };
  const std::size_t inf = 8;
  std::vector<Perm> gens = {
      perm_from_fn(9, [&](std::size_t x) { return x == inf ? inf : x ^ 1; }),
      perm_from_fn(9, [&](std::size_t x) {
        return x == inf ? inf : static_cast<std::size_t>(mul8(static_cast<std::uint32_t>(x), 2));
      }),
      perm_from_fn(9, [&](std::size_t x) {
        if (x == 0) return inf;
        if (x == inf) return std::size_t(0);
        return static_cast<std::size_t>(inv8(static_cast<std::uint32_t>(x)));
      }),
      perm_from_fn(9, [&](std::size_t x) {
        return x == inf ? inf
                        : static_cast<std::size_t>(mul8(static_cast<std::uint32_t>(x),
                                                        static_cast<std::uint32_t>(x)));
      })};
  return make_group(9, std::move(gens), "PGammaL(2,8)", 1512);
}

// PGammaL(2,9) on the projective line over F9 (10 points); F9 = F3[i], i^2=-1,
// z = a+bi encoded as 3a+b, inf = 9.
PermGroup pgammal2_9_on10() {
  auto mul9 = [](std::size_t z, std::size_t w) {
    std::size_t a = z / 3, b = z % 3, c = w / 3, d = w % 3;
    std::size_t re = (a * c + 2 * b * d) % 3;  // ac - bd
    std::size_t im = (a * d + b * c) % 3;
    return 3 * re + im;
  };
  auto inverse9 = [&](std::size_t z) {
    for (std::size_t x = 1; x < 9; ++x)
      if (mul9(z, x) == 3)  // 3 encodes 1 + 0i
        return x;
    throw Error("no inverse");
  };
  const std::size_t inf = 9;
  std::vector<Perm> gens = {
      perm_from_fn(10, [&](std::size_t z) {
        return z == inf ? inf : 3 * ((z / 3 + 1) % 3) + z % 3;
      }),
      perm_from_fn(10, [&](std::size_t z) {
        return z == inf ? inf : mul9(z, 4);  // 4 encodes 1+i, of order 8
      }),
      perm_from_fn(10, [&](std::size_t z) {
        if (z == 0) return inf;
        if (z == inf) return std::size_t(0);
        return inverse9(z);
      }),
      perm_from_fn(10, [&](std::size_t z) {
        if (z == inf) return inf;
        return 3 * (z / 3) + (3 - z % 3) % 3;  // Frobenius a+bi -> a-bi
      })};
  return make_group(10, std::move(gens), "PGammaL(2,9)", 1440);
}

// ---------------------------------------------------------------------------
// Conjugacy classes of transitive groups: fingerprint + exact scan.
// ---------------------------------------------------------------------------

std::string fingerprint(const PermGroup& g) {
  std::ostringstream os;
  os << g.degree() << "|" << g.order() << "|" << is_2_transitive(g) << "|";
  // Block systems (count x size, sorted).
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (const auto& bs : all_block_systems(g))
    blocks.emplace_back(bs.blocks.size(), bs.block_size());
  std::sort(blocks.begin(), blocks.end());
  for (auto [c, s] : blocks) os << c << "x" << s << ",";
  os << "|";
  // Suborbit lengths of the stabilizer of 0.
  {
    std::vector<std::uint32_t> stab;
    for (std::uint32_t i = 0; i < g.order(); ++i)
      if (g.element(i)(0) == 0) stab.push_back(i);
    std::vector<std::uint32_t> comp(g.degree());
    std::iota(comp.begin(), comp.end(), 0);
    std::vector<std::size_t> lens;
    std::vector<std::uint8_t> seen(g.degree(), 0);
    for (std::size_t v = 0; v < g.degree(); ++v) {
      if (seen[v]) continue;
      std::vector<Point> orb = {static_cast<Point>(v)};
      seen[v] = 1;
      for (std::size_t qi = 0; qi < orb.size(); ++qi)
        for (std::uint32_t si : stab) {
          Point w = g.element(si)(orb[qi]);
          if (!seen[w]) {
            seen[w] = 1;
            orb.push_back(w);
          }
        }
      lens.push_back(orb.size());
    }
    std::sort(lens.begin(), lens.end());
    for (std::size_t l : lens) os << l << ",";
  }
  os << "|";
  // Multiset of cycle types, folded to one hash.
  std::vector<std::uint64_t> types;
  types.reserve(g.order());
  for (const Perm& p : g.elements()) {
    std::uint64_t t = 1469598103934665603ull;
    for (std::size_t c : p.cycle_type()) t = (t ^ c) * 1099511628211ull;
    types.push_back(t);
  }
  std::sort(types.begin(), types.end());
  std::uint64_t fold = types.size();
  for (std::uint64_t t : types) fold = (fold ^ t) * 1099511628211ull;
  os << fold;
  return os.str();
}

bool conjugate_in_sym(const PermGroup& h1, const PermGroup& h2) {
  if (h1.degree() != h2.degree() || h1.order() != h2.order()) return false;
  const std::size_t n = h1.degree();
  if (n > 10) throw Error("conjugacy scan not supported past degree 10");
  if (h1.order() > 20000)
    throw Error("conjugacy scan on unexpectedly large group");
  std::unordered_set<Perm, PermHash> set2(h2.elements().begin(),
                                          h2.elements().end());
  std::vector<Point> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  const auto& gens = h1.generators();
  do {
    std::vector<Point> img(n);
    img[0] = 0;
    for (std::size_t i = 1; i < n; ++i) img[i] = rest[i - 1];
    Perm gamma = Perm::from_images(img);
    Perm ginv = gamma.inverse();
    bool ok = true;
    for (const Perm& g : gens)
      if (!set2.count(gamma.compose(g).compose(ginv))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

struct ClassEntry {
  PermGroup group;
  std::string source;
  std::string print;
};

std::vector<ClassEntry> merge_classes(std::vector<Candidate> pool,
                                      bool exact_scan) {
  std::vector<ClassEntry> classes;
  std::unordered_map<std::string, std::vector<std::size_t>> by_print;
  for (Candidate& c : pool) {
    std::string fp = fingerprint(c.group);
    auto& bucket = by_print[fp];
    bool merged = false;
    for (std::size_t idx : bucket) {
      if (!exact_scan)
        throw Error("fingerprint collision in a curated list: " + fp);
      if (conjugate_in_sym(c.group, classes[idx].group)) {
        merged = true;
        break;
      }
    }
    if (!merged) {
      bucket.push_back(classes.size());
      classes.push_back({std::move(c.group), std::move(c.source), std::move(fp)});
    }
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const ClassEntry& a, const ClassEntry& b) {
                     if (a.group.order() != b.group.order())
                       return a.group.order() < b.group.order();
                     return a.print < b.print;
                   });
  return classes;
}

// ---------------------------------------------------------------------------
// Output.
// ---------------------------------------------------------------------------

struct DegreeResult {
  std::size_t degree = 0;
  bool complete = true;
  std::size_t total_classes = 0;    // including counted-only giants
  std::vector<ClassEntry> classes;  // materialized ones
  std::vector<std::string> counted_only;
  std::uint64_t write_cap = 0;  // 0 = no cap
  std::string note;
};

nlohmann::ordered_json write_degree(const std::filesystem::path& root,
                                    DegreeResult& r) {
  namespace fs = std::filesystem;
  fs::path dir = root / ("deg" + std::to_string(r.degree));
  fs::create_directories(dir);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  std::size_t written = 0;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    ClassEntry& c = r.classes[i];
    std::string name = "d" + std::to_string(r.degree) + "." + std::to_string(i + 1);
    c.group.set_name(name);
    if (r.write_cap && c.group.order() > r.write_cap) continue;
    char fname[64];
    std::snprintf(fname, sizeof fname, "t%02zu-o%llu.grp", i + 1,
                  static_cast<unsigned long long>(c.group.order()));
    fs::path file = dir / fname;
    write_grp_file(file, c.group,
                   "transitive group " + name + "; source: " + c.source);
    ++written;
    bool prim = is_primitive(c.group);
    nlohmann::ordered_json e;
    e["name"] = name;
    e["file"] = "deg" + std::to_string(r.degree) + "/" + fname;
    e["order"] = c.group.order();
    e["primitive"] = prim;
    e["source"] = c.source;
    entries.push_back(std::move(e));
  }
  nlohmann::ordered_json d;
  d["degree"] = r.degree;
  d["complete"] = r.complete;
  d["classes"] = r.total_classes;
  d["written"] = written;
  if (r.write_cap) d["order_cap"] = r.write_cap;
  if (!r.counted_only.empty()) d["counted_only"] = r.counted_only;
  if (!r.note.empty()) d["note"] = r.note;
  d["entries"] = std::move(entries);
  std::cout << "degree " << r.degree << ": " << r.total_classes << " classes, "
            << written << " written\n";
  return d;
}

void append_candidates(std::vector<Candidate>& pool, std::vector<Candidate> more) {
  for (Candidate& c : more) pool.push_back(std::move(c));
}

}  // namespace

int main(int argc, char** argv) {
  try {
    std::filesystem::path root = argc > 1 ? argv[1] : "data/catalogs";
    const std::map<std::size_t, std::size_t> expected = {
        {4, 5}, {5, 5}, {6, 16}, {7, 7}, {8, 50}, {9, 34}, {10, 45}};

    std::vector<DegreeResult> results;
    std::vector<PermGroup> deg3 = {cyclic_group(3), symmetric_group(3)};
    std::vector<PermGroup> deg4_classes, deg5_classes;

    // Degree 4.
    {
      std::vector<Candidate> pool =
          transitive_subgroups(symmetric_group(4), "subgroup of S4");
      DegreeResult r;
      r.degree = 4;
      r.classes = merge_classes(std::move(pool), true);
      r.total_classes = r.classes.size();
      for (const ClassEntry& c : r.classes) deg4_classes.push_back(c.group);
      results.push_back(std::move(r));
    }

    // Degree 5.
    {
      std::vector<Candidate> pool = transitive_subgroups(
          frobenius_hull(5, 2, "AGL(1,5)", 20), "subgroup of AGL(1,5)");
      pool.push_back({alternating_group(5), "alternating group"});
      pool.push_back({symmetric_group(5), "symmetric group"});
      DegreeResult r;
      r.degree = 5;
      r.classes = merge_classes(std::move(pool), true);
      r.total_classes = r.classes.size();
      for (const ClassEntry& c : r.classes) deg5_classes.push_back(c.group);
      results.push_back(std::move(r));
    }

    // Degree 6.
    {
      std::vector<Candidate> pool;
      append_candidates(pool, blocks_of_2(deg3));
      append_candidates(pool, two_blocks(deg3));
      append_candidates(pool,
                        transitive_subgroups(pgl2_prime(5, 2, 120, "PGL(2,5)"),
                                             "subgroup of PGL(2,5)"));
      pool.push_back({alternating_group(6), "alternating group"});
      pool.push_back({symmetric_group(6), "symmetric group"});
      DegreeResult r;
      r.degree = 6;
      r.classes = merge_classes(std::move(pool), true);
      r.total_classes = r.classes.size();
      results.push_back(std::move(r));
    }

    // Degree 7.
    {
      std::vector<Candidate> pool = transitive_subgroups(
          frobenius_hull(7, 3, "AGL(1,7)", 42), "subgroup of AGL(1,7)");
      append_candidates(
          pool, transitive_subgroups(psl3_2_on7(), "subgroup of PSL(3,2)"));
      pool.push_back({alternating_group(7), "alternating group"});
      pool.push_back({symmetric_group(7), "symmetric group"});
      DegreeResult r;
      r.degree = 7;
      r.classes = merge_classes(std::move(pool), true);
      r.total_classes = r.classes.size();
      results.push_back(std::move(r));
    }

    // Degree 8.
    {
      std::vector<Candidate> pool;
      append_candidates(pool, blocks_of_2(deg4_classes));
      append_candidates(pool, two_blocks(deg4_classes));
      append_candidates(pool,
                        transitive_subgroups(pgl2_prime(7, 3, 336, "PGL(2,7)"),
                                             "subgroup of PGL(2,7)"));
      append_candidates(
          pool, transitive_subgroups(agl3_2_on8(), "subgroup of AGL(3,2)"));
      pool.push_back({alternating_group(8), "alternating group"});
      pool.push_back({symmetric_group(8), "symmetric group"});
      DegreeResult r;
      r.degree = 8;
      r.classes = merge_classes(std::move(pool), true);
      r.total_classes = r.classes.size();
      results.push_back(std::move(r));
    }

    // Degree 9.
    {
      std::vector<Candidate> pool = transitive_subgroups(
          wreath_product(symmetric_group(3), symmetric_group(3)),
          "subgroup of S3 wr S3");
      append_candidates(
          pool, transitive_subgroups(agl2_3_on9(), "subgroup of AGL(2,3)"));
      append_candidates(pool, transitive_subgroups(pgammal2_8_on9(),
                                                   "subgroup of PGammaL(2,8)"));
      pool.push_back({alternating_group(9), "alternating group"});
      pool.push_back({symmetric_group(9), "symmetric group"});
      DegreeResult r;
      r.degree = 9;
      r.classes = merge_classes(std::move(pool), true);
      r.total_classes = r.classes.size();
      results.push_back(std::move(r));
    }

    // Degree 10: A10 and S10 are counted but too large to bundle; files are
    // restricted to order <= 5000.
    {
      std::vector<Candidate> pool;
      append_candidates(pool, blocks_of_2(deg5_classes));
      append_candidates(pool, two_blocks(deg5_classes));
      append_candidates(pool, transitive_subgroups(pgammal2_9_on10(),
                                                   "subgroup of PGammaL(2,9)"));
      DegreeResult r;
      r.degree = 10;
      r.classes = merge_classes(std::move(pool), true);
      r.total_classes = r.classes.size() + 2;
      r.counted_only = {"A10 (order 1814400)", "S10 (order 3628800)"};
      r.write_cap = 5000;
      r.note = "files restricted to order <= 5000";
      results.push_back(std::move(r));
    }

    // Degree 14: curated families, not a complete catalog.
    {
      std::vector<Candidate> pool;
      pool.push_back({cyclic_group(14), "cyclic"});
      pool.push_back({dihedral_group(14), "dihedral"});
      std::vector<std::uint64_t> full = {kAdjacentPairSeed};
      std::vector<std::uint64_t> simplex = {0b1110100};
      pool.push_back({thm16i_group(7, simplex), "simplex-code kernel x| 7-cycle"});
      pool.push_back({thm16i_group(7, full), "even-weight kernel x| 7-cycle"});
      pool.push_back({wreath_product(symmetric_group(2), cyclic_group(7)),
                      "wreath product"});
      pool.push_back({wreath_product(symmetric_group(2), dihedral_group(7)),
                      "wreath product"});
      pool.push_back({frobenius_lift(7, 2, full), "even-weight kernel lift d=2"});
      pool.push_back({frobenius_lift(7, 3, full), "even-weight kernel lift d=3"});
      pool.push_back({frobenius_lift(7, 6, full), "even-weight kernel lift d=6"});
      pool.push_back({frobenius_lift(7, 3, simplex), "simplex-code kernel lift d=3"});
      pool.push_back({psl2_13_on14(), "projective line over F13"});
      pool.push_back({pgl2_prime(13, 2, 2184, "PGL(2,13)"), "projective line over F13"});
      DegreeResult r;
      r.degree = 14;
      r.classes = merge_classes(std::move(pool), false);
      r.total_classes = r.classes.size();
      r.complete = false;
      r.note = "curated degree-2p families; not a complete catalog";
      results.push_back(std::move(r));
    }

    bool ok = true;
    for (const DegreeResult& r : results) {
      auto it = expected.find(r.degree);
      if (it == expected.end()) continue;
      if (r.total_classes != it->second) {
        ok = false;
        std::cerr << "degree " << r.degree << ": found " << r.total_classes
                  << " classes, published count is " << it->second << "\n";
        for (const ClassEntry& c : r.classes)
          std::cerr << "  order " << c.group.order() << "  [" << c.source
                    << "]\n";
      }
    }
    if (!ok) return 1;

    std::filesystem::create_directories(root);
    nlohmann::ordered_json manifest;
    manifest["tool"] = "ekr-catgen";
    nlohmann::ordered_json pub;
    for (auto [deg, count] : expected) pub[std::to_string(deg)] = count;
    manifest["published_transitive_counts"] = std::move(pub);
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (DegreeResult& r : results) degrees.push_back(write_degree(root, r));
    manifest["degrees"] = std::move(degrees);
    std::ofstream mf(root / "manifest.json");
    mf << manifest.dump(2) << "\n";
    std::cout << "catalogs written to " << root << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
