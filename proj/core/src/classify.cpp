#include "ekr/classify.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ekr/constructions.hpp"

namespace ekr {

std::string to_string(TwoPClass c) {
  switch (c) {
    case TwoPClass::RHO_ONE: return "RHO_ONE";
    case TwoPClass::CASE_I: return "CASE_I";
    case TwoPClass::CASE_II: return "CASE_II";
  }
  return "?";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::PASS: return "PASS";
    case CheckStatus::FAIL: return "FAIL";
    case CheckStatus::SKIP: return "SKIP";
  }
  return "?";
}

namespace {

std::optional<std::size_t> odd_prime_half(std::size_t degree) {
  if (degree % 2 != 0) return std::nullopt;
  std::size_t p = degree / 2;
  if (p >= 3 && is_prime(p)) return p;
  return std::nullopt;
}

// n = p^k with p prime, k >= 1.
std::optional<std::pair<std::size_t, std::size_t>> prime_power(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = n;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  std::size_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

bool rational_le(const Rational& a, const Rational& b) {
  return a.num * b.den <= b.num * a.den;
}
bool rational_lt(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

}  // namespace

Classification2p classify_2p(const PermGroup& g) {
  auto p = odd_prime_half(g.degree());
  if (!p) throw InvalidInput("degree is not twice an odd prime");
  if (!is_transitive(g)) throw InvalidInput("group is not transitive");
  Classification2p out;
  out.p = *p;
  if (is_primitive(g)) {
    out.primitive = true;
    if (is_2_transitive(g)) {
      out.cls = TwoPClass::RHO_ONE;
      out.detail = "two-transitive";
    } else if (g.degree() == 10 && g.order() == 60) {
      out.cls = TwoPClass::CASE_II;
      out.detail = "simply primitive of order 60 on 10 points";
    } else if (g.degree() == 10 && g.order() == 120) {
      out.cls = TwoPClass::RHO_ONE;
      out.detail = "simply primitive of order 120 on 10 points";
    } else {
      throw Error("unexpected simply primitive group of degree 2p (order " +
                  std::to_string(g.order()) + ", degree " +
                  std::to_string(g.degree()) + ")");
    }
  } else {
    out.cls = TwoPClass::RHO_ONE;
    out.detail = "imprimitive without a qualifying 2-block system";
    for (const BlockSystem& bs : all_block_systems(g)) {
      if (bs.block_size() != 2) continue;
      QuotientAction qa = quotient_action(g, bs);
      if (qa.quotient.order() == *p && qa.kernel.order() > 1 &&
          is_subgroup_alternating(qa.kernel)) {
        out.cls = TwoPClass::CASE_I;
        out.detail =
            "2-blocks with quotient of order p and a nontrivial all-even kernel";
        break;
      }
    }
  }
  out.predicted_rho =
      out.cls == TwoPClass::RHO_ONE ? Rational{1, 1} : Rational{2, 1};
  return out;
}

// ---- Suites ----

namespace {

struct SuiteContext {
  std::vector<PermGroup> groups;
  DensityOptions base;
  bool force_small_exact = false;  // exact search for orders <= 5000
  std::vector<std::optional<DensityResult>> cache;

  const DensityResult& rho_of(std::size_t i) {
    if (!cache[i]) {
      DensityOptions o = base;
      if (force_small_exact && groups[i].order() <= 5000) o.force_exact = true;
      cache[i] = intersection_density(groups[i], o);
    }
    return *cache[i];
  }
  std::string subject(std::size_t i) const {
    const PermGroup& g = groups[i];
    if (!g.name().empty()) return g.name();
    return "degree-" + std::to_string(g.degree()) + " order-" +
           std::to_string(g.order());
  }
};

void add_check(SuiteReport& rep, std::string subject, CheckStatus status,
               std::string detail) {
  rep.checks.push_back({std::move(subject), status, std::move(detail)});
  if (status == CheckStatus::PASS) ++rep.passed;
  if (status == CheckStatus::FAIL) ++rep.failed;
  if (status == CheckStatus::SKIP) ++rep.skipped;
}

void suite_thm_main2(SuiteContext& ctx, SuiteReport& rep) {
  ctx.force_small_exact = true;
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    const PermGroup& g = ctx.groups[i];
    auto pk = prime_power(g.degree());
    if (!pk) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP, "degree is not a prime power");
      continue;
    }
    if (!is_transitive(g)) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP, "not transitive");
      continue;
    }
    const DensityResult& r = ctx.rho_of(i);
    bool pass = r.rho == Rational{1, 1};
    add_check(rep, ctx.subject(i), pass ? CheckStatus::PASS : CheckStatus::FAIL,
              "degree " + std::to_string(g.degree()) + " = " +
                  std::to_string(pk->first) + "^" + std::to_string(pk->second) +
                  ", rho = " + to_string(r.rho));
  }
}

void suite_thm_main3(SuiteContext& ctx, SuiteReport& rep) {
  ctx.force_small_exact = true;
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    const PermGroup& g = ctx.groups[i];
    if (!odd_prime_half(g.degree())) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "degree is not twice an odd prime");
      continue;
    }
    if (!is_transitive(g)) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP, "not transitive");
      continue;
    }
    Classification2p cls;
    try {
      cls = classify_2p(g);
    } catch (const Error& e) {
      add_check(rep, ctx.subject(i), CheckStatus::FAIL, e.what());
      continue;
    }
    const DensityResult& r = ctx.rho_of(i);
    bool pass = r.rho == cls.predicted_rho;
    add_check(rep, ctx.subject(i), pass ? CheckStatus::PASS : CheckStatus::FAIL,
              to_string(cls.cls) + " (" + cls.detail + ") predicts rho = " +
                  to_string(cls.predicted_rho) + ", computed rho = " +
                  to_string(r.rho));
  }
}

void suite_lem_semiq(SuiteContext& ctx, SuiteReport& rep) {
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    const PermGroup& g = ctx.groups[i];
    if (!is_transitive(g) || g.degree() % 2 != 0) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "not transitive of even degree");
      continue;
    }
    bool applicable = false;
    for (const BlockSystem& bs : all_block_systems(g)) {
      if (bs.block_size() != 2) continue;
      QuotientAction qa = quotient_action(g, bs);
      bool has_flip = false;
      for (const Perm& k : qa.kernel.elements())
        if (k.is_derangement() && k.order() == 2) {
          has_flip = true;
          break;
        }
      if (!has_flip) continue;
      applicable = true;
      const DensityResult& rg = ctx.rho_of(i);
      DensityResult rq = intersection_density(qa.quotient, ctx.base);
      bool pass = rational_le(rg.rho, rq.rho);
      add_check(rep, ctx.subject(i), pass ? CheckStatus::PASS : CheckStatus::FAIL,
                "rho(G) = " + to_string(rg.rho) + " vs quotient rho = " +
                    to_string(rq.rho) + " on " +
                    std::to_string(bs.blocks.size()) + " blocks");
    }
    if (!applicable)
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "no block system arising from a fixed-point-free kernel involution");
  }
}

void suite_prop_minimal(SuiteContext& ctx, SuiteReport& rep) {
  bool any = false;
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    for (std::size_t j = 0; j < ctx.groups.size(); ++j) {
      if (i == j) continue;
      const PermGroup& big = ctx.groups[i];
      const PermGroup& sub = ctx.groups[j];
      if (big.degree() != sub.degree() || sub.order() >= big.order()) continue;
      if (!is_transitive(big) || !is_transitive(sub)) continue;
      bool contained = true;
      for (const Perm& p : sub.elements())
        if (!big.contains(p)) {
          contained = false;
          break;
        }
      if (!contained) continue;
      any = true;
      const DensityResult& rg = ctx.rho_of(i);
      const DensityResult& rh = ctx.rho_of(j);
      bool pass = rational_le(rg.rho, rh.rho);
      add_check(rep, ctx.subject(j) + " <= " + ctx.subject(i),
                pass ? CheckStatus::PASS : CheckStatus::FAIL,
                "rho(G) = " + to_string(rg.rho) +
                    ", rho(H) = " + to_string(rh.rho));
    }
  }
  if (!any)
    add_check(rep, "(no pairs)", CheckStatus::SKIP,
              "no transitive subgroup pairs among the inputs");
}

void suite_prop_semiregular(SuiteContext& ctx, SuiteReport& rep) {
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    const PermGroup& g = ctx.groups[i];
    auto semis = find_semiregular_elements(g);
    if (semis.empty()) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP, "no semiregular element");
      continue;
    }
    const DensityResult& r = ctx.rho_of(i);
    std::size_t max_len = 0;
    bool pass = true;
    for (const SemiregularElement& s : semis) {
      max_len = std::max(max_len, s.cycle_length);
      if (r.alpha * s.cycle_length > g.order()) pass = false;
    }
    add_check(rep, ctx.subject(i), pass ? CheckStatus::PASS : CheckStatus::FAIL,
              "alpha = " + std::to_string(r.alpha) + ", " +
                  std::to_string(semis.size()) +
                  " semiregular elements, max cycle length " +
                  std::to_string(max_len));
  }
}

void suite_prop_dm2(SuiteContext& ctx, SuiteReport& rep) {
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    const PermGroup& g = ctx.groups[i];
    auto p = odd_prime_half(g.degree());
    if (!p || !is_transitive(g)) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "not transitive of degree twice an odd prime");
      continue;
    }
    std::vector<BlockSystem> twos;
    bool has_p_blocks = false;
    for (BlockSystem& bs : all_block_systems(g)) {
      std::size_t size = bs.block_size();
      if (size == *p) has_p_blocks = true;
      if (size == 2) twos.push_back(std::move(bs));
    }
    if (twos.empty() || has_p_blocks) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "needs blocks of size 2 and no blocks of size p");
      continue;
    }
    bool pass = true;
    std::string failure;
    for (const BlockSystem& bs : twos) {
      QuotientAction qa = quotient_action(g, bs);
      for (std::size_t a = 0; a < bs.blocks.size() && pass; ++a)
        for (std::size_t b = 0; b < bs.blocks.size() && pass; ++b) {
          if (a == b) continue;
          bool witness = false;
          for (const Perm& k : qa.kernel.elements()) {
            if (k(bs.blocks[a][0]) == bs.blocks[a][1] &&
                k(bs.blocks[b][0]) == bs.blocks[b][0] &&
                k(bs.blocks[b][1]) == bs.blocks[b][1]) {
              witness = true;
              break;
            }
          }
          if (!witness) {
            pass = false;
            failure = "no kernel element flips block " + std::to_string(a) +
                      " while fixing block " + std::to_string(b);
          }
        }
    }
    add_check(rep, ctx.subject(i), pass ? CheckStatus::PASS : CheckStatus::FAIL,
              pass ? "kernel witnesses found for all ordered block pairs"
                   : failure);
  }
}

void suite_lem_prime(SuiteContext& ctx, SuiteReport& rep) {
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    const PermGroup& g = ctx.groups[i];
    std::size_t p = g.degree();
    if (p < 3 || !is_prime(p)) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "degree is not an odd prime");
      continue;
    }
    if (!is_2_transitive(g)) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP, "not two-transitive");
      continue;
    }
    std::optional<std::uint32_t> cycle;
    for (std::size_t e = 0; e < g.order(); ++e)
      if (g.element(e).order() == p && g.element(e).is_derangement()) {
        cycle = static_cast<std::uint32_t>(e);
        break;
      }
    if (!cycle) {
      add_check(rep, ctx.subject(i), CheckStatus::FAIL,
                "no full cycle of prime order found");
      continue;
    }
    PermGroup nrm = normalizer_of_cyclic(g, *cycle);
    bool pass = nrm.order() > p;
    add_check(rep, ctx.subject(i), pass ? CheckStatus::PASS : CheckStatus::FAIL,
              "normalizer order " + std::to_string(nrm.order()) + " vs p = " +
                  std::to_string(p));
  }
}

void suite_cor_strict_ekr(SuiteContext& ctx, SuiteReport& rep) {
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    const PermGroup& g = ctx.groups[i];
    auto p = odd_prime_half(g.degree());
    if (!p || !is_transitive(g)) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "not transitive of degree twice an odd prime");
      continue;
    }
    std::optional<std::size_t> d;
    if (*p <= 20 && !is_primitive(g)) {
      std::uint64_t full = std::uint64_t{1} << (*p - 1);
      for (const BlockSystem& bs : all_block_systems(g)) {
        if (bs.block_size() != 2) continue;
        QuotientAction qa = quotient_action(g, bs);
        if (qa.kernel.order() == full && is_subgroup_alternating(qa.kernel) &&
            qa.quotient.order() % *p == 0) {
          std::size_t cand = qa.quotient.order() / *p;
          if (cand >= 1 && (*p - 1) % cand == 0) {
            d = cand;
            break;
          }
        }
      }
    }
    if (!d) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "no 2-block system with the full even-weight flip kernel");
      continue;
    }
    DensityOptions o = ctx.base;
    o.compute_strict = true;
    DensityResult r = intersection_density(g, o);
    bool want_ekr = *d > 1;
    bool want_strict = *d > 2;
    bool pass = r.is_ekr == want_ekr && r.strict_ekr.has_value() &&
                *r.strict_ekr == want_strict;
    add_check(rep, ctx.subject(i), pass ? CheckStatus::PASS : CheckStatus::FAIL,
              "d = " + std::to_string(*d) + ": EKR = " +
                  (r.is_ekr ? "true" : "false") + ", strict = " +
                  (r.strict_ekr ? (*r.strict_ekr ? "true" : "false") : "?"));
  }
}

void suite_derangement_existence(SuiteContext& ctx, SuiteReport& rep) {
  for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
    const PermGroup& g = ctx.groups[i];
    if (g.degree() < 2 || !is_transitive(g)) {
      add_check(rep, ctx.subject(i), CheckStatus::SKIP,
                "needs a transitive group of degree >= 2");
      continue;
    }
    auto ders = derangement_indices(g);
    bool prime_power_found = false;
    for (std::uint32_t idx : ders)
      if (prime_power(g.element(idx).order())) {
        prime_power_found = true;
        break;
      }
    bool pass = !ders.empty() && prime_power_found;
    add_check(rep, ctx.subject(i), pass ? CheckStatus::PASS : CheckStatus::FAIL,
              std::to_string(ders.size()) + " derangements" +
                  (prime_power_found ? ", one of prime-power order"
                                     : ", none of prime-power order"));
  }
}

PermGroup one_dim_affine(std::size_t p) {
  if (!is_prime(p) || p < 3) throw InvalidInput("p must be an odd prime");
  std::size_t root = 0;
  for (std::size_t c = 2; c < p && root == 0; ++c) {
    std::size_t ord = 1, acc = c % p;
    while (acc != 1) {
      acc = acc * c % p;
      ++ord;
    }
    if (ord == p - 1) root = c;
  }
  std::vector<Point> shift(p), mult(p);
  for (std::size_t i = 0; i < p; ++i) {
    shift[i] = static_cast<Point>((i + 1) % p);
    mult[i] = static_cast<Point>(i * root % p);
  }
  std::vector<Perm> gens{Perm::from_images(std::move(shift)),
                         Perm::from_images(std::move(mult))};
  return PermGroup::generate(p, std::move(gens), kDefaultOrderCap,
                             "affine(" + std::to_string(p) + ")");
}

std::vector<PermGroup> default_family(const std::string& suite) {
  auto t16 = [](std::size_t p) {
    std::vector<std::uint64_t> seeds{kAdjacentPairSeed};
    return thm16i_group(p, seeds);
  };
  auto lift = [](std::size_t p, std::size_t d) {
    std::vector<std::uint64_t> seeds{kAdjacentPairSeed};
    return frobenius_lift(p, d, seeds);
  };
  std::vector<PermGroup> out;
  if (suite == "thm-main2") {
    out.push_back(cyclic_group(4));
    out.push_back(cyclic_group(8));
    out.push_back(cyclic_group(9));
    out.push_back(cyclic_group(25));
    out.push_back(dihedral_group(4));
    out.push_back(dihedral_group(8));
    out.push_back(dihedral_group(9));
    out.push_back(symmetric_group(4));
    out.push_back(alternating_group(4));
    out.push_back(iterated_wreath_sylow(2, 2));
    out.push_back(iterated_wreath_sylow(2, 3));
    out.push_back(iterated_wreath_sylow(3, 2));
  } else if (suite == "thm-main3") {
    out.push_back(t16(3));
    out.push_back(t16(5));
    out.push_back(t16(7));
    out.push_back(lift(5, 2));
    out.push_back(lift(5, 4));
    {
      std::vector<std::uint64_t> simplex{0b1110100};
      out.push_back(frobenius_lift(7, 3, simplex));
    }
    out.push_back(action_on_2subsets(alternating_group(4)));
    out.push_back(action_on_2subsets(symmetric_group(4)));
    out.push_back(action_on_2subsets(alternating_group(5)));
    out.push_back(action_on_2subsets(symmetric_group(5)));
    out.push_back(cyclic_group(6));
    out.push_back(cyclic_group(10));
    out.push_back(cyclic_group(14));
    out.push_back(dihedral_group(6));
    out.push_back(dihedral_group(10));
    out.push_back(dihedral_group(14));
    out.push_back(wreath_product(symmetric_group(2), symmetric_group(3)));
  } else if (suite == "lem-semiq") {
    out.push_back(cyclic_group(4));
    out.push_back(cyclic_group(6));
    out.push_back(cyclic_group(10));
    out.push_back(cyclic_group(14));
    out.push_back(dihedral_group(6));
    out.push_back(dihedral_group(10));
    out.push_back(wreath_product(symmetric_group(2), symmetric_group(3)));
    out.push_back(wreath_product(symmetric_group(2), symmetric_group(4)));
    out.push_back(t16(5));  // exercises the skip path: no full flip in the kernel
  } else if (suite == "prop-minimal") {
    out.push_back(action_on_2subsets(symmetric_group(5)));
    out.push_back(action_on_2subsets(alternating_group(5)));
    out.push_back(cyclic_group(10));
    out.push_back(dihedral_group(10));
    out.push_back(t16(5));
    out.push_back(lift(5, 2));
    out.push_back(lift(5, 4));
    out.push_back(cyclic_group(6));
    out.push_back(dihedral_group(6));
    out.push_back(action_on_2subsets(symmetric_group(4)));
    out.push_back(action_on_2subsets(alternating_group(4)));
  } else if (suite == "prop-semiregular") {
    out.push_back(action_on_2subsets(symmetric_group(5)));
    out.push_back(action_on_2subsets(alternating_group(5)));
    out.push_back(action_on_2subsets(alternating_group(4)));
    out.push_back(t16(5));
    out.push_back(cyclic_group(12));
    out.push_back(dihedral_group(12));
    out.push_back(iterated_wreath_sylow(2, 3));
    out.push_back(wreath_product(symmetric_group(2), symmetric_group(3)));
  } else if (suite == "prop-dm2") {
    out.push_back(t16(3));
    out.push_back(t16(5));
    out.push_back(t16(7));
    out.push_back(lift(5, 2));
    out.push_back(lift(5, 4));
    out.push_back(action_on_2subsets(alternating_group(4)));
    out.push_back(cyclic_group(10));  // has p-blocks: exercises the skip path
    out.push_back(dihedral_group(10));
  } else if (suite == "lem-prime") {
    out.push_back(symmetric_group(3));
    out.push_back(alternating_group(5));
    out.push_back(symmetric_group(5));
    out.push_back(symmetric_group(7));
    out.push_back(alternating_group(7));
    out.push_back(one_dim_affine(5));
    out.push_back(one_dim_affine(7));
    out.push_back(one_dim_affine(11));
    out.push_back(one_dim_affine(13));
    out.push_back(cyclic_group(7));  // not 2-transitive: exercises the skip path
  } else if (suite == "cor-strict-ekr") {
    out.push_back(lift(5, 1));
    out.push_back(lift(5, 2));
    out.push_back(lift(5, 4));
    out.push_back(lift(7, 1));
    out.push_back(lift(7, 2));
    out.push_back(lift(7, 3));
    out.push_back(lift(7, 6));
  } else if (suite == "derangement-existence") {
    out.push_back(cyclic_group(6));
    out.push_back(dihedral_group(10));
    out.push_back(action_on_2subsets(symmetric_group(4)));
    out.push_back(action_on_2subsets(alternating_group(5)));
    out.push_back(action_on_2subsets(symmetric_group(5)));
    out.push_back(t16(5));
    out.push_back(iterated_wreath_sylow(2, 2));
    out.push_back(iterated_wreath_sylow(3, 2));
    out.push_back(wreath_product(symmetric_group(2), symmetric_group(3)));
    out.push_back(one_dim_affine(5));
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"thm-main2",        "thm-main3",   "lem-semiq",
          "prop-minimal",     "prop-semiregular", "prop-dm2",
          "lem-prime",        "cor-strict-ekr",   "derangement-existence"};
}

SuiteReport run_suite(const std::string& suite, std::vector<PermGroup> groups,
                      const DensityOptions& options) {
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidInput("unknown suite: " + suite);
  if (groups.empty()) groups = default_family(suite);

  SuiteContext ctx{std::move(groups), options};
  ctx.cache.resize(ctx.groups.size());
  SuiteReport rep;
  rep.suite = suite;
  if (suite == "thm-main2") suite_thm_main2(ctx, rep);
  else if (suite == "thm-main3") suite_thm_main3(ctx, rep);
  else if (suite == "lem-semiq") suite_lem_semiq(ctx, rep);
  else if (suite == "prop-minimal") suite_prop_minimal(ctx, rep);
  else if (suite == "prop-semiregular") suite_prop_semiregular(ctx, rep);
  else if (suite == "prop-dm2") suite_prop_dm2(ctx, rep);
  else if (suite == "lem-prime") suite_lem_prime(ctx, rep);
  else if (suite == "cor-strict-ekr") suite_cor_strict_ekr(ctx, rep);
  else suite_derangement_existence(ctx, rep);
  return rep;
}

SpectrumReport rho_spectrum(const std::vector<PermGroup>& groups,
                            const DensityOptions& options) {
  SpectrumReport rep;
  auto less = [](const Rational& a, const Rational& b) {
    return rational_lt(a, b);
  };
  std::map<Rational, std::size_t, decltype(less)> counts(less);
  for (const PermGroup& g : groups) {
    DensityResult r = intersection_density(g, options);
    rep.entries.push_back(
        {g.name(), g.degree(), g.order(), r.rho, r.is_ekr});
    ++counts[r.rho];
  }
  for (const auto& [value, count] : counts) rep.counts.emplace_back(value, count);
  return rep;
}

}  // namespace ekr
