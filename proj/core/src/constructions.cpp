#include "ekr/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace ekr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

Perm cycle_perm(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < length; ++i)
    images[first + i] = static_cast<Point>(first + (i + 1) % length);
  return Perm::from_images(std::move(images));
}

Perm transposition(std::size_t degree, std::size_t a, std::size_t b) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::swap(images[a], images[b]);
  return Perm::from_images(std::move(images));
}

void check_point_range(std::size_t degree) {
  if (degree == 0 || degree > 65535) throw InvalidInput("degree out of range");
}

}  // namespace

PermGroup cyclic_group(std::size_t n) {
  check_point_range(n);
  std::vector<Perm> gens;
  if (n > 1) gens.push_back(cycle_perm(n, 0, n));
  return PermGroup::generate(n, std::move(gens), kDefaultOrderCap,
                             "cyclic(" + std::to_string(n) + ")");
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InvalidInput("dihedral group needs degree >= 3");
  check_point_range(n);
  std::vector<Point> reflect(n);
  for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<Point>((n - i) % n);
  std::vector<Perm> gens{cycle_perm(n, 0, n), Perm::from_images(std::move(reflect))};
  return PermGroup::generate(n, std::move(gens), kDefaultOrderCap,
                             "dihedral(" + std::to_string(n) + ")");
}

PermGroup symmetric_group(std::size_t n) {
  check_point_range(n);
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(transposition(n, 0, 1));
  if (n >= 3) gens.push_back(cycle_perm(n, 0, n));
  return PermGroup::generate(n, std::move(gens), kDefaultOrderCap,
                             "S" + std::to_string(n));
}

PermGroup alternating_group(std::size_t n) {
  check_point_range(n);
  std::vector<Perm> gens;
  if (n >= 3) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
    images[0] = 1;
    images[1] = 2;
    images[2] = 0;
    gens.push_back(Perm::from_images(std::move(images)));
    if (n % 2 == 1)
      gens.push_back(cycle_perm(n, 0, n));
    else if (n >= 4)
      gens.push_back(cycle_perm(n, 1, n - 1));
  }
  return PermGroup::generate(n, std::move(gens), kDefaultOrderCap,
                             "A" + std::to_string(n));
}

std::size_t pair_rank(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  if (i == j || j >= n) throw InvalidInput("not a 2-subset of the domain");
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

PermGroup action_on_2subsets(const PermGroup& g, std::uint64_t cap) {
  const std::size_t n = g.degree();
  if (n < 3) throw InvalidInput("2-subset action needs degree >= 3");
  const std::size_t pairs = n * (n - 1) / 2;
  check_point_range(pairs);
  std::vector<Perm> gens;
  for (const Perm& p : g.generators()) {
    std::vector<Point> images(pairs);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        images[pair_rank(i, j, n)] = static_cast<Point>(
            pair_rank(p(static_cast<Point>(i)), p(static_cast<Point>(j)), n));
    gens.push_back(Perm::from_images(std::move(images)));
  }
  return PermGroup::generate(pairs, std::move(gens), cap,
                             g.name().empty() ? "on-2subsets"
                                              : g.name() + "-on-2subsets");
}

PermGroup wreath_product(const PermGroup& bottom, const PermGroup& top,
                         std::uint64_t cap) {
  const std::size_t b = bottom.degree(), t = top.degree();
  const std::size_t degree = b * t;
  check_point_range(degree);
  std::vector<Perm> gens;
  for (const Perm& p : bottom.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < b; ++i) images[i] = p(static_cast<Point>(i));
    gens.push_back(Perm::from_images(std::move(images)));
  }
  for (const Perm& p : top.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t block = 0; block < t; ++block)
      for (std::size_t off = 0; off < b; ++off)
        images[block * b + off] =
            static_cast<Point>(p(static_cast<Point>(block)) * b + off);
    gens.push_back(Perm::from_images(std::move(images)));
  }
  std::string name = (bottom.name().empty() ? "?" : bottom.name()) + "wr" +
                     (top.name().empty() ? "?" : top.name());
  return PermGroup::generate(degree, std::move(gens), cap, std::move(name));
}

PermGroup iterated_wreath_sylow(std::size_t p, std::size_t k, std::uint64_t cap) {
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (k == 0) throw InvalidInput("k must be positive");
  std::size_t degree = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (degree > 65535 / p) throw InvalidInput("degree out of range");
    degree *= p;
  }
  std::vector<Perm> gens{cycle_perm(p, 0, p)};
  for (std::size_t level = 2, d = p; level <= k; ++level, d *= p) {
    std::size_t next = d * p;
    std::vector<Perm> lifted;
    for (const Perm& g : gens) {
      std::vector<Point> images(next);
      for (std::size_t i = 0; i < next; ++i) images[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < d; ++i) images[i] = g(static_cast<Point>(i));
      lifted.push_back(Perm::from_images(std::move(images)));
    }
    std::vector<Point> rot(next);
    for (std::size_t i = 0; i < next; ++i)
      rot[i] = static_cast<Point>((i + d) % next);
    lifted.push_back(Perm::from_images(std::move(rot)));
    gens = std::move(lifted);
  }
  return PermGroup::generate(degree, std::move(gens), cap,
                             "wreath-sylow(p=" + std::to_string(p) +
                                 ",k=" + std::to_string(k) + ")");
}

// ---- Cyclic codes ----

namespace {

std::uint64_t reduce_by_basis(const std::vector<std::uint64_t>& basis,
                              std::uint64_t word) {
  for (std::uint64_t b : basis) {
    std::uint64_t pivot = b & (~b + 1);
    if (word & pivot) word ^= b;
  }
  return word;
}

}  // namespace

CyclicCode span_of_cyclic_shifts(std::size_t length,
                                 std::span<const std::uint64_t> seeds) {
  if (length == 0 || length > 63) throw InvalidInput("code length out of range");
  const std::uint64_t mask =
      length == 63 ? 0x7fffffffffffffffULL : ((std::uint64_t{1} << length) - 1);
  CyclicCode code;
  code.length = length;
  for (std::uint64_t seed : seeds) {
    if (seed & ~mask) throw InvalidInput("seed word exceeds code length");
    for (std::size_t s = 0; s < length; ++s) {
      std::uint64_t rotated =
          s == 0 ? seed : (((seed << s) | (seed >> (length - s))) & mask);
      std::uint64_t reduced = reduce_by_basis(code.basis, rotated);
      if (reduced) code.basis.push_back(reduced);
    }
  }
  // Full row reduction for a canonical basis (unique pivots, sorted).
  std::sort(code.basis.begin(), code.basis.end());
  for (std::size_t i = 0; i < code.basis.size(); ++i) {
    std::uint64_t pivot = code.basis[i] & (~code.basis[i] + 1);
    for (std::size_t j = 0; j < code.basis.size(); ++j)
      if (j != i && (code.basis[j] & pivot)) code.basis[j] ^= code.basis[i];
  }
  std::sort(code.basis.begin(), code.basis.end());
  return code;
}

bool code_contains(const CyclicCode& code, std::uint64_t word) {
  return reduce_by_basis(code.basis, word) == 0;
}

bool code_invariant_under_multiplier(const CyclicCode& code, std::uint64_t m) {
  if (m == 0 || std::gcd(m, static_cast<std::uint64_t>(code.length)) != 1)
    throw InvalidInput("multiplier not coprime to the code length");
  for (std::uint64_t b : code.basis) {
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < code.length; ++i)
      if ((b >> i) & 1) image |= std::uint64_t{1} << (i * m % code.length);
    if (!code_contains(code, image)) return false;
  }
  return true;
}

// ---- Degree-2p families ----

namespace {

void check_odd_prime(std::size_t p) {
  if (!is_prime(p) || p < 3 || p > 63)
    throw InvalidInput("p must be an odd prime at most 63");
}

std::vector<Perm> pairs_code_generators(std::size_t p, const CyclicCode& code) {
  std::vector<Perm> gens;
  for (std::uint64_t word : code.basis) {
    std::vector<Point> images(2 * p);
    for (std::size_t i = 0; i < 2 * p; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < p; ++i)
      if ((word >> i) & 1) std::swap(images[i], images[p + i]);
    gens.push_back(Perm::from_images(std::move(images)));
  }
  std::vector<Point> shift(2 * p);
  for (std::size_t i = 0; i < p; ++i) {
    shift[i] = static_cast<Point>((i + 1) % p);
    shift[p + i] = static_cast<Point>(p + (i + 1) % p);
  }
  gens.push_back(Perm::from_images(std::move(shift)));
  return gens;
}

CyclicCode even_code_from_seeds(std::size_t p,
                                std::span<const std::uint64_t> seeds) {
  for (std::uint64_t seed : seeds)
    if (std::popcount(seed) % 2 != 0)
      throw InvalidInput("seed weight must be even");
  return span_of_cyclic_shifts(p, seeds);
}

}  // namespace

PermGroup thm16i_group(std::size_t p, std::span<const std::uint64_t> seeds) {
  check_odd_prime(p);
  CyclicCode code = even_code_from_seeds(p, seeds);
  return PermGroup::generate(
      2 * p, pairs_code_generators(p, code), kDefaultOrderCap,
      "thm16i(p=" + std::to_string(p) + ",dim=" +
          std::to_string(code.dimension()) + ")");
}

PermGroup frobenius_lift(std::size_t p, std::size_t d,
                         std::span<const std::uint64_t> seeds) {
  check_odd_prime(p);
  if (d == 0 || (p - 1) % d != 0) throw InvalidInput("d must divide p-1");
  CyclicCode code = even_code_from_seeds(p, seeds);
  std::string name = "frobenius-lift(p=" + std::to_string(p) +
                     ",d=" + std::to_string(d) +
                     ",dim=" + std::to_string(code.dimension()) + ")";
  std::vector<Perm> gens = pairs_code_generators(p, code);
  if (d > 1) {
    std::size_t m = 0;
    for (std::size_t c = 2; c < p && m == 0; ++c) {
      std::size_t ord = 1, acc = c % p;
      while (acc != 1) {
        acc = acc * c % p;
        ++ord;
      }
      if (ord == d) m = c;
    }
    if (m == 0) throw InvalidInput("no multiplier of the requested order");
    if (!code_invariant_under_multiplier(code, m))
      throw InvalidInput("code is not invariant under the multiplier");
    std::vector<Point> mult(2 * p);
    for (std::size_t i = 0; i < p; ++i) {
      mult[i] = static_cast<Point>(i * m % p);
      mult[p + i] = static_cast<Point>(p + i * m % p);
    }
    gens.push_back(Perm::from_images(std::move(mult)));
  }
  return PermGroup::generate(2 * p, std::move(gens), kDefaultOrderCap,
                             std::move(name));
}

}  // namespace ekr
