#pragma once

#include <string>
#include <vector>

#include "ekr/density.hpp"
#include "ekr/group.hpp"

namespace ekr {

// Structural prediction of the intersection density for transitive groups of
// degree 2p (p an odd prime): the density is 1 except in two cases.
enum class TwoPClass {
  RHO_ONE,  // density 1
  CASE_I,   // blocks of size 2, quotient of order p, nontrivial all-even
            // kernel: density 2
  CASE_II,  // the simply primitive group of order 60 on 10 points: density 2
};
std::string to_string(TwoPClass c);

struct Classification2p {
  TwoPClass cls = TwoPClass::RHO_ONE;
  std::size_t p = 0;
  bool primitive = false;
  Rational predicted_rho;
  std::string detail;
};

// Throws InvalidInput when the degree is not twice an odd prime or the group
// is not transitive; throws Error for a simply primitive group of order
// other than 60/120 on 10 points (no such group exists).
Classification2p classify_2p(const PermGroup& g);

// ---- Verification suites ----
//
// Each suite checks one proved statement over a list of groups, skipping the
// groups the statement does not speak about. An empty list runs the suite's
// built-in example family.
//
//   thm-main2   transitive of prime-power degree: density 1
//   thm-main3   transitive of degree 2p: density matches classify_2p
//   lem-semiq   blocks from a fixed-point-free kernel involution:
//               rho(G) <= rho(quotient)
//   prop-minimal  transitive H <= G (same degree): rho(G) <= rho(H)
//   prop-semiregular  semiregular element of cycle length l: alpha * l <= |G|
//   prop-dm2    degree 2p, 2-blocks but no p-blocks: for every ordered block
//               pair some kernel element flips one block and fixes the other
//               pointwise
//   lem-prime   2-transitive of prime degree p: the normalizer of a cyclic
//               Sylow p-subgroup has order > p
//   cor-strict-ekr  full even-weight flip kernel, quotient of order p*d:
//               EKR iff d > 1, strict-EKR iff d > 2
//   derangement-existence  transitive, degree >= 2: a derangement exists,
//               and one of prime-power order

enum class CheckStatus { PASS, FAIL, SKIP };
std::string to_string(CheckStatus s);

struct SuiteCheck {
  std::string subject;
  CheckStatus status = CheckStatus::SKIP;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool ok() const { return failed == 0 && passed > 0; }
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, std::vector<PermGroup> groups,
                      const DensityOptions& options = {});

// ---- Density spectrum over a collection ----

struct SpectrumEntry {
  std::string name;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  Rational rho;
  bool is_ekr = false;
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;                    // input order
  std::vector<std::pair<Rational, std::size_t>> counts;  // ascending by value
};

SpectrumReport rho_spectrum(const std::vector<PermGroup>& groups,
                            const DensityOptions& options = {});

}  // namespace ekr
