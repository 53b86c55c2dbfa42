#include <doctest.h>

#include <algorithm>

#include "ekr/classify.hpp"
#include "ekr/constructions.hpp"
#include "ekr/density.hpp"

using namespace ekr;

namespace {

std::vector<std::uint64_t> adjacent() { return {kAdjacentPairSeed}; }
std::vector<std::uint64_t> simplex() { return {0b1110100}; }

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("enum names") {
  CHECK(to_string(TwoPClass::RHO_ONE) == "RHO_ONE");
  CHECK(to_string(TwoPClass::CASE_I) == "CASE_I");
  CHECK(to_string(TwoPClass::CASE_II) == "CASE_II");
  CHECK(to_string(CheckStatus::PASS) == "PASS");
  CHECK(to_string(CheckStatus::FAIL) == "FAIL");
  CHECK(to_string(CheckStatus::SKIP) == "SKIP");
}

TEST_CASE("classification of degree-2p groups") {
  struct Expected {
    PermGroup group;
    TwoPClass cls;
    std::size_t p;
    bool primitive;
    Rational rho;
  };
  const Expected cases[] = {
      {cyclic_group(6), TwoPClass::RHO_ONE, 3, false, Rational{1, 1}},
      {cyclic_group(10), TwoPClass::RHO_ONE, 5, false, Rational{1, 1}},
      {dihedral_group(10), TwoPClass::RHO_ONE, 5, false, Rational{1, 1}},
      {dihedral_group(14), TwoPClass::RHO_ONE, 7, false, Rational{1, 1}},
      {action_on_2subsets(alternating_group(4)), TwoPClass::CASE_I, 3, false,
       Rational{2, 1}},
      {action_on_2subsets(alternating_group(5)), TwoPClass::CASE_II, 5, true,
       Rational{2, 1}},
      {action_on_2subsets(symmetric_group(5)), TwoPClass::RHO_ONE, 5, true,
       Rational{1, 1}},
      {thm16i_group(3, adjacent()), TwoPClass::CASE_I, 3, false, Rational{2, 1}},
      {thm16i_group(5, adjacent()), TwoPClass::CASE_I, 5, false, Rational{2, 1}},
      {thm16i_group(7, simplex()), TwoPClass::CASE_I, 7, false, Rational{2, 1}},
      {frobenius_lift(5, 2, adjacent()), TwoPClass::RHO_ONE, 5, false,
       Rational{1, 1}},
      {wreath_product(symmetric_group(2), symmetric_group(5)),
       TwoPClass::RHO_ONE, 5, false, Rational{1, 1}},
  };
  for (const Expected& e : cases) {
    Classification2p c = classify_2p(e.group);
    CAPTURE(e.group.name());
    CHECK(c.cls == e.cls);
    CHECK(c.p == e.p);
    CHECK(c.primitive == e.primitive);
    CHECK(c.predicted_rho == e.rho);
    CHECK_FALSE(c.detail.empty());
  }
}

TEST_CASE("predictions agree with the exact computation") {
  DensityOptions exact;
  exact.force_exact = true;
  for (const PermGroup& g :
       {cyclic_group(10), dihedral_group(14),
        action_on_2subsets(alternating_group(4)),
        action_on_2subsets(alternating_group(5)),
        action_on_2subsets(symmetric_group(5)), thm16i_group(5, adjacent()),
        thm16i_group(7, simplex()), frobenius_lift(5, 2, adjacent())}) {
    CAPTURE(g.name());
    CHECK(intersection_density(g, exact).rho == classify_2p(g).predicted_rho);
  }
}

TEST_CASE("classification rejects other degrees and intransitive groups") {
  CHECK_THROWS_AS(classify_2p(symmetric_group(4)), InvalidInput);   // 2p with p = 2
  CHECK_THROWS_AS(classify_2p(cyclic_group(12)), InvalidInput);     // p = 6 composite
  CHECK_THROWS_AS(classify_2p(cyclic_group(7)), InvalidInput);      // odd degree
  PermGroup still = PermGroup::generate(10, {}, kDefaultOrderCap, "trivial10");
  CHECK_THROWS_AS(classify_2p(still), InvalidInput);                // intransitive
}

TEST_CASE("suite registry") {
  const std::vector<std::string> expected = {
      "thm-main2",         "thm-main3", "lem-semiq",
      "prop-minimal",      "prop-semiregular", "prop-dm2",
      "lem-prime",         "cor-strict-ekr",   "derangement-existence"};
  CHECK(suite_names() == expected);
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), InvalidInput);
}

TEST_CASE("every suite passes on its built-in examples") {
  struct Tally {
    const char* suite;
    std::size_t passed, skipped;
  };
  // Frozen counts document the built-in example families, including the
  // deliberately inapplicable entries that exercise the SKIP paths.
  const Tally expected[] = {
      {"thm-main2", 12, 0},        {"thm-main3", 17, 0},
      {"lem-semiq", 8, 1},         {"prop-minimal", 7, 0},
      {"prop-semiregular", 8, 0},  {"prop-dm2", 6, 2},
      {"lem-prime", 9, 1},         {"cor-strict-ekr", 7, 0},
      {"derangement-existence", 10, 0},
  };
  for (const Tally& t : expected) {
    SuiteReport rep = run_suite(t.suite, {});
    CAPTURE(t.suite);
    CHECK(rep.ok());
    CHECK(rep.suite == t.suite);
    CHECK(rep.passed == t.passed);
    CHECK(rep.failed == 0);
    CHECK(rep.skipped == t.skipped);
    CHECK(rep.checks.size() == t.passed + t.skipped);
    for (const SuiteCheck& c : rep.checks) {
      CHECK_FALSE(c.subject.empty());
      CHECK_FALSE(c.detail.empty());
    }
  }
}

TEST_CASE("suites skip groups outside their scope") {
  SuiteReport rep =
      run_suite("thm-main2", {symmetric_group(4), cyclic_group(6)});
  CHECK(rep.passed == 1);   // degree 4 = 2^2
  CHECK(rep.skipped == 1);  // degree 6 is not a prime power
  CHECK(rep.ok());

  SuiteReport deg2p = run_suite("thm-main3", {cyclic_group(8)});
  CHECK(deg2p.passed == 0);
  CHECK(deg2p.skipped == 1);
  CHECK_FALSE(deg2p.ok());  // nothing checked means no evidence
}

TEST_CASE("suites accept explicit group lists") {
  SuiteReport rep = run_suite(
      "prop-minimal", {cyclic_group(10), dihedral_group(10)});
  CHECK(rep.ok());
  CHECK(rep.passed >= 1);

  SuiteReport semi = run_suite(
      "prop-semiregular",
      {cyclic_group(6), action_on_2subsets(symmetric_group(4))});
  CHECK(semi.ok());
  CHECK(semi.passed == 2);

  SuiteReport der = run_suite("derangement-existence",
                              {symmetric_group(5), cyclic_group(9)});
  CHECK(der.ok());
  CHECK(der.passed == 2);
}

TEST_CASE("density spectrum") {
  std::vector<PermGroup> groups;
  groups.push_back(cyclic_group(6));
  groups.push_back(action_on_2subsets(alternating_group(4)));
  groups.push_back(action_on_2subsets(alternating_group(5)));
  groups.push_back(dihedral_group(7));
  SpectrumReport rep = rho_spectrum(groups);

  REQUIRE(rep.entries.size() == 4);
  CHECK(rep.entries[0].name == "cyclic(6)");
  CHECK(rep.entries[0].rho == Rational{1, 1});
  CHECK(rep.entries[0].is_ekr);
  CHECK(rep.entries[1].rho == Rational{2, 1});
  CHECK_FALSE(rep.entries[1].is_ekr);
  CHECK(rep.entries[2].degree == 10);
  CHECK(rep.entries[3].order == 14);

  REQUIRE(rep.counts.size() == 2);
  CHECK(rep.counts[0] == std::pair{Rational{1, 1}, std::size_t{2}});
  CHECK(rep.counts[1] == std::pair{Rational{2, 1}, std::size_t{2}});
}

}  // TEST_SUITE
