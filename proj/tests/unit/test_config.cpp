#include <doctest.h>

#include <cstdlib>

#include "ekr/config.hpp"

using namespace ekr;

namespace {

struct EnvGuard {
  const char* name;
  explicit EnvGuard(const char* n, const char* value) : name(n) {
    setenv(name, value, 1);
  }
  ~EnvGuard() { unsetenv(name); }
};

}  // namespace

TEST_SUITE("config") {

TEST_CASE("defaults") {
  RunConfig cfg;
  CHECK(cfg.element_cap == kDefaultOrderCap);
  CHECK(cfg.node_budget == kDefaultNodeBudget);
  CHECK(cfg.enumeration_limit == kDefaultEnumerationLimit);
  CHECK(cfg.workers == 1);
  CHECK_FALSE(cfg.force_exact);
  CHECK_FALSE(cfg.deterministic);

  unsetenv("EKR_CAP");
  unsetenv("EKR_BUDGET");
  unsetenv("EKR_WORKERS");
  RunConfig env = config_from_env();
  CHECK(env.element_cap == kDefaultOrderCap);
  CHECK(env.node_budget == kDefaultNodeBudget);
  CHECK(env.workers == 1);
}

TEST_CASE("environment overrides") {
  EnvGuard cap("EKR_CAP", "5000");
  EnvGuard budget("EKR_BUDGET", "12345");
  EnvGuard workers("EKR_WORKERS", "8");
  RunConfig cfg = config_from_env();
  CHECK(cfg.element_cap == 5000);
  CHECK(cfg.node_budget == 12345);
  CHECK(cfg.workers == 8);
}

TEST_CASE("invalid environment values are rejected") {
  {
    EnvGuard cap("EKR_CAP", "abc");
    CHECK_THROWS_AS(config_from_env(), InvalidInput);
  }
  {
    EnvGuard cap("EKR_CAP", "0");
    CHECK_THROWS_AS(config_from_env(), InvalidInput);
  }
  {
    EnvGuard budget("EKR_BUDGET", "12x");
    CHECK_THROWS_AS(config_from_env(), InvalidInput);
  }
}

TEST_CASE("density options reflect the configuration") {
  RunConfig cfg;
  cfg.node_budget = 77;
  cfg.enumeration_limit = 55;
  cfg.workers = 6;
  cfg.force_exact = true;
  DensityOptions opts = cfg.density_options();
  CHECK(opts.node_budget == 77);
  CHECK(opts.enumeration_limit == 55);
  CHECK(opts.workers == 6);
  CHECK(opts.force_exact);

  cfg.deterministic = true;
  CHECK(cfg.density_options().workers == 1);
}

}  // TEST_SUITE
