#include "ekr/config.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>

namespace ekr {

namespace {

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || *raw == '\0') return std::nullopt;
  std::string text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw InvalidInput(std::string(name) + ": expected a positive integer, got '" +
                       text + "'");
  return value;
}

}  // namespace

DensityOptions RunConfig::density_options() const {
  DensityOptions o;
  o.force_exact = force_exact;
  o.node_budget = node_budget;
  o.enumeration_limit = enumeration_limit;
  o.workers = deterministic ? 1 : workers;
  return o;
}

RunConfig config_from_env() {
  RunConfig cfg;
  if (auto v = env_u64("EKR_CAP")) cfg.element_cap = *v;
  if (auto v = env_u64("EKR_BUDGET")) cfg.node_budget = *v;
  if (auto v = env_u64("EKR_WORKERS"))
    cfg.workers = static_cast<unsigned>(std::min<std::uint64_t>(*v, 256));
  return cfg;
}

}  // namespace ekr
