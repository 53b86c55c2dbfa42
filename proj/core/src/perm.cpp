#include "ekr/perm.hpp"

#include <algorithm>
#include <numeric>

namespace ekr {

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Perm(std::move(images));
}

Perm Perm::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v])
      throw InvalidInput("image table is not a bijection");
    seen[v] = true;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

Perm Perm::compose(const Perm& other) const {
  if (degree() != other.degree()) throw InvalidInput("degree mismatch");
  std::vector<Point> images(degree());
  for (std::size_t v = 0; v < degree(); ++v)
    images[v] = images_[other.images_[v]];
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<Point> images(degree());
  for (std::size_t v = 0; v < degree(); ++v)
    images[images_[v]] = static_cast<Point>(v);
  return Perm(std::move(images));
}

Perm Perm::conjugated_by(const Perm& s) const {
  if (degree() != s.degree()) throw InvalidInput("degree mismatch");
  std::vector<Point> images(degree());
  for (std::size_t v = 0; v < degree(); ++v)
    images[s.images_[v]] = s.images_[images_[v]];
  return Perm(std::move(images));
}

std::vector<Point> Perm::fixed_points() const {
  std::vector<Point> fixed;
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] == v) fixed.push_back(static_cast<Point>(v));
  return fixed;
}

bool Perm::is_derangement() const noexcept {
  if (images_.empty()) return false;
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] == v) return false;
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> type;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (seen[v]) continue;
    std::size_t len = 0;
    for (std::size_t w = v; !seen[w]; w = images_[w]) {
      seen[w] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  for (std::size_t len : cycle_type()) ord = std::lcm(ord, std::uint64_t{len});
  return ord;
}

int Perm::sign() const noexcept {
  // (-1)^(n - #cycles)
  std::size_t cycles = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (seen[v]) continue;
    ++cycles;
    for (std::size_t w = v; !seen[w]; w = images_[w]) seen[w] = true;
  }
  return (images_.size() - cycles) % 2 == 0 ? 1 : -1;
}

bool Perm::is_semiregular() const noexcept {
  std::size_t common = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (seen[v]) continue;
    std::size_t len = 0;
    for (std::size_t w = v; !seen[w]; w = images_[w]) {
      seen[w] = true;
      ++len;
    }
    if (common == 0)
      common = len;
    else if (len != common)
      return false;
  }
  return true;
}

std::size_t Perm::semiregular_cycle_length() const {
  if (!is_semiregular()) throw InvalidInput("permutation is not semiregular");
  if (images_.empty()) return 1;
  std::size_t len = 1;
  for (Point w = images_[0]; w != 0; w = images_[w]) ++len;
  return len;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace ekr
