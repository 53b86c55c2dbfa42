#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ekr/errors.hpp"

namespace ekr {

// Points are 0-based internally everywhere; 1-based only at the text I/O edge.
using Point = std::uint16_t;

// A permutation of {0, ..., n-1}, stored as its image table.
class Perm {
 public:
  Perm() = default;  // degree-0 placeholder so Perm can live in containers

  static Perm identity(std::size_t degree);
  // Validates that `images` is a bijection; throws InvalidInput otherwise.
  static Perm from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point v) const { return images_[v]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  // Left-action composition: result(v) = (*this)(other(v)), i.e. apply `other`
  // first. Throws InvalidInput("degree mismatch") on differing degrees.
  Perm compose(const Perm& other) const;
  Perm inverse() const;
  // s * p * s^-1 (relabels points through s).
  Perm conjugated_by(const Perm& s) const;

  std::vector<Point> fixed_points() const;
  bool is_derangement() const noexcept;
  // Multiset of cycle lengths, sorted ascending; includes fixed points as 1s.
  std::vector<std::size_t> cycle_type() const;
  std::uint64_t order() const;
  int sign() const noexcept;  // +1 or -1
  // True iff all cycles have the same length (identity counts as semiregular).
  bool is_semiregular() const noexcept;
  // Common cycle length if semiregular (1 for the identity).
  std::size_t semiregular_cycle_length() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace ekr
