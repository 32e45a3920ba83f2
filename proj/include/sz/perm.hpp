#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sz {

/// A permutation of {0, ..., degree-1} stored as an image array.
/// Points are acted on from the right: p^(ab) = (p^a)^b, so `a.then(b)`
/// is the group product ab.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator[](std::size_t p) const { return images_[p]; }
  std::span<const std::uint16_t> images() const { return images_; }

  Perm then(const Perm& next) const;
  Perm inverse() const;
  bool is_identity() const;
  std::size_t fixed_point_count() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

/// True iff `images` is a bijection on {0, ..., size-1}.
bool is_bijection(std::span<const std::uint16_t> images);

}  // namespace sz
