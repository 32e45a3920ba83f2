#include "sz/perm.hpp"

#include <numeric>

#include "sz/error.hpp"

namespace sz {

bool is_bijection(std::span<const std::uint16_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (const auto p : images) {
    if (p >= images.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) throw GroupError("image array is not a permutation");
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  return Perm(std::move(img));
}

Perm Perm::then(const Perm& next) const {
  if (next.degree() != degree()) throw GroupError("permutation degree mismatch");
  std::vector<std::uint16_t> img(degree());
  for (std::size_t p = 0; p < degree(); ++p) img[p] = next.images_[images_[p]];
  Perm out;
  out.images_ = std::move(img);
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> img(degree());
  for (std::size_t p = 0; p < degree(); ++p) img[images_[p]] = static_cast<std::uint16_t>(p);
  Perm out;
  out.images_ = std::move(img);
  return out;
}

bool Perm::is_identity() const { return fixed_point_count() == degree(); }

std::size_t Perm::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t p = 0; p < degree(); ++p) n += images_[p] == p ? 1 : 0;
  return n;
}

}  // namespace sz
