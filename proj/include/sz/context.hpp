#pragma once

// Sz(q) assembled once: field, ovoid, enumerated group and named subgroups.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "sz/geometry.hpp"
#include "sz/gf2n.hpp"
#include "sz/group.hpp"
#include "sz/named.hpp"

namespace sz {

struct ContextOptions {
  std::uint32_t q = 8;
  std::optional<std::uint32_t> modulus;  // default modulus for the degree if unset
  std::optional<std::filesystem::path> cache_dir;
  std::size_t cap = std::size_t{1} << 20;
};

/// q values for which the full group is enumerated.
bool full_group_supported(std::uint32_t q);

class SuzukiContext {
 public:
  static SuzukiContext build(const ContextOptions& options);

  std::uint32_t q() const { return field().order(); }
  const Field& field() const { return ovoid_.field(); }
  const Ovoid& ovoid() const { return ovoid_; }
  const GroupTable& group() const { return group_; }
  const NamedSubgroups& named() const { return named_; }
  /// True if the table came from the on-disk cache.
  bool from_cache() const { return from_cache_; }

 private:
  SuzukiContext(Ovoid ovoid, GroupTable group, NamedSubgroups named, bool from_cache)
      : ovoid_(std::move(ovoid)), group_(std::move(group)), named_(std::move(named)), from_cache_(from_cache) {}

  Ovoid ovoid_;
  GroupTable group_;
  NamedSubgroups named_;
  bool from_cache_ = false;
};

/// Degree n of q = 2^n; throws UsageError unless q = 2^(2m+1) with n <= 15.
int field_degree_of(std::uint32_t q);

}  // namespace sz
