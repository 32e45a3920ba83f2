#include "sz/context.hpp"

#include <bit>

#include "sz/cache.hpp"
#include "sz/error.hpp"

namespace sz {

int field_degree_of(std::uint32_t q) {
  if (q < 2 || !std::has_single_bit(q)) throw UsageError("q must be a power of 2, got " + std::to_string(q));
  const int n = std::countr_zero(q);
  if (n % 2 == 0 || n > 15) {
    throw UsageError("q must be 2^(2m+1) with exponent at most 15, got " + std::to_string(q));
  }
  return n;
}

bool full_group_supported(std::uint32_t q) { return q == 8; }

SuzukiContext SuzukiContext::build(const ContextOptions& options) {
  if (!full_group_supported(options.q)) {
    throw UsageError("full-group commands support only q = 8: |Sz(" + std::to_string(options.q) +
                     ")| exceeds the enumeration cap of " + std::to_string(options.cap) + " elements");
  }
  const int n = field_degree_of(options.q);
  Field field(n, options.modulus.value_or(Field::default_modulus(n)));
  Ovoid ovoid(field);

  std::optional<GroupTable> group;
  bool cached = false;
  std::filesystem::path file;
  if (options.cache_dir) {
    file = cache_file(*options.cache_dir, options.q, field.modulus());
    group = load_group(file, options.q, field.modulus());
    cached = group.has_value();
  }
  if (!group) {
    const auto gens = suzuki_generators(ovoid);
    group = GroupTable::enumerate(gens, options.cap);
    if (options.cache_dir) save_group(file, *group, options.q, field.modulus());
  }
  const std::uint64_t q = options.q;
  if (group->order() != q * q * (q * q + 1) * (q - 1)) {
    throw GroupError("enumerated group has order " + std::to_string(group->order()));
  }
  NamedSubgroups named = named_subgroups(*group, ovoid);
  return SuzukiContext(std::move(ovoid), std::move(*group), std::move(named), cached);
}

}  // namespace sz
