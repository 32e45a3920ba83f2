#pragma once

// On-disk cache of enumerated groups.
//
// Layout (all little-endian): magic "SZGT", u32 version, u32 q, u32 modulus,
// u32 degree, u64 order, u32 generator count, u32 generator ids, then
// order*degree u16 point images, then the u64 table digest.

#include <cstdint>
#include <filesystem>
#include <optional>

#include "sz/group.hpp"

namespace sz {

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint32_t q, std::uint32_t modulus);

void save_group(const std::filesystem::path& file, const GroupTable& g, std::uint32_t q, std::uint32_t modulus);

/// Returns nullopt if the file is missing; throws GroupError if it exists but
/// is malformed, belongs to a different (q, modulus), or fails the digest.
std::optional<GroupTable> load_group(const std::filesystem::path& file, std::uint32_t q, std::uint32_t modulus);

}  // namespace sz
