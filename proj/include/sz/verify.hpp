#pragma once

// The reproduction report: every acceptance claim evaluated at q = 8.

#include <cstddef>
#include <optional>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace sz {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct ClaimRecord {
  std::string id;     // "AC1" .. "AC10"
  std::string title;
  nlohmann::json expected;
  nlohmann::json computed;
  std::vector<std::string> failures;  // names of failed sub-checks
  bool pass = false;
  double seconds = 0;
};

struct VerifyOptions {
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
  /// Rebuild B0 from a wrong generating set (fault injection).
  bool corrupt_b0 = false;
};

struct VerifyReport {
  std::vector<ClaimRecord> claims;
  nlohmann::json moduli;

  std::size_t passed() const;
  std::size_t failed() const { return claims.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
  const ClaimRecord& claim(const std::string& id) const;

  /// Runtimes are included only when asked.
  nlohmann::json to_json(bool timings = false) const;
  std::string to_table(bool timings = false) const;
};

VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace sz
