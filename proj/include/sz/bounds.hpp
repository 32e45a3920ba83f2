#pragma once

// Exact counting bounds for conjugate intersections of a subfield Suzuki
// group Sz(s) inside Sz(q), q = s^t, and the resulting existence inequality.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace sz {

struct BoundReport {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  mpz_class q;
  mpz_class r;   // 2^m for q = 2^(2m+1)
  mpz_class r1;  // 2^p for s = 2^(2p+1)
  mpz_class bound_Z;
  mpz_class bound_K;
  mpz_class bound_A1;
  mpz_class bound_A2;
  mpz_class order_G1;
  mpz_class order_G;
  mpz_class rhs;     // sum of the four bounds and |G1|
  mpz_class margin;  // order_G - rhs
  bool inequality_holds = false;
  bool dominance_holds = false;  // order_G > 5 s^4 bound_Z

  nlohmann::json to_json() const;
  static BoundReport from_json(const nlohmann::json& j);
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Throws BoundsError unless s = 2^(2p+1) >= 8 and t >= 3 is odd, or if a
/// division in the formulas leaves a remainder.
BoundReport counting_bounds(std::uint64_t s, std::uint64_t t);

bool trivial_intersection_exists(std::uint64_t s, std::uint64_t t);

/// Admissible s <= s_max and odd 3 <= t <= t_max.
std::vector<BoundReport> bounds_sweep(std::uint64_t s_max, std::uint64_t t_max);
std::string sweep_to_csv(const std::vector<BoundReport>& reports);

}  // namespace sz
