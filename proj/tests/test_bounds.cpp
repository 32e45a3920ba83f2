#include <doctest.h>

#include "sz/bounds.hpp"
#include "sz/error.hpp"

using namespace sz;

namespace {

using u128 = unsigned __int128;

mpz_class from_u128(u128 v) {
  mpz_class out = static_cast<unsigned long>(v >> 64);
  out <<= 64;
  out += static_cast<unsigned long>(v & 0xffffffffffffffffULL);
  return out;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("(8,3) values against 128-bit arithmetic") {
    const BoundReport b = counting_bounds(8, 3);
    CHECK(b.q == 512);
    CHECK(b.r == 16);
    CHECK(b.r1 == 2);
    CHECK(b.bound_Z == mpz_class(7) * 262080 * 4225);
    const u128 q = 512;
    CHECK(b.order_G == from_u128(q * q * (q * q + 1) * (q - 1)));
    CHECK(b.order_G1 == 64 * 65 * 7);
    CHECK(b.bound_K == mpz_class((512 - 8) * 4096UL * 4225UL / 2));
    const u128 a1 = u128{4096} * 49 * 5 * 5 * (512 - 8 + 2 * (16 - 2));
    const u128 a2 = u128{4096} * 49 * 13 * 13 * (512 - 8 - 2 * (16 - 2));
    CHECK(b.bound_A1 == from_u128(a1 / 4));
    CHECK(b.bound_A2 == from_u128(a2 / 4));
    CHECK(a1 % 4 == 0);
    CHECK(a2 % 4 == 0);
    CHECK(b.inequality_holds);
  }

  TEST_CASE("existence inequality for the required pairs") {
    for (const auto& [s, t] : std::vector<std::pair<int, int>>{{8, 3}, {8, 5}, {8, 7}, {32, 3}, {32, 5}}) {
      CAPTURE(s);
      CAPTURE(t);
      CHECK(trivial_intersection_exists(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(t)));
    }
    CHECK(counting_bounds(8, 5).dominance_holds);
  }

  TEST_CASE("margin grows with t") {
    for (std::uint64_t s : {8, 32}) {
      mpz_class prev = -1;
      for (std::uint64_t t : {3, 5, 7, 9}) {
        const BoundReport b = counting_bounds(s, t);
        CHECK(b.margin > prev);
        CHECK(b.margin == b.order_G - b.rhs);
        prev = b.margin;
      }
    }
  }

  TEST_CASE("inadmissible parameters") {
    CHECK_THROWS_AS(counting_bounds(16, 3), BoundsError);
    CHECK_THROWS_AS(counting_bounds(2, 3), BoundsError);
    CHECK_THROWS_AS(counting_bounds(12, 3), BoundsError);
    CHECK_THROWS_AS(counting_bounds(8, 4), BoundsError);
    CHECK_THROWS_AS(counting_bounds(8, 1), BoundsError);
  }

  TEST_CASE("JSON round trip is lossless") {
    for (const auto& b : bounds_sweep(128, 9)) {
      const auto j = b.to_json();
      CHECK(BoundReport::from_json(nlohmann::json::parse(j.dump())) == b);
      CHECK(j["q"].is_string());
    }
  }

  TEST_CASE("sweep covers admissible pairs in order") {
    const auto v = bounds_sweep(128, 9);
    CHECK(v.size() == 12);  // s in {8, 32, 128}, t in {3, 5, 7, 9}
    CHECK(v.front().s == 8);
    CHECK(v.back().s == 128);
    CHECK(v.back().t == 9);
    const std::string csv = sweep_to_csv(v);
    CHECK(csv.rfind("s,t,q,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
  }
}
