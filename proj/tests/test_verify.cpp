#include <doctest.h>

#include <algorithm>

#include "sz/verify.hpp"

using namespace sz;

namespace {

VerifyOptions with_jobs(unsigned jobs, bool corrupt_b0 = false) {
  VerifyOptions o;
  o.jobs = jobs;
  o.corrupt_b0 = corrupt_b0;
  return o;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("report covers AC1..AC10 and is reproducible") {
    const VerifyReport a = run_verification(with_jobs(2));
    const VerifyReport b = run_verification(with_jobs(1));
    REQUIRE(a.claims.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(a.claims[i].id == "AC" + std::to_string(i + 1));
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_table() == b.to_table());
    CHECK(a.to_json()["schema_version"] == kSchemaVersion);
    CHECK_FALSE(a.to_json()["claims"][0].contains("runtime_seconds"));
    CHECK(a.to_json(true)["claims"][0].contains("runtime_seconds"));
  }

  TEST_CASE("every claim except the B0/B1/B2 depth values passes") {
    const VerifyReport r = run_verification(with_jobs(2));
    for (const auto& c : r.claims) {
      CAPTURE(c.id);
      if (c.id == "AC3") {
        CHECK(c.failures == std::vector<std::string>{"dc_B0", "dc_B1", "dc_B2"});
      } else {
        CHECK(c.pass);
      }
    }
  }

  TEST_CASE("corrupting B0 is detected") {
    const VerifyReport r = run_verification(with_jobs(2, true));
    CHECK_FALSE(r.all_pass());
    CHECK_FALSE(r.claim("AC2").pass);
    const auto& f = r.claim("AC2").failures;
    CHECK(std::find(f.begin(), f.end(), "order_B0") != f.end());
  }
}
