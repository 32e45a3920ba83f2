#include <doctest.h>

#include <random>

#include "sz/error.hpp"
#include "sz/s2lab.hpp"
#include "support.hpp"

using namespace sz;

TEST_SUITE("s2lab") {
  TEST_CASE("law on field elements") {
    const Field f = Field::standard(9);
    const UElement e{f.zero(), f.zero()};
    const UElement x{f.element(77), f.element(300)};
    CHECK(u_mul(f, e, x) == x);
    CHECK(u_mul(f, x, e) == x);
    const UElement u10{f.one(), f.zero()};
    CHECK(u_mul(f, u10, u10) == UElement{f.zero(), f.one()});
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
      const UElement y{f.element(rng() % 512), f.element(rng() % 512)};
      CHECK(u_mul(f, y, u_inv(f, y)) == e);
      CHECK(u_mul(f, u_inv(f, y), y) == e);
    }
  }

  TEST_CASE("packed arithmetic matches the law; associativity") {
    const UGroup s(Field::standard(9));
    const Field& f = s.field();
    std::mt19937 rng(12);
    for (int i = 0; i < 2000; ++i) {
      const auto x = static_cast<UGroup::Key>(rng() % s.order());
      const auto y = static_cast<UGroup::Key>(rng() % s.order());
      const auto z = static_cast<UGroup::Key>(rng() % s.order());
      CHECK(s.unpack(s.mul(x, y)) == u_mul(f, s.unpack(x), s.unpack(y)));
      CHECK(s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z)));
      CHECK(s.pack(s.unpack(x)) == x);
    }
  }

  TEST_CASE("exponent 4 with central squares (q = 32 exhaustive)") {
    const UGroup s(Field::standard(5));
    const auto z = center(s);
    for (UGroup::Key x = 0; x < s.order(); ++x) {
      const auto x2 = s.mul(x, x);
      CHECK(s.mul(x2, x2) == 0);
      CHECK(std::binary_search(z.begin(), z.end(), x2));
    }
  }

  TEST_CASE("centre at q = 512 is {u(0,b)}") {
    const UGroup s(Field::standard(9));
    const auto z = center(s, 2);
    CHECK(z.size() == 512);
    CHECK(z == center_closed_form(s));
  }

  TEST_CASE("subfield Sylow subgroup at q = 512, s = 8") {
    const UGroup s(Field::standard(9));
    const auto s1 = subfield_sylow(s, 3);
    CHECK(s1.size() == 64);
    for (const auto x : s1) {
      for (const auto y : s1) CHECK(std::binary_search(s1.begin(), s1.end(), s.mul(x, y)));
    }
    CHECK(subfield_center(s, 3).size() == 8);
    CHECK_THROWS_AS(subfield_sylow(s, 1), FieldError);
    CHECK_THROWS_AS(subfield_sylow(UGroup(Field::standard(5)), 3), FieldError);
    CHECK_THROWS_AS(subfield_sylow(UGroup(Field::standard(3)), 3), FieldError);
  }

  TEST_CASE("normalizers of S1 and of its cosets") {
    const UGroup s(Field::standard(9));
    const auto s1 = subfield_sylow(s, 3);
    const auto ns = normalizer_in_S(s, s1, 2);
    CHECK(ns.size() == 4096);
    CHECK(ns == normalizer_closed_form(s, 3));
    CHECK(ns.size() < s.order());
    CHECK(normalizer_of_coset(s, 3, s.pack(1, 0), 2) == ns);
    CHECK(coset_normalizer_closed_form(s, 3) == ns);
  }

  TEST_CASE("membership predicate: c + pi(c) in GF(s) iff c in GF(s)") {
    const Field f = Field::standard(9);
    const Subfield sub = f.subfield(3);
    for (const auto c : f.elements()) CHECK(sub.contains(f.id_plus_pi(c)) == sub.contains(c));
  }

  TEST_CASE("full report at q = 512, s = 8") {
    const SylowLabReport r = sylow_lab(Field::standard(9), 3, 2);
    CHECK(r.ok());
    REQUIRE(r.census.size() == 2);
    CHECK(r.census[0].is_center);
    CHECK(r.census[0].order == 8);
    CHECK(r.census[0].count == 258048);
    CHECK(r.census[1].is_s1);
    CHECK(r.census[1].count == 4096);
    const auto j = r.to_json();
    CHECK(j["ns_s1_size"] == 4096);
    CHECK(j["coset_normalizers_equal"] == true);
  }

  TEST_CASE("u(a,b) at q = 8 is isomorphic to F in Sz(8)") {
    const auto& ctx = test::sz8();
    const UGroup s(ctx.field());
    const IsoCheck iso = iso_check_with_F(s, ctx.group(), ctx.ovoid(), ctx.named().F);
    CHECK(iso.injective);
    CHECK(iso.image_is_f);
    CHECK(iso.homomorphism);
    CHECK(iso.center_to_zf);
    CHECK(iso.involution_fixes_only_infinity);
  }
}
