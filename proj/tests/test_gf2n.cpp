#include <doctest.h>

#include <random>
#include <set>

#include "sz/error.hpp"
#include "sz/gf2n.hpp"
#include "support.hpp"

using namespace sz;

TEST_SUITE("gf2n") {
  TEST_CASE("default moduli are pinned and irreducible") {
    CHECK(Field::default_modulus(3) == 0b1011);
    CHECK(Field::default_modulus(5) == 0b100101);
    CHECK(Field::default_modulus(9) == 0b1000010001);
    for (int n = 1; n <= Field::kMaxDegree; n += 2) CHECK(is_irreducible(Field::default_modulus(n)));
    CHECK_FALSE(is_irreducible(0b101));  // (x+1)^2
  }

  TEST_CASE("GF(8) products agree with long division for all 64 pairs") {
    const Field f = Field::standard(3);
    for (std::uint32_t a = 0; a < 8; ++a) {
      for (std::uint32_t b = 0; b < 8; ++b) {
        CHECK(f.mul(f.element(a), f.element(b)).bits == test::longdiv_mul(a, b, 0b1011));
      }
    }
  }

  TEST_CASE("products agree with long division in GF(32) and GF(512)") {
    for (int n : {5, 9}) {
      const Field f = Field::standard(n);
      std::mt19937 rng(17U + static_cast<unsigned>(n));
      for (int i = 0; i < 2000; ++i) {
        const std::uint32_t a = rng() % f.order();
        const std::uint32_t b = rng() % f.order();
        CHECK(f.mul(f.element(a), f.element(b)).bits == test::longdiv_mul(a, b, f.modulus()));
      }
    }
  }

  TEST_CASE("pi agrees with repeated squaring and squares to the Frobenius map") {
    for (int n : {3, 5, 9}) {
      const Field f = Field::standard(n);
      for (const auto x : f.elements()) {
        CHECK(f.frobenius_pi(x).bits == test::longdiv_pow2k(x.bits, f.m() + 1, f.modulus()));
        CHECK(f.frobenius_pi(f.frobenius_pi(x)) == f.square(x));
      }
    }
  }

  TEST_CASE("pi is a field automorphism") {
    const Field f = Field::standard(9);
    std::mt19937 rng(5);
    std::set<std::uint32_t> image;
    for (const auto x : f.elements()) image.insert(f.frobenius_pi(x).bits);
    CHECK(image.size() == f.order());
    for (int i = 0; i < 500; ++i) {
      const auto a = f.element(rng() % f.order());
      const auto b = f.element(rng() % f.order());
      CHECK(f.frobenius_pi(f.mul(a, b)) == f.mul(f.frobenius_pi(a), f.frobenius_pi(b)));
      CHECK(f.frobenius_pi(f.add(a, b)) == f.add(f.frobenius_pi(a), f.frobenius_pi(b)));
    }
  }

  TEST_CASE("id + pi has kernel {0,1} and misses 1") {
    for (int n : {3, 5, 9}) {
      const Field f = Field::standard(n);
      std::vector<std::uint32_t> kernel;
      bool hits_one = false;
      for (const auto x : f.elements()) {
        const auto y = f.id_plus_pi(x);
        if (y == f.zero()) kernel.push_back(x.bits);
        hits_one = hits_one || y == f.one();
      }
      CHECK(kernel == std::vector<std::uint32_t>{0, 1});
      CHECK_FALSE(hits_one);
    }
  }

  TEST_CASE("field axioms on random triples") {
    const Field f = Field::standard(9);
    std::mt19937 rng(99);
    for (int i = 0; i < 1000; ++i) {
      const auto a = f.element(rng() % f.order());
      const auto b = f.element(rng() % f.order());
      const auto c = f.element(rng() % f.order());
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }

  TEST_CASE("primitive element has full order") {
    for (int n : {3, 5, 9}) {
      const Field f = Field::standard(n);
      CHECK(f.multiplicative_order(f.primitive_element()) == f.order() - 1);
    }
  }

  TEST_CASE("subfields and the embedding of GF(8) into GF(512)") {
    const Field big = Field::standard(9);
    const Field small = Field::standard(3);
    CHECK(big.subfield(3).size() == 8);
    CHECK(big.subfield(1).size() == 2);
    CHECK_THROWS_AS(big.subfield(2), FieldError);
    const auto emb = subfield_embedding(small, big);
    const Subfield sub = big.subfield(3);
    std::set<std::uint32_t> image;
    for (const auto x : small.elements()) {
      CHECK(sub.contains(emb[x.bits]));
      image.insert(emb[x.bits].bits);
      CHECK(big.frobenius_pi(emb[x.bits]) == emb[small.frobenius_pi(x).bits]);
      for (const auto y : small.elements()) {
        CHECK(big.mul(emb[x.bits], emb[y.bits]) == emb[small.mul(x, y).bits]);
        CHECK(big.add(emb[x.bits], emb[y.bits]) == emb[small.add(x, y).bits]);
      }
    }
    CHECK(image.size() == 8);
    CHECK_THROWS_AS(subfield_embedding(Field::standard(5), big), FieldError);
  }

  TEST_CASE("modulus parsing and hex round trip") {
    CHECK(parse_modulus("9,4,0") == 0b1000010001);
    CHECK(format_modulus(0b1011) == "3,1,0");
    CHECK_THROWS_AS(parse_modulus("3,x"), UsageError);
    CHECK_THROWS_AS(Field(3, 0b1001), FieldError);  // x^3+1 is reducible
    const Field f = Field::standard(9);
    for (const auto x : f.elements()) CHECK(f.from_hex(f.to_hex(x)) == x);
  }

  TEST_CASE("mixing elements of different fields is rejected") {
    const Field a = Field::standard(3);
    const Field b = Field::standard(5);
    CHECK_THROWS_AS(a.mul(a.one(), b.one()), FieldError);
  }
}
