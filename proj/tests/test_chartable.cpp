#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "sz/chartable.hpp"
#include "sz/cyclotomic.hpp"
#include "sz/named.hpp"
#include "support.hpp"

using namespace sz;

namespace {

using Complex = std::complex<double>;

const CharacterTable& sz8_table() {
  static const CharacterTable t = character_table(test::sz8().group(), {.jobs = 2});
  return t;
}

Complex value(const CharacterTable& t, std::size_t row, std::size_t col) {
  return test::numeric(t.irr[row][col], t.exponent);
}

bool near(Complex a, Complex b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_SUITE("chartable") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(13).size() == 13);
    CHECK(cyclotomic_polynomial(105).size() == 49);  // phi(105) = 48
    // Phi_105 is the first with a coefficient of absolute value 2.
    const auto p105 = cyclotomic_polynomial(105);
    CHECK(std::any_of(p105.begin(), p105.end(), [](std::int64_t c) { return c == -2; }));
  }

  TEST_CASE("canonical reduction preserves numeric value") {
    std::mt19937 rng(3);
    for (std::uint32_t e : {4U, 12U, 35U, 1820U}) {
      const CyclotomicField field(e);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::int64_t> dense(e, 0);
        for (int k = 0; k < 6; ++k) dense[rng() % e] += static_cast<std::int64_t>(rng() % 7) - 3;
        Cyc raw;
        for (std::uint32_t k = 0; k < e; ++k) {
          if (dense[k] != 0) raw.terms.push_back({k, dense[k]});
        }
        const Cyc reduced = field.reduce(dense);
        CHECK(near(test::numeric(raw, e), test::numeric(reduced, e)));
        for (const auto& [k, c] : reduced.terms) CHECK(k < field.degree());
      }
    }
  }

  TEST_CASE("sum of all roots of unity vanishes; products and conjugates") {
    const CyclotomicField field(7);
    std::vector<std::pair<std::uint64_t, std::int64_t>> all;
    for (std::uint64_t k = 0; k < 7; ++k) all.push_back({k, 1});
    CHECK(field.from_terms(all).is_zero());
    const Cyc z = field.from_terms({{1, 1}});
    std::vector<std::int64_t> acc(7, 0);
    field.add_product_conj(acc, z, z, 1);
    CHECK(field.reduce(acc) == Cyc::integer(1));
    std::fill(acc.begin(), acc.end(), 0);
    field.add_product(acc, z, z, 3);
    CHECK(field.reduce(acc) == field.from_terms({{2, 3}}));
    CHECK(CyclotomicField::to_string(Cyc::integer(-2)) == "-2");
    CHECK(CyclotomicField::to_string(field.from_terms({{0, 1}, {3, -1}, {4, 2}})) == "1-z^3+2*z^4");
    const CyclotomicField big(28);
    CHECK(near(test::numeric(big.embed(z, field), 28), test::numeric(z, 7)));
  }

  TEST_CASE("Sz(8) table: classes, degrees and orthogonality") {
    const auto& t = sz8_table();
    CHECK(t.size() == 11);
    auto d = t.degrees;
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<std::int64_t>{1, 14, 14, 35, 35, 35, 64, 65, 65, 65, 91});
    const TableChecks c = check_table(t);
    CHECK(c.all_pass());
    CHECK(c.degree_square_sum == 29120);
    CHECK(t.prime % t.exponent == 1);
  }

  TEST_CASE("Sz(8) table: floating-point orthogonality oracle") {
    const auto& t = sz8_table();
    const double order = static_cast<double>(t.group_order);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        Complex s = 0;
        for (std::size_t c = 0; c < t.size(); ++c) {
          s += static_cast<double>(t.classes[c].size) * value(t, i, c) * std::conj(value(t, j, c));
        }
        CHECK(near(s / order, i == j ? 1.0 : 0.0));
      }
    }
    for (std::size_t c = 0; c < t.size(); ++c) {
      double s = 0;
      for (std::size_t i = 0; i < t.size(); ++i) s += std::norm(value(t, i, c));
      CHECK(std::abs(s - static_cast<double>(t.classes[c].centralizer_order)) < 1e-8);
      for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(near(value(t, i, t.classes[c].inverse_class), std::conj(value(t, i, c))));
        CHECK(std::abs(value(t, i, c)) <= static_cast<double>(t.degrees[i]) + 1e-9);
      }
    }
  }

  TEST_CASE("character values are constant on classes and multiplicative on the centre") {
    const auto& t = sz8_table();
    const auto& g = test::sz8().group();
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t.irr[i][t.class_of[GroupTable::identity()]] == Cyc::integer(t.degrees[i]));
    for (ElementId x = 0; x < g.order(); x += 101) {
      CHECK(t.classes[t.class_of[x]].element_order == g.element_order(x));
      CHECK(t.class_of[g.inv(x)] == t.classes[t.class_of[x]].inverse_class);
    }
  }

  TEST_CASE("B0 table matches the dihedral group of order 14") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    const Subgroup& b0 = ctx.named().B0;
    const Subgroup& h = ctx.named().H;
    const SubgroupTable st = standalone(g, b0);
    const CharacterTable t = character_table(st.table);
    CHECK(t.size() == 5);
    CHECK(check_table(t).all_pass());

    // Closed-form characters of D14 evaluated at each class representative.
    const ElementId r = h.generators()[0];
    std::vector<std::vector<Complex>> oracle(5, std::vector<Complex>(t.size()));
    for (std::size_t c = 0; c < t.size(); ++c) {
      const ElementId x = st.to_ambient[t.classes[c].representative];
      int k = -1;
      for (int e = 0; e < 7; ++e) {
        if (g.pow(r, e) == x) k = e;
      }
      oracle[0][c] = 1;
      oracle[1][c] = k >= 0 ? 1 : -1;
      for (int j = 1; j <= 3; ++j) {
        oracle[1 + j][c] = k >= 0 ? 2 * std::cos(2 * std::numbers::pi * j * k / 7) : 0;
      }
    }
    std::vector<bool> used(5, false);
    for (std::size_t i = 0; i < t.size(); ++i) {
      bool matched = false;
      for (std::size_t o = 0; o < 5 && !matched; ++o) {
        if (used[o]) continue;
        bool same = true;
        for (std::size_t c = 0; c < t.size(); ++c) same = same && near(value(t, i, c), oracle[o][c]);
        if (same) {
          used[o] = true;
          matched = true;
        }
      }
      CHECK(matched);
    }
  }

  TEST_CASE("subgroup tables pass the same invariants and fuse into G") {
    const auto& ctx = test::sz8();
    const auto& tg = sz8_table();
    for (const auto& name : subgroup_names()) {
      CAPTURE(name);
      const SubgroupTable st = standalone(ctx.group(), subgroup_by_name(ctx.named(), name));
      const CharacterTable th = character_table(st.table);
      CHECK(check_table(th).all_pass());
      const auto fusion = class_fusion(st, th, tg);
      for (std::size_t c = 0; c < th.size(); ++c) {
        CHECK(th.classes[c].element_order == tg.classes[fusion[c]].element_order);
      }
    }
  }

  TEST_CASE("tables are deterministic and independent of the thread count") {
    const auto& g = test::sz8().group();
    const auto a = character_table(g, {.jobs = 1});
    CHECK(table_to_csv(a) == table_to_csv(sz8_table()));
    CHECK(table_to_json(a) == table_to_json(sz8_table()));
  }

  TEST_CASE("CSV layout") {
    const std::string csv = table_to_csv(sz8_table());
    CHECK(csv.rfind("character,1a,2a,4a,4b,5a,7a,7b,7c,13a,13b,13c\n", 0) == 0);
    CHECK(csv.find("\nchi1,1,1,1,1,1,1,1,1,1,1,1\n") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
  }
}
