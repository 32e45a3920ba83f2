#include <doctest.h>

#include <complex>

#include "sz/cdepth.hpp"
#include "sz/chartable.hpp"
#include "sz/named.hpp"
#include "sz/odepth.hpp"
#include "support.hpp"

using namespace sz;

namespace {

const CharacterTable& sz8_table() {
  static const CharacterTable t = character_table(test::sz8().group(), {.jobs = 2});
  return t;
}

struct Pieces {
  SubgroupTable sub;
  CharacterTable th;
  std::vector<std::uint32_t> fusion;
  InclusionMatrix m;
};

Pieces pieces(const GroupTable& g, const Subgroup& h, const CharacterTable& tg) {
  Pieces p{standalone(g, h), {}, {}, {}};
  p.th = character_table(p.sub.table);
  p.fusion = class_fusion(p.sub, p.th, tg);
  p.m = inclusion_matrix(p.th, tg, p.fusion);
  return p;
}

Subgroup local_subgroup(const GroupTable& g, const SubgroupTable& ambient, const Subgroup& k) {
  Bitset members(ambient.table.order());
  for (ElementId x = 0; x < ambient.table.order(); ++x) {
    if (k.contains(ambient.to_ambient[x])) members.set(x);
  }
  (void)g;
  return Subgroup::from_members(ambient.table, members);
}

}  // namespace

TEST_SUITE("odepth") {
  TEST_CASE("H = G gives the identity matrix") {
    const auto& tg = sz8_table();
    std::vector<std::uint32_t> fusion(tg.size());
    for (std::uint32_t c = 0; c < tg.size(); ++c) fusion[c] = c;
    const InclusionMatrix m = inclusion_matrix(tg, tg, fusion);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m.m[i][j] == (i == j ? 1 : 0));
    }
    const auto chain = power_chain(to_big(m), 5);
    for (const auto& p : chain) CHECK(p == to_big(m));
    CHECK(ord_depth_matrix(m) == 2);
  }

  TEST_CASE("trivial subgroup gives the row of degrees") {
    const auto& g = test::sz8().group();
    const auto p = pieces(g, trivial_subgroup(g), sz8_table());
    REQUIRE(p.m.rows() == 1);
    for (std::size_t j = 0; j < p.m.cols(); ++j) CHECK(p.m.m[0][j] == sz8_table().degrees[j]);
  }

  TEST_CASE("B0 inclusion matrix agrees with an element-level numeric oracle") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    const auto& tg = sz8_table();
    const auto p = pieces(g, ctx.named().B0, tg);
    const double order = static_cast<double>(p.sub.table.order());
    for (std::size_t i = 0; i < p.m.rows(); ++i) {
      for (std::size_t j = 0; j < p.m.cols(); ++j) {
        std::complex<double> s = 0;
        for (ElementId x = 0; x < p.sub.table.order(); ++x) {
          const auto psi = test::numeric(p.th.irr[i][p.th.class_of[x]], p.th.exponent);
          const auto chi = test::numeric(tg.irr[j][tg.class_of[p.sub.to_ambient[x]]], tg.exponent);
          s += psi * std::conj(chi);
        }
        CHECK(std::abs(s / order - static_cast<double>(p.m.m[i][j])) < 1e-9);
      }
    }
    CHECK(p.m.column_identity());
    CHECK(p.m.row_identity());
  }

  TEST_CASE("power chain shapes, Gram symmetry and support growth on B0") {
    const auto& ctx = test::sz8();
    const auto p = pieces(ctx.group(), ctx.named().B0, sz8_table());
    const auto chain = power_chain(to_big(p.m), 4);
    REQUIRE(chain.size() == 4);
    const BigMatrix& m2 = chain[1];
    CHECK(m2.size() == p.m.rows());
    CHECK(m2[0].size() == p.m.rows());
    CHECK(m2 == transpose(m2));
    for (std::size_t i = 0; i < m2.size(); ++i) CHECK(m2[i][i] > 0);
    CHECK(chain[2].size() == p.m.rows());
    CHECK(chain[2][0].size() == p.m.cols());
    const auto s1 = support(chain[0]);
    const auto s3 = support(chain[2]);
    for (std::size_t k = 0; k < s1.size(); ++k) CHECK((!s1[k] || s3[k]));
    CHECK(chain[3] == multiply(chain[2], transpose(chain[0])));
  }

  TEST_CASE("ordinary depth is 3 except 5 for N_G(F); both routes agree") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    for (const auto& name : subgroup_names()) {
      CAPTURE(name);
      const Subgroup& h = subgroup_by_name(ctx.named(), name);
      const DepthProfile prof = dc_min(g, h, 2);
      const OrdinaryDepthReport r = ordinary_depth(g, h, sz8_table(), prof.delta_star, prof.core_central, 2);
      CHECK(r.depth_matrix == (name == "NF" ? 5U : 3U));
      CHECK(r.depth_graph == r.depth_matrix);
      CHECK(r.depth_matrix <= prof.dc);
      CHECK(r.depth_matrix <= r.bound_core);
      CHECK(r.depth_matrix >= 3);
      CHECK(r.degree_identities);
      if (name == "NF") CHECK(r.m_trivial >= 2);
    }
  }

  TEST_CASE("distances in the B0 induction graph are at most 1") {
    const auto& ctx = test::sz8();
    const auto p = pieces(ctx.group(), ctx.named().B0, sz8_table());
    const InductionGraph graph(p.m);
    for (std::size_t a = 0; a < graph.vertices(); ++a) {
      CHECK(graph.distance(a, a) == 0);
      CHECK(graph.adjacent(a, a));
      for (std::size_t b = 0; b < graph.vertices(); ++b) {
        CHECK(graph.distance(a, b) <= 1);
        CHECK(graph.adjacent(a, b) == graph.adjacent(b, a));
      }
    }
    CHECK(ord_depth_graph(graph, false) == 3);
  }

  TEST_CASE("F is normal in N_G(F): depth at most 2 by both routes") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    const SubgroupTable nf = standalone(g, ctx.named().NF);
    const CharacterTable tnf = character_table(nf.table);
    const Subgroup f_local = local_subgroup(g, nf, ctx.named().F);
    CHECK(is_normal(nf.table, f_local));
    const auto p = pieces(nf.table, f_local, tnf);
    CHECK(ord_depth_matrix(p.m) == 2);
    CHECK(ord_depth_graph(InductionGraph(p.m), true) == 2);
    CHECK(depth_value(2) == "≤2 (normal)");
  }

  TEST_CASE("disconnected graphs report the infinite sentinel") {
    InclusionMatrix m;
    m.m = {{1, 0}, {0, 1}};
    m.row_degrees = {1, 1};
    m.col_degrees = {1, 1};
    const InductionGraph graph(m);
    CHECK(graph.distance(0, 1) == kInfiniteDistance);
    CHECK(graph.max_distance() == kInfiniteDistance);
    CHECK(graph.m_chi(0) == kInfiniteDistance);
    CHECK(ord_depth_graph(graph, false) == kInfiniteDistance);
    CHECK(depth_value(kInfiniteDistance) == "infinite");
  }

  TEST_CASE("core bound") {
    CHECK(depth_bound_from_core(2, true) == 3);
    CHECK(depth_bound_from_core(3, true) == 5);
    CHECK(depth_bound_from_core(2, false) == 4);
  }

  TEST_CASE("report JSON and CSV") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    const DepthProfile prof = dc_min(g, ctx.named().NF, 2);
    const auto r = ordinary_depth(g, ctx.named().NF, sz8_table(), prof.delta_star, prof.core_central);
    const auto j = r.to_json();
    CHECK(j["depth"] == 5);
    CHECK(j["depth_graph"] == 5);
    CHECK(j["bound_core"] == 5);
    CHECK(j["inclusion_matrix"].size() == r.matrix.rows());
    const std::string csv = inclusion_to_csv(r.matrix);
    CHECK(csv.rfind("psi,chi1,", 0) == 0);
  }
}
