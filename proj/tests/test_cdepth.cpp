#include <doctest.h>

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>
#include <string>
#include <unordered_set>

#include "sz/cdepth.hpp"
#include "sz/error.hpp"
#include "sz/named.hpp"
#include "support.hpp"

using namespace sz;

namespace {

// Depth <= 3 decided from the (H,H)-biset point stabilizers directly: every
// twisted diagonal {(x1 k x1^-1, k) : k in H ∩ H^x1 ∩ H^x2} must already
// occur as {(y k y^-1, k) : k in H ∩ H^y} for some y in G.
bool depth_at_most_three_biset(const GroupTable& g, const Subgroup& h) {
  auto key = [&](ElementId x, const std::vector<ElementId>& ks) {
    std::string s;
    for (const auto k : ks) {
      const ElementId a = g.conj(k, g.inv(x));
      s.append(reinterpret_cast<const char*>(&a), sizeof a);
      s.append(reinterpret_cast<const char*>(&k), sizeof k);
    }
    return s;
  };
  auto meet_with = [&](ElementId y) {
    std::vector<ElementId> ks;
    for (const auto k : h.elements()) {
      if (h.contains(g.conj(k, g.inv(y)))) ks.push_back(k);
    }
    return ks;
  };
  std::unordered_set<std::string> available;
  for (ElementId y = 0; y < g.order(); ++y) available.insert(key(y, meet_with(y)));

  // H ∩ H^x depends only on the conjugate H^x.
  const ConjugateOrbit orbit = conjugate_orbit(g, h);
  std::vector<std::vector<ElementId>> meets;
  for (const auto r : orbit.representatives) meets.push_back(meet_with(r));
  for (ElementId x1 = 0; x1 < g.order(); ++x1) {
    const auto& m1 = meets[orbit.index_of[x1]];
    for (const auto& m2 : meets) {
      std::vector<ElementId> ks;
      std::set_intersection(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(ks));
      if (available.count(key(x1, ks)) == 0) return false;
    }
  }
  return true;
}

const DepthProfile& profile(const std::string& name) {
  static std::map<std::string, DepthProfile> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    const auto& ctx = test::sz8();
    it = cache.emplace(name, dc_min(ctx.group(), subgroup_by_name(ctx.named(), name), 2)).first;
  }
  return it->second;
}

}  // namespace

TEST_SUITE("cdepth") {
  TEST_CASE("combinatorial depth of the named subgroups of Sz(8)") {
    CHECK(profile("NF").dc == 5);
    CHECK(profile("F").dc == 3);
    CHECK(profile("H").dc == 3);
    CHECK(profile("A1").dc == 3);
    CHECK(profile("A2").dc == 3);
    CHECK(profile("ZF").dc == 3);
    CHECK(profile("ORDER2").dc == 3);
    CHECK(profile("C4").dc == 3);
    CHECK(profile("K4").dc == 4);
    CHECK(profile("L").dc == 4);
  }

  TEST_CASE("B0, B1 and B2 have combinatorial depth 3") {
    CHECK(profile("B0").dc == 3);
    CHECK(profile("B1").dc == 3);
    CHECK(profile("B2").dc == 3);
  }

  TEST_CASE("N_G(F) has delta*, delta and delta^* all equal to 3") {
    const auto& p = profile("NF");
    CHECK(p.delta_star == 3);
    CHECK(p.delta == 3);
    CHECK(p.delta_upper_star == 3);
    CHECK(p.levels == std::vector<std::size_t>{1, 65, 66});
  }

  TEST_CASE("depth <= 3 agrees with the biset oracle") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    for (const char* name : {"ORDER2", "C4", "K4", "ZF", "B0"}) {
      CAPTURE(name);
      const Subgroup& h = subgroup_by_name(ctx.named(), name);
      const auto lat = IntersectionLattice::build(g, h);
      const bool engine = dc_leq_odd(g, lat, 2);
      CHECK(engine == depth_at_most_three_biset(g, h));
      CHECK(engine == (profile(name).dc <= 3));
    }
  }

  TEST_CASE("sandwich invariants hold on every named subgroup") {
    for (const auto& name : subgroup_names()) {
      CAPTURE(name);
      const auto& p = profile(name);
      CHECK(p.sandwich_dc);
      CHECK(p.sandwich_delta);
      CHECK(p.ti_rule);
      CHECK(p.central_core_rule);
      CHECK(p.witnesses_sound);
      CHECK(2 * p.delta_star - 1 <= p.dc);
      CHECK(p.dc <= 2 * p.delta);
      CHECK(p.delta_upper_star <= p.conjugates);
    }
  }

  TEST_CASE("TI subgroups have depth at most 3") {
    for (const char* name : {"F", "H", "A1", "A2"}) {
      CHECK(profile(name).trivial_intersection);
      CHECK(profile(name).dc <= 3);
    }
  }

  TEST_CASE("the whole group has depth 1; lattice of a normal subgroup is a point") {
    const auto& g = test::sz8().group();
    const auto p = dc_min(g, whole_group(g));
    CHECK(p.normal);
    CHECK(p.dc == 1);
    CHECK(p.levels == std::vector<std::size_t>{1});
  }

  TEST_CASE("lattice witnesses reproduce their intersections") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    const auto lat = IntersectionLattice::build(g, ctx.named().B2);
    for (const auto& node : lat.nodes()) {
      const Subgroup direct = intersect_conjugates(g, ctx.named().B2, node.witness);
      CHECK(direct.order() == node.order);
      CHECK(lat.find(lat.local_of(direct)).has_value());
      CHECK(node.witness.size() == node.level);
    }
    CHECK(lat.level_size(lat.stabilized_at()) == lat.level_size(lat.stabilized_at() + 3));
  }

  TEST_CASE("odd test honours its work budget") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    const auto lat = IntersectionLattice::build(g, ctx.named().NF);
    OddTestOptions tiny;
    tiny.budget = 1;
    CHECK_THROWS_AS(dc_leq_odd(g, lat, 3, tiny), DepthError);
    CHECK_THROWS_AS(dc_leq_even(lat, 0), DepthError);
  }

  TEST_CASE("subgroups of Z(F) meet in order at least 2^(m1+m2-f)") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    const Subgroup& zf = ctx.named().ZF;
    const auto subs = all_subgroups(g, zf);
    CHECK(subs.size() == 16);  // 1 + 7 + 7 + 1 in (Z/2)^3
    const int f = 3;
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        const int m1 = std::countr_zero(a.order());
        const int m2 = std::countr_zero(b.order());
        if (m1 < 1 || m2 < 1) continue;
        const std::size_t meet = intersect(g, a, b).order();
        if (m1 + m2 > f) CHECK(meet >= (std::size_t{1} << (m1 + m2 - f)));
      }
    }
  }

  TEST_CASE("subgroup enumeration of small groups") {
    const auto& ctx = test::sz8();
    const auto& g = ctx.group();
    CHECK(all_subgroups(g, ctx.named().C4).size() == 3);
    CHECK(all_subgroups(g, ctx.named().H).size() == 2);
    CHECK(all_subgroups(g, ctx.named().B0).size() == 10);  // dihedral of order 14: 1, 7 of order 2, C7, B0
  }
}
