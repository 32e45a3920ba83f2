#include "sz/named.hpp"

#include <array>
#include <bit>

#include "sz/error.hpp"

namespace sz {

namespace {

void expect_order(const char* name, const Subgroup& k, std::uint64_t expected) {
  if (k.order() != expected) {
    throw GroupError(std::string("subgroup ") + name + " has order " + std::to_string(k.order()) + ", expected " +
                     std::to_string(expected));
  }
}

Subgroup filter(const GroupTable& g, auto&& pred) {
  Bitset members(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    if (pred(x)) members.set(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup hall_cyclic(const GroupTable& g, std::uint64_t n) {
  for (ElementId x = 1; x < g.order(); ++x) {
    const std::uint32_t o = g.element_order(x);
    if (o > 1 && n % o == 0) {
      const std::array<ElementId, 1> seed{x};
      return centralizer(g, closure(g, seed));
    }
  }
  throw GroupError("no element of order dividing " + std::to_string(n));
}

// Grows a subgroup from the smallest involutions of `within` until it
// reaches `target` elements.
Subgroup involution_span(const GroupTable& g, const Subgroup& within, std::size_t target) {
  std::vector<ElementId> gens;
  Subgroup span = trivial_subgroup(g);
  for (const auto x : within.elements()) {
    if (span.order() >= target) break;
    if (g.element_order(x) != 2 || span.contains(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  if (span.order() != target) throw GroupError("could not build an elementary abelian subgroup of the requested order");
  return span;
}

}  // namespace

CatalogueOrders CatalogueOrders::for_q(std::uint64_t q) {
  const int n = std::countr_zero(q);
  const std::uint64_t r = std::uint64_t{1} << ((n - 1) / 2);
  CatalogueOrders c{};
  c.F = q * q;
  c.NF = q * q * (q - 1);
  c.ZF = q;
  c.H = q - 1;
  c.B0 = 2 * (q - 1);
  c.A1 = q + 2 * r + 1;
  c.A2 = q - 2 * r + 1;
  c.B1 = 4 * c.A1;
  c.B2 = 4 * c.A2;
  return c;
}

NamedSubgroups named_subgroups(const GroupTable& g, const Ovoid& ovoid) {
  const CatalogueOrders want = CatalogueOrders::for_q(ovoid.field().order());
  NamedSubgroups s;
  const std::array<std::uint16_t, 1> inf{static_cast<std::uint16_t>(Ovoid::kInfinity)};
  const std::array<std::uint16_t, 2> two{static_cast<std::uint16_t>(Ovoid::kInfinity),
                                         static_cast<std::uint16_t>(Ovoid::kOrigin)};
  s.NF = pointwise_stabilizer(g, inf);
  s.F = filter(g, [&](ElementId x) {
    if (x == GroupTable::identity()) return true;
    const auto img = g.images(x);
    if (img[Ovoid::kInfinity] != Ovoid::kInfinity) return false;
    for (std::size_t p = 1; p < img.size(); ++p) {
      if (img[p] == p) return false;
    }
    return true;
  });
  s.ZF = center(g, s.F);
  s.H = pointwise_stabilizer(g, two);
  s.B0 = normalizer(g, s.H);
  s.A1 = hall_cyclic(g, want.A1);
  s.A2 = hall_cyclic(g, want.A2);
  s.B1 = normalizer(g, s.A1);
  s.B2 = normalizer(g, s.A2);

  expect_order("NF", s.NF, want.NF);
  expect_order("F", s.F, want.F);
  expect_order("ZF", s.ZF, want.ZF);
  expect_order("H", s.H, want.H);
  expect_order("B0", s.B0, want.B0);
  expect_order("A1", s.A1, want.A1);
  expect_order("A2", s.A2, want.A2);
  expect_order("B1", s.B1, want.B1);
  expect_order("B2", s.B2, want.B2);

  s.K4 = involution_span(g, s.ZF, 4);
  s.L = involution_span(g, s.ZF, s.ZF.order() / 2);
  for (const auto x : s.F.elements()) {
    if (g.element_order(x) == 4) {
      const std::array<ElementId, 1> seed{x};
      s.C4 = closure(g, seed);
      break;
    }
  }
  for (const auto x : s.F.elements()) {
    if (g.element_order(x) == 2) {
      const std::array<ElementId, 1> seed{x};
      s.ORDER2 = closure(g, seed);
      break;
    }
  }
  expect_order("C4", s.C4, 4);
  expect_order("ORDER2", s.ORDER2, 2);
  return s;
}

const std::vector<std::string>& subgroup_names() {
  static const std::vector<std::string> names{"NF", "F",  "ZF", "H",  "B0", "A1",    "A2",
                                              "B1", "B2", "K4", "C4", "L",  "ORDER2"};
  return names;
}

const Subgroup& subgroup_by_name(const NamedSubgroups& s, std::string_view name) {
  if (name == "NF") return s.NF;
  if (name == "F") return s.F;
  if (name == "ZF") return s.ZF;
  if (name == "H") return s.H;
  if (name == "B0") return s.B0;
  if (name == "A1") return s.A1;
  if (name == "A2") return s.A2;
  if (name == "B1") return s.B1;
  if (name == "B2") return s.B2;
  if (name == "K4") return s.K4;
  if (name == "C4") return s.C4;
  if (name == "L") return s.L;
  if (name == "ORDER2") return s.ORDER2;
  throw UsageError("unknown subgroup name '" + std::string(name) +
                   "' (expected one of NF F ZF H B0 A1 A2 B1 B2 K4 C4 L ORDER2)");
}

PartitionReport partition_check(const GroupTable& g, const NamedSubgroups& named) {
  PartitionReport report;
  std::vector<std::uint8_t> hits(g.order(), 0);
  report.count = 1;
  const std::array<std::pair<const char*, const Subgroup*>, 4> parts{
      {{"F", &named.F}, {"H", &named.H}, {"A1", &named.A1}, {"A2", &named.A2}}};
  for (const auto& [name, k] : parts) {
    const ConjugateOrbit orbit = conjugate_orbit(g, *k);
    report.parts.push_back({name, orbit.size(), k->order()});
    report.count += static_cast<std::uint64_t>(orbit.size()) * (k->order() - 1);
    for (const auto r : orbit.representatives) {
      for (const auto e : k->elements()) {
        const ElementId c = g.conj(e, r);
        if (hits[c] < 255) ++hits[c];
      }
    }
  }
  report.tiles = true;
  for (ElementId x = 1; x < g.order(); ++x) {
    if (hits[x] != 1) report.tiles = false;
  }
  return report;
}

int nilpotency_class(const GroupTable& g, const Subgroup& k) {
  // Lower central series: K_1 = K, K_{i+1} = [K_i, K].
  Subgroup term = k;
  for (int c = 0; c <= 64; ++c) {
    if (term.is_trivial()) return c;
    std::vector<ElementId> commutators;
    for (const auto a : term.generators()) {
      for (const auto b : k.generators()) {
        commutators.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
      }
    }
    // [K_i, K] is normal in K, so close under conjugation by K.
    Subgroup next = closure(g, commutators);
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<ElementId> seeds(next.generators().begin(), next.generators().end());
      for (const auto e : next.generators()) {
        for (const auto x : k.generators()) {
          const ElementId y = g.conj(e, x);
          if (!next.contains(y)) {
            seeds.push_back(y);
            grew = true;
          }
        }
      }
      if (grew) next = closure(g, seeds);
    }
    if (next == term) return 0;
    term = std::move(next);
  }
  return 0;
}

}  // namespace sz
