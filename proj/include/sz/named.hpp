#pragma once

// The standard subgroups of Sz(q) acting on its ovoid.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sz/geometry.hpp"
#include "sz/group.hpp"

namespace sz {

struct NamedSubgroups {
  Subgroup NF;      // stabilizer of p_inf
  Subgroup F;       // Sylow 2-subgroup fixing p_inf
  Subgroup ZF;      // center of F
  Subgroup H;       // pointwise stabilizer of {p_inf, p(0,0)}
  Subgroup B0;      // normalizer of H
  Subgroup A1;      // cyclic of order q+2r+1
  Subgroup A2;      // cyclic of order q-2r+1
  Subgroup B1;      // normalizer of A1
  Subgroup B2;      // normalizer of A2
  Subgroup K4;      // four-group in Z(F)
  Subgroup C4;      // cyclic of order 4 in F
  Subgroup L;       // index-2 subgroup of Z(F)
  Subgroup ORDER2;  // generated by one involution of F
};

/// Expected orders, keyed by q (with r = 2^m).
struct CatalogueOrders {
  std::uint64_t NF, F, ZF, H, B0, A1, A2, B1, B2;
  static CatalogueOrders for_q(std::uint64_t q);
};

/// Builds every named subgroup. Throws GroupError if an order disagrees
/// with the catalogue.
NamedSubgroups named_subgroups(const GroupTable& g, const Ovoid& ovoid);

/// The fixed naming vocabulary, in report order.
const std::vector<std::string>& subgroup_names();
const Subgroup& subgroup_by_name(const NamedSubgroups& named, std::string_view name);

struct PartitionReport {
  bool tiles = false;        // every nontrivial element covered exactly once
  std::uint64_t count = 0;   // 1 + sum over classes of conjugates * (|X| - 1)
  struct Part {
    std::string name;
    std::size_t conjugates = 0;
    std::size_t order = 0;
  };
  std::vector<Part> parts;
};

/// Checks that conjugates of F, H, A1, A2 partition G \ {1}.
PartitionReport partition_check(const GroupTable& g, const NamedSubgroups& named);

/// Smallest nilpotency class c with the lower central series reaching 1,
/// or 0 if it never does.
int nilpotency_class(const GroupTable& g, const Subgroup& k);

}  // namespace sz
