#pragma once

// Combinatorial depth from the lattice of multi-conjugate intersections.
//
// U_0 = {H}, U_i = {H ∩ H^x1 ∩ ... ∩ H^xi}. Subgroups of H are stored as
// bitsets over the sorted element list of H ("local" masks).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "sz/bitset.hpp"
#include "sz/group.hpp"

namespace sz {

struct LatticeNode {
  Bitset local;
  std::size_t order = 0;
  std::uint32_t level = 0;             // first level containing the node
  std::vector<ElementId> witness;      // conjugating elements x1..x_level
};

class IntersectionLattice {
 public:
  /// Throws DepthError if the levels have not stabilized by max_level.
  static IntersectionLattice build(const GroupTable& g, const Subgroup& h, std::uint32_t max_level = 16,
                                   unsigned jobs = 1);

  const Subgroup& subgroup() const { return h_; }
  const ConjugateOrbit& orbit() const { return orbit_; }
  std::size_t conjugate_count() const { return orbit_.size(); }
  /// H ∩ H^(rep k) as a local mask.
  const Bitset& conjugate_mask(std::size_t k) const { return masks_[k]; }

  const std::vector<LatticeNode>& nodes() const { return nodes_; }
  /// |U_i|; levels past stabilization repeat the final size.
  std::size_t level_size(std::uint32_t i) const;
  std::vector<std::size_t> level_sizes() const { return level_sizes_; }
  /// Smallest i with U_i = U_(i+1).
  std::uint32_t stabilized_at() const { return stabilized_at_; }
  /// Node indices of U_i.
  std::vector<std::uint32_t> level(std::uint32_t i) const;
  std::optional<std::uint32_t> find(const Bitset& local) const;

  Bitset local_of(const Subgroup& k) const;
  Subgroup to_subgroup(const GroupTable& g, const Bitset& local) const;

 private:
  IntersectionLattice() = default;

  Subgroup h_;
  ConjugateOrbit orbit_;
  std::vector<Bitset> masks_;
  std::vector<LatticeNode> nodes_;
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> index_;
  std::vector<std::size_t> level_sizes_;
  std::uint32_t stabilized_at_ = 0;
};

/// H ∩ H^x1 ∩ ... recomputed directly in G.
Subgroup intersect_conjugates(const GroupTable& g, const Subgroup& h, std::span<const ElementId> xs);

struct DeltaStatistics {
  std::uint32_t delta_star = 0;
  std::uint32_t delta = 0;
  std::uint32_t delta_upper_star = 0;
};

DeltaStatistics delta_statistics(const IntersectionLattice& lattice, const Bitset& core_local);

/// d_c(H,G) <= 2i, for i >= 1.
bool dc_leq_even(const IntersectionLattice& lattice, std::uint32_t i);

struct OddTestOptions {
  unsigned jobs = 1;
  std::uint64_t budget = std::uint64_t{1} << 34;  // inner-loop steps before giving up
};

/// d_c(H,G) <= 2i-1, for i >= 1. Throws DepthError if the work budget runs out.
bool dc_leq_odd(const GroupTable& g, const IntersectionLattice& lattice, std::uint32_t i,
                const OddTestOptions& options = {});

struct DepthProfile {
  std::size_t order = 0;
  std::size_t normalizer_order = 0;
  std::size_t conjugates = 0;  // |G : N_G(H)|
  std::size_t core_order = 0;
  bool core_central = false;
  bool normal = false;
  bool trivial_intersection = false;
  std::uint32_t delta_star = 0;
  std::uint32_t delta = 0;
  std::uint32_t delta_upper_star = 0;
  std::uint32_t dc = 0;
  std::vector<std::size_t> levels;
  std::uint32_t stabilized_at = 0;

  // Consistency checks evaluated after the search.
  bool sandwich_dc = false;      // 2δ*-1 <= dc <= 2δ
  bool sandwich_delta = false;   // δ* <= δ <= δ^* <= |G:N_G(H)|
  bool central_core_rule = true; // δ* = δ and core central => dc = 2δ-1
  bool ti_rule = true;           // TI and nontrivial => dc <= 3
  bool witnesses_sound = false;

  nlohmann::json to_json() const;
};

DepthProfile dc_min(const GroupTable& g, const Subgroup& h, unsigned jobs = 1);

/// Every subgroup of a small group K (closure-based search, deduplicated).
std::vector<Subgroup> all_subgroups(const GroupTable& g, const Subgroup& k);

}  // namespace sz
