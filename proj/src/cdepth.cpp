#include "sz/cdepth.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <unordered_set>

#include "sz/error.hpp"
#include "sz/parallel.hpp"

namespace sz {

// ---------------------------------------------------------------------------
// Lattice

IntersectionLattice IntersectionLattice::build(const GroupTable& g, const Subgroup& h, std::uint32_t max_level,
                                               unsigned jobs) {
  IntersectionLattice lat;
  lat.h_ = h;
  lat.orbit_ = conjugate_orbit(g, h);
  const auto elems = h.elements();

  lat.masks_.assign(lat.orbit_.size(), Bitset(elems.size()));
  parallel_chunks(lat.orbit_.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t k = begin; k < end; ++k) {
      const ElementId rinv = g.inv(lat.orbit_.representatives[k]);
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (h.contains(g.conj(elems[j], rinv))) lat.masks_[k].set(j);
      }
    }
  });

  Bitset all(elems.size());
  all.set_all();
  lat.nodes_.push_back({all, elems.size(), 0, {}});
  lat.index_.emplace(all, 0);
  lat.level_sizes_.push_back(1);

  std::vector<std::uint32_t> frontier{0};
  for (std::uint32_t level = 0;; ++level) {
    if (level >= max_level) {
      throw DepthError("intersection lattice did not stabilize within " + std::to_string(max_level) + " levels");
    }
    // Each chunk proposes candidates in scan order; the merge keeps the first.
    const unsigned chunks = std::max(1U, jobs);
    std::vector<std::vector<std::pair<Bitset, std::pair<std::uint32_t, std::uint32_t>>>> found(chunks);
    parallel_chunks(frontier.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned c) {
      std::unordered_set<Bitset, BitsetHash> local_seen;
      for (std::size_t f = begin; f < end; ++f) {
        const Bitset& base = lat.nodes_[frontier[f]].local;
        for (std::size_t k = 0; k < lat.masks_.size(); ++k) {
          Bitset meet = base & lat.masks_[k];
          if (lat.index_.count(meet) != 0 || !local_seen.insert(meet).second) continue;
          found[c].push_back({std::move(meet), {frontier[f], static_cast<std::uint32_t>(k)}});
        }
      }
    });
    std::vector<std::uint32_t> next;
    for (auto& chunk : found) {
      for (auto& [mask, origin] : chunk) {
        if (lat.index_.count(mask) != 0) continue;
        LatticeNode node;
        node.order = mask.count();
        node.level = level + 1;
        node.witness = lat.nodes_[origin.first].witness;
        node.witness.push_back(lat.orbit_.representatives[origin.second]);
        node.local = std::move(mask);
        const auto id = static_cast<std::uint32_t>(lat.nodes_.size());
        lat.index_.emplace(node.local, id);
        lat.nodes_.push_back(std::move(node));
        next.push_back(id);
      }
    }
    if (next.empty()) {
      lat.stabilized_at_ = level;
      break;
    }
    lat.level_sizes_.push_back(lat.nodes_.size());
    frontier = std::move(next);
  }
  return lat;
}

std::size_t IntersectionLattice::level_size(std::uint32_t i) const {
  return level_sizes_[std::min<std::size_t>(i, level_sizes_.size() - 1)];
}

std::vector<std::uint32_t> IntersectionLattice::level(std::uint32_t i) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 0; n < nodes_.size(); ++n) {
    if (nodes_[n].level <= i) out.push_back(n);
  }
  return out;
}

std::optional<std::uint32_t> IntersectionLattice::find(const Bitset& local) const {
  const auto it = index_.find(local);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Bitset IntersectionLattice::local_of(const Subgroup& k) const {
  const auto elems = h_.elements();
  Bitset out(elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) {
    if (k.contains(elems[j])) out.set(j);
  }
  return out;
}

Subgroup IntersectionLattice::to_subgroup(const GroupTable& g, const Bitset& local) const {
  Bitset members(g.order());
  const auto elems = h_.elements();
  local.for_each([&](std::size_t j) { members.set(elems[j]); });
  return Subgroup::from_members(g, std::move(members));
}

Subgroup intersect_conjugates(const GroupTable& g, const Subgroup& h, std::span<const ElementId> xs) {
  Bitset members = h.members();
  for (const auto x : xs) members &= conjugate(g, h, x).members();
  return Subgroup::from_members(g, std::move(members));
}

// ---------------------------------------------------------------------------
// Statistics

DeltaStatistics delta_statistics(const IntersectionLattice& lat, const Bitset& core_local) {
  DeltaStatistics s;
  const auto& nodes = lat.nodes();
  const auto core = lat.find(core_local);
  if (!core) throw DepthError("core is not a member of the stabilized lattice");
  s.delta_star = 1 + nodes[*core].level;

  // Longest chain, counting subgroups: DP over nodes by ascending order.
  std::vector<std::uint32_t> by_order(nodes.size());
  for (std::uint32_t n = 0; n < nodes.size(); ++n) by_order[n] = n;
  std::sort(by_order.begin(), by_order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::pair(nodes[a].order, a) < std::pair(nodes[b].order, b);
  });
  std::vector<std::uint32_t> chain(nodes.size(), 1);
  for (std::size_t i = 0; i < by_order.size(); ++i) {
    const auto& upper = nodes[by_order[i]];
    for (std::size_t j = 0; j < i; ++j) {
      const auto& lower = nodes[by_order[j]];
      if (lower.order < upper.order && lower.local.is_subset_of(upper.local)) {
        chain[by_order[i]] = std::max(chain[by_order[i]], chain[by_order[j]] + 1);
      }
    }
  }
  s.delta = *std::max_element(chain.begin(), chain.end());

  std::uint32_t most = 0;
  const std::size_t core_order = nodes[*core].order;
  for (const auto& node : nodes) {
    if (node.order <= core_order) continue;
    std::uint32_t containing = 0;
    for (std::size_t k = 0; k < lat.conjugate_count(); ++k) {
      if (node.local.is_subset_of(lat.conjugate_mask(k))) ++containing;
    }
    most = std::max(most, containing);
  }
  s.delta_upper_star = 1 + most;
  return s;
}

// ---------------------------------------------------------------------------
// Depth tests

bool dc_leq_even(const IntersectionLattice& lat, std::uint32_t i) {
  if (i < 1) throw DepthError("even depth test needs i >= 1");
  return lat.level_size(i - 1) == lat.level_size(i);
}

bool dc_leq_odd(const GroupTable& g, const IntersectionLattice& lat, std::uint32_t i, const OddTestOptions& options) {
  if (i < 1) throw DepthError("odd depth test needs i >= 1");
  const Subgroup& h = lat.subgroup();
  if (i == 1) {
    const Subgroup c = centralizer(g, h);
    const Subgroup meet = intersect(g, h, c);
    return h.order() * c.order() / meet.order() == g.order();
  }

  const auto& nodes = lat.nodes();
  const auto& orbit = lat.orbit();
  const std::vector<std::uint32_t> prev = lat.level(i - 1);
  const std::vector<std::uint32_t> prev2 = lat.level(i - 2);
  const bool trivial_available = std::any_of(prev.begin(), prev.end(), [&](std::uint32_t n) {
    return nodes[n].order == 1;
  });

  // Centralizers of the nontrivial lattice members, as element lists.
  std::vector<std::vector<ElementId>> cents(nodes.size());
  parallel_chunks(nodes.size(), options.jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t n = begin; n < end; ++n) {
      if (nodes[n].level > i || nodes[n].order == 1) continue;
      const Subgroup c = centralizer(g, lat.to_subgroup(g, nodes[n].local));
      cents[n].assign(c.elements().begin(), c.elements().end());
    }
  });

  std::atomic<bool> ok{true};
  std::atomic<std::uint64_t> work{0};
  std::atomic<bool> over_budget{false};
  parallel_chunks(lat.conjugate_count(), options.jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    std::vector<std::uint8_t> seen_conj(lat.conjugate_count(), 0);
    for (std::size_t k = begin; k < end && ok && !over_budget; ++k) {
      const ElementId rep = orbit.representatives[k];
      std::unordered_set<std::uint32_t> done;
      for (const auto j : prev) {
        if (!ok || over_budget) break;
        const Bitset meet = nodes[j].local & lat.conjugate_mask(k);
        const auto id = lat.find(meet);
        if (!id) throw DepthError("intersection escaped the lattice");
        if (!done.insert(*id).second) continue;
        if (nodes[*id].order == 1) {
          if (!trivial_available) ok = false;
          continue;
        }
        // Need c in C_G(I) and J2 in U_(i-2) with J2 ∩ H^(rep c) = I.
        bool found = false;
        std::fill(seen_conj.begin(), seen_conj.end(), 0);
        std::uint64_t steps = 0;
        for (const auto c : cents[*id]) {
          const std::uint32_t idx = orbit.index_of[g.mul(rep, c)];
          if (seen_conj[idx] != 0) continue;
          seen_conj[idx] = 1;
          const Bitset& target = lat.conjugate_mask(idx);
          for (const auto j2 : prev2) {
            ++steps;
            if ((nodes[j2].local & target) == meet) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (work.fetch_add(steps + 1) > options.budget) over_budget = true;
        if (!found) ok = false;
      }
    }
  });
  if (over_budget && ok) {
    throw DepthError("odd depth test exceeded its work budget of " + std::to_string(options.budget) +
                     " steps at i = " + std::to_string(i) + " (" + std::to_string(lat.conjugate_count()) +
                     " conjugates, " + std::to_string(prev.size()) + " members of U_" + std::to_string(i - 1) + ")");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Profile

nlohmann::json DepthProfile::to_json() const {
  return {
      {"order", order},
      {"normalizer_order", normalizer_order},
      {"conjugates", conjugates},
      {"core_order", core_order},
      {"normal", normal},
      {"trivial_intersection", trivial_intersection},
      {"delta_star", delta_star},
      {"delta", delta},
      {"delta_upper_star", delta_upper_star},
      {"dc", dc},
      {"levels", levels},
      {"stabilized_at", stabilized_at},
      {"checks",
       {{"dc_sandwich", sandwich_dc},
        {"delta_sandwich", sandwich_delta},
        {"central_core_rule", central_core_rule},
        {"ti_rule", ti_rule},
        {"witnesses", witnesses_sound}}},
  };
}

DepthProfile dc_min(const GroupTable& g, const Subgroup& h, unsigned jobs) {
  const IntersectionLattice lat = IntersectionLattice::build(g, h, 32, jobs);
  DepthProfile p;
  p.order = h.order();
  p.normalizer_order = lat.orbit().normalizer.order();
  p.conjugates = lat.conjugate_count();
  p.normal = p.conjugates == 1;
  p.levels = lat.level_sizes();
  p.stabilized_at = lat.stabilized_at();

  const Subgroup core_group = core(g, h);
  p.core_order = core_group.order();
  p.core_central = core_group.is_subgroup_of(center(g, whole_group(g)));
  const DeltaStatistics stats = delta_statistics(lat, lat.local_of(core_group));
  p.delta_star = stats.delta_star;
  p.delta = stats.delta;
  p.delta_upper_star = stats.delta_upper_star;

  bool ti = !h.is_trivial();
  for (const auto& node : lat.nodes()) {
    if (node.level == 1 && node.order != 1 && node.order != h.order()) ti = false;
  }
  p.trivial_intersection = ti && !h.is_trivial();

  const std::uint32_t limit = 2 * p.delta;
  OddTestOptions odd;
  odd.jobs = jobs;
  for (std::uint32_t d = 1; d <= limit; ++d) {
    const std::uint32_t i = (d + 1) / 2;
    const bool holds = d % 2 == 1 ? dc_leq_odd(g, lat, i, odd) : dc_leq_even(lat, i);
    if (holds) {
      p.dc = d;
      break;
    }
  }
  if (p.dc == 0) throw DepthError("no depth value up to 2*delta passed; lattice data is inconsistent");

  p.sandwich_dc = 2 * p.delta_star - 1 <= p.dc && p.dc <= 2 * p.delta;
  p.sandwich_delta = p.delta_star <= p.delta && p.delta <= p.delta_upper_star && p.delta_upper_star <= p.conjugates;
  if (p.delta_star == p.delta && p.core_central) p.central_core_rule = p.dc == 2 * p.delta - 1;
  if (p.trivial_intersection) p.ti_rule = p.dc <= 3;

  p.witnesses_sound = true;
  for (const auto& node : lat.nodes()) {
    const Subgroup direct = intersect_conjugates(g, h, node.witness);
    if (!(lat.local_of(direct) == node.local) || direct.order() != node.order) p.witnesses_sound = false;
  }
  return p;
}

std::vector<Subgroup> all_subgroups(const GroupTable& g, const Subgroup& k) {
  std::vector<Subgroup> found{trivial_subgroup(g)};
  std::unordered_set<Bitset, BitsetHash> seen{found.front().members()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto x : k.elements()) {
      if (found[head].contains(x)) continue;
      std::vector<ElementId> seeds(found[head].generators().begin(), found[head].generators().end());
      seeds.push_back(x);
      Subgroup s = closure(g, seeds);
      if (seen.insert(s.members()).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return found;
}

}  // namespace sz
