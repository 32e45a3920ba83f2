#pragma once

// Ordinary depth of H in G from the inclusion matrix (power-chain support
// nesting) and from distances in the induction graph of Irr(H).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "sz/chartable.hpp"
#include "sz/group.hpp"

namespace sz {

/// m[i][j] = <psi_i, res_H chi_j>; rows Irr(H), columns Irr(G).
struct InclusionMatrix {
  std::vector<std::vector<std::int64_t>> m;
  std::vector<std::int64_t> row_degrees;
  std::vector<std::int64_t> col_degrees;
  std::int64_t index = 1;  // |G:H|

  std::size_t rows() const { return m.size(); }
  std::size_t cols() const { return col_degrees.size(); }
  bool column_identity() const;  // sum_i m_ij deg psi_i = deg chi_j
  bool row_identity() const;     // sum_j m_ij deg chi_j = |G:H| deg psi_i
};

/// Throws CharacterTableError on a non-integer inner product.
InclusionMatrix inclusion_matrix(const CharacterTable& th, const CharacterTable& tg,
                                 const std::vector<std::uint32_t>& fusion);

using BigMatrix = std::vector<std::vector<mpz_class>>;

BigMatrix to_big(const InclusionMatrix& m);
BigMatrix transpose(const BigMatrix& a);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b, unsigned jobs = 1);

/// [M^1, ..., M^n_max] with M^(2l) = M^(2l-1) M^T and M^(2l+1) = M^(2l) M.
std::vector<BigMatrix> power_chain(const BigMatrix& m, std::size_t n_max, unsigned jobs = 1);

/// Nonzero pattern, row-major.
std::vector<bool> support(const BigMatrix& a);

/// Smallest n >= 2 with support(M^(n+1)) inside support(M^(n-1)).
/// A result of 2 means depth at most 2, i.e. H is normal.
std::uint32_t ord_depth_matrix(const InclusionMatrix& m, unsigned jobs = 1);

inline constexpr std::uint32_t kInfiniteDistance = std::numeric_limits<std::uint32_t>::max();

class InductionGraph {
 public:
  explicit InductionGraph(const InclusionMatrix& m, unsigned jobs = 1);

  std::size_t vertices() const { return adjacent_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacent_[a][b]; }
  /// Constituents of chi_j restricted to H.
  const std::vector<std::size_t>& constituents(std::size_t j) const { return constituents_[j]; }
  std::size_t characters() const { return constituents_.size(); }

  /// Shortest chain length, or kInfiniteDistance.
  std::uint32_t distance(std::size_t a, std::size_t b) const { return distances_[a][b]; }
  const std::vector<std::vector<std::uint32_t>>& distances() const { return distances_; }
  std::uint32_t max_distance() const;

  /// max over alpha of min over constituents psi of chi_j of d(alpha, psi).
  std::uint32_t m_chi(std::size_t j) const;

 private:
  std::vector<std::vector<bool>> adjacent_;
  std::vector<std::vector<std::size_t>> constituents_;
  std::vector<std::vector<std::uint32_t>> distances_;
};

/// Least depth allowed by the distance criteria; 2 for normal H.
/// kInfiniteDistance if neither criterion can be met.
std::uint32_t ord_depth_graph(const InductionGraph& graph, bool normal);

/// 2 delta*, or 2 delta* - 1 when the core is central.
std::uint32_t depth_bound_from_core(std::uint32_t delta_star, bool core_central);

struct OrdinaryDepthReport {
  std::size_t order = 0;
  bool normal = false;
  std::uint32_t depth_matrix = 0;
  std::uint32_t depth_graph = 0;
  std::uint32_t bound_core = 0;
  InclusionMatrix matrix;
  std::vector<std::vector<std::uint32_t>> distances;
  std::vector<std::uint32_t> m_values;  // m(chi_j) per column of the matrix
  std::uint32_t m_trivial = 0;          // m(1_G)
  bool degree_identities = false;

  nlohmann::json to_json() const;
};

/// Runs both routes. `delta_star` and `core_central` come from the
/// combinatorial profile of H.
OrdinaryDepthReport ordinary_depth(const GroupTable& g, const Subgroup& h, const CharacterTable& tg,
                                   std::uint32_t delta_star, bool core_central, unsigned jobs = 1);

/// Row of the trivial character.
std::size_t trivial_character(const CharacterTable& t);

std::string inclusion_to_csv(const InclusionMatrix& m);
/// "≤2 (normal)" for 2, "infinite" for the sentinel, else the number.
nlohmann::json depth_value(std::uint32_t d);

}  // namespace sz
