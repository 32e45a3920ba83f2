#include "sz/odepth.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "sz/error.hpp"
#include "sz/parallel.hpp"

namespace sz {

bool InclusionMatrix::column_identity() const {
  for (std::size_t j = 0; j < cols(); ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rows(); ++i) s += m[i][j] * row_degrees[i];
    if (s != col_degrees[j]) return false;
  }
  return true;
}

bool InclusionMatrix::row_identity() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols(); ++j) s += m[i][j] * col_degrees[j];
    if (s != index * row_degrees[i]) return false;
  }
  return true;
}

InclusionMatrix inclusion_matrix(const CharacterTable& th, const CharacterTable& tg,
                                 const std::vector<std::uint32_t>& fusion) {
  if (fusion.size() != th.size()) throw CharacterTableError("fusion map has the wrong length");
  if (tg.exponent % th.exponent != 0) throw CharacterTableError("subgroup exponent does not divide the group exponent");
  if (tg.group_order % th.group_order != 0) throw CharacterTableError("subgroup order does not divide the group order");
  const std::uint32_t step = tg.exponent / th.exponent;

  InclusionMatrix out;
  out.row_degrees = th.degrees;
  out.col_degrees = tg.degrees;
  out.index = static_cast<std::int64_t>(tg.group_order / th.group_order);
  out.m.assign(th.size(), std::vector<std::int64_t>(tg.size(), 0));
  const auto order = static_cast<std::int64_t>(th.group_order);
  for (std::size_t i = 0; i < th.size(); ++i) {
    std::vector<Cyc> psi;
    psi.reserve(th.size());
    for (const auto& v : th.irr[i]) psi.push_back(scale_exponents(v, step));
    for (std::size_t j = 0; j < tg.size(); ++j) {
      std::vector<std::int64_t> acc(tg.field->conductor(), 0);
      for (std::size_t c = 0; c < th.size(); ++c) {
        tg.field->add_product_conj(acc, psi[c], tg.irr[j][fusion[c]], static_cast<std::int64_t>(th.classes[c].size));
      }
      const Cyc sum = tg.field->reduce(acc);
      if (!sum.is_rational()) throw CharacterTableError("inclusion multiplicity is not rational");
      const std::int64_t v = sum.rational_value();
      if (v % order != 0 || v < 0) throw CharacterTableError("inclusion multiplicity is not a nonnegative integer");
      out.m[i][j] = v / order;
    }
  }
  return out;
}

BigMatrix to_big(const InclusionMatrix& m) {
  BigMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long>(m.m[i][j]);
  }
  return out;
}

BigMatrix transpose(const BigMatrix& a) {
  if (a.empty()) return {};
  BigMatrix out(a[0].size(), std::vector<mpz_class>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b, unsigned jobs) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  if (a[0].size() != inner) throw DepthError("matrix shapes do not match");
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  BigMatrix out(a.size(), std::vector<mpz_class>(cols));
  parallel_chunks(a.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < inner; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
      }
    }
  });
  return out;
}

std::vector<BigMatrix> power_chain(const BigMatrix& m, std::size_t n_max, unsigned jobs) {
  if (n_max < 1) throw DepthError("power chain needs n >= 1");
  const BigMatrix mt = transpose(m);
  std::vector<BigMatrix> chain{m};
  while (chain.size() < n_max) {
    const bool next_even = (chain.size() + 1) % 2 == 0;
    chain.push_back(multiply(chain.back(), next_even ? mt : m, jobs));
  }
  return chain;
}

std::vector<bool> support(const BigMatrix& a) {
  std::vector<bool> out;
  for (const auto& row : a) {
    for (const auto& x : row) out.push_back(x != 0);
  }
  return out;
}

namespace {

bool support_within(const std::vector<bool>& a, const std::vector<bool>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

}  // namespace

std::uint32_t ord_depth_matrix(const InclusionMatrix& m, unsigned jobs) {
  const BigMatrix base = to_big(m);
  const BigMatrix mt = transpose(base);
  // Supports grow monotonically and are bounded, so this limit is never hit
  // by a valid inclusion matrix.
  const std::size_t limit = 2 * (m.rows() + m.cols()) + 4;
  std::vector<BigMatrix> chain{base};
  std::vector<std::vector<bool>> supports{support(base)};
  for (std::uint32_t n = 2; n <= limit; ++n) {
    while (chain.size() < n + 1) {
      const bool next_even = (chain.size() + 1) % 2 == 0;
      chain.push_back(multiply(chain.back(), next_even ? mt : base, jobs));
      supports.push_back(support(chain.back()));
    }
    if (support_within(supports[n], supports[n - 2])) return n;
  }
  throw DepthError("inclusion matrix supports did not stabilize");
}

InductionGraph::InductionGraph(const InclusionMatrix& m, unsigned jobs) {
  const std::size_t n = m.rows();
  adjacent_.assign(n, std::vector<bool>(n, false));
  constituents_.resize(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m.m[i][j] > 0) constituents_[j].push_back(i);
    }
    for (const auto a : constituents_[j]) {
      for (const auto b : constituents_[j]) adjacent_[a][b] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) adjacent_[a][a] = true;

  distances_.assign(n, std::vector<std::uint32_t>(n, kInfiniteDistance));
  parallel_chunks(n, jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t s = begin; s < end; ++s) {
      auto& d = distances_[s];
      d[s] = 0;
      std::deque<std::size_t> queue{s};
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < n; ++v) {
          if (adjacent_[u][v] && d[v] == kInfiniteDistance) {
            d[v] = d[u] + 1;
            queue.push_back(v);
          }
        }
      }
    }
  });
}

std::uint32_t InductionGraph::max_distance() const {
  std::uint32_t best = 0;
  for (const auto& row : distances_) {
    for (const auto d : row) best = std::max(best, d);
  }
  return best;
}

std::uint32_t InductionGraph::m_chi(std::size_t j) const {
  std::uint32_t worst = 0;
  for (std::size_t a = 0; a < vertices(); ++a) {
    std::uint32_t nearest = kInfiniteDistance;
    for (const auto psi : constituents_[j]) nearest = std::min(nearest, distances_[a][psi]);
    worst = std::max(worst, nearest);
  }
  return worst;
}

std::uint32_t ord_depth_graph(const InductionGraph& graph, bool normal) {
  if (normal) return 2;
  std::uint32_t best = kInfiniteDistance;
  const std::uint32_t dmax = graph.max_distance();
  if (dmax != kInfiniteDistance) best = 2 * std::max<std::uint32_t>(1, dmax) + 1;
  std::uint32_t mmax = 0;
  for (std::size_t j = 0; j < graph.characters(); ++j) mmax = std::max(mmax, graph.m_chi(j));
  if (mmax != kInfiniteDistance) best = std::min(best, 2 * std::max<std::uint32_t>(2, mmax + 1));
  return best;
}

std::uint32_t depth_bound_from_core(std::uint32_t delta_star, bool core_central) {
  return core_central ? 2 * delta_star - 1 : 2 * delta_star;
}

std::size_t trivial_character(const CharacterTable& t) {
  const Cyc one = Cyc::integer(1);
  for (std::size_t i = 0; i < t.irr.size(); ++i) {
    if (std::all_of(t.irr[i].begin(), t.irr[i].end(), [&](const Cyc& v) { return v == one; })) return i;
  }
  throw CharacterTableError("table has no trivial character");
}

OrdinaryDepthReport ordinary_depth(const GroupTable& g, const Subgroup& h, const CharacterTable& tg,
                                   std::uint32_t delta_star, bool core_central, unsigned jobs) {
  const SubgroupTable sub = standalone(g, h);
  const CharacterTable th = character_table(sub.table, {.jobs = jobs});
  const auto fusion = class_fusion(sub, th, tg);

  OrdinaryDepthReport r;
  r.order = h.order();
  r.normal = is_normal(g, h);
  r.matrix = inclusion_matrix(th, tg, fusion);
  r.degree_identities = r.matrix.column_identity() && r.matrix.row_identity();
  r.depth_matrix = ord_depth_matrix(r.matrix, jobs);
  const InductionGraph graph(r.matrix, jobs);
  r.depth_graph = ord_depth_graph(graph, r.normal);
  r.bound_core = depth_bound_from_core(delta_star, core_central);
  r.distances = graph.distances();
  for (std::size_t j = 0; j < graph.characters(); ++j) r.m_values.push_back(graph.m_chi(j));
  r.m_trivial = r.m_values[trivial_character(tg)];
  return r;
}

nlohmann::json depth_value(std::uint32_t d) {
  if (d == kInfiniteDistance) return "infinite";
  if (d <= 2) return "≤2 (normal)";
  return d;
}

nlohmann::json OrdinaryDepthReport::to_json() const {
  nlohmann::json dist = nlohmann::json::array();
  for (const auto& row : distances) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto d : row) out.push_back(d == kInfiniteDistance ? nlohmann::json("infinite") : nlohmann::json(d));
    dist.push_back(std::move(out));
  }
  nlohmann::json mv = nlohmann::json::array();
  for (const auto v : m_values) mv.push_back(v == kInfiniteDistance ? nlohmann::json("infinite") : nlohmann::json(v));
  return {
      {"order", order},
      {"normal", normal},
      {"depth", depth_value(depth_matrix)},
      {"depth_matrix", depth_value(depth_matrix)},
      {"depth_graph", depth_value(depth_graph)},
      {"bound_core", bound_core},
      {"degree_identities", degree_identities},
      {"m_trivial", m_trivial == kInfiniteDistance ? nlohmann::json("infinite") : nlohmann::json(m_trivial)},
      {"m_values", mv},
      {"inclusion_matrix", matrix.m},
      {"distances", dist},
  };
}

std::string inclusion_to_csv(const InclusionMatrix& m) {
  std::ostringstream out;
  out << "psi";
  for (std::size_t j = 0; j < m.cols(); ++j) out << ",chi" << j + 1;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "psi" << i + 1;
    for (const auto v : m.m[i]) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace sz
