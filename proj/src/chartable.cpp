#include "sz/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "sz/error.hpp"
#include "sz/parallel.hpp"

namespace sz {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

// ---------------------------------------------------------------------------
// Arithmetic modulo a prime p < 2^31.

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= p;
    while (k != 0) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw CharacterTableError("division by zero modulo p");
    return pow(a, p - 2);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 choose_prime(u64 group_order, u64 max_class, u64 exponent) {
  const u64 root = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(group_order))));
  const u64 bound = std::max(2 * root * max_class, group_order);
  for (u64 p = (bound / exponent + 1) * exponent + 1;; p += exponent) {
    if (p >= (u64{1} << 31)) throw CharacterTableError("no suitable prime below 2^31");
    if (p > bound && is_prime(p)) return p;
  }
}

u64 primitive_root(const Zp& f) {
  const auto factors = prime_factors(f.p - 1);
  for (u64 g = 2; g < f.p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](u64 q) { return f.pow(g, (f.p - 1) / q) != 1; })) return g;
  }
  throw CharacterTableError("no primitive root found");
}

// Row-reduces `rows` in place; returns the pivot column of each kept row.
std::vector<std::size_t> rref(const Zp& f, std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {v : A v = 0} for a square matrix A (row-major).
std::vector<Vec> nullspace(const Zp& f, std::vector<Vec> a) {
  const std::size_t n = a.size();
  const auto pivots = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (const auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, a[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial det(xI - A), low degree first (Faddeev-LeVerrier).
Vec charpoly(const Zp& f, const std::vector<Vec>& a) {
  const std::size_t n = a.size();
  Vec c(n + 1, 0);
  c[n] = 1;
  std::vector<Vec> m(n, Vec(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Vec> next(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        u64 s = 0;
        for (std::size_t l = 0; l < n; ++l) s = f.add(s, f.mul(a[i][l], m[l][j]));
        next[i][j] = s;
      }
      next[i][i] = f.add(next[i][i], c[n - k + 1]);
    }
    m = std::move(next);
    u64 trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace = f.add(trace, f.mul(a[i][l], m[l][i]));
    }
    c[n - k] = f.sub(0, f.mul(trace, f.inv(k)));
  }
  return c;
}

std::vector<u64> roots(const Zp& f, const Vec& poly) {
  if (f.p > (u64{1} << 26)) throw CharacterTableError("prime too large for exhaustive root search");
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, x), poly[i]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct RawTable {
  std::vector<CharacterClass> classes;
  std::vector<std::vector<Cyc>> irr;
  std::vector<std::int64_t> degrees;
};

bool row_less(const std::vector<Cyc>& a, std::int64_t da, const std::vector<Cyc>& b, std::int64_t db) {
  if (da != db) return da < db;
  return a < b;
}

// Sorts rows; returns the permuted table as (degree, row) pairs.
std::vector<std::pair<std::int64_t, std::vector<Cyc>>> sorted_rows(const RawTable& t,
                                                                    const std::vector<std::size_t>& cols) {
  std::vector<std::pair<std::int64_t, std::vector<Cyc>>> rows;
  for (std::size_t i = 0; i < t.irr.size(); ++i) {
    std::vector<Cyc> row;
    row.reserve(cols.size());
    for (const auto c : cols) row.push_back(t.irr[i][c]);
    rows.push_back({t.degrees[i], std::move(row)});
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return row_less(a.second, a.first, b.second, b.first); });
  return rows;
}

std::vector<std::size_t> canonical_columns(const RawTable& t, std::size_t cap) {
  const std::size_t k = t.classes.size();
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  // Blocks of columns sharing (element order, class size).
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i;
    while (j < k && t.classes[j].element_order == t.classes[i].element_order && t.classes[j].size == t.classes[i].size) {
      ++j;
    }
    if (j - i > 1) blocks.push_back({i, j});
    i = j;
  }
  double total = 1;
  for (const auto& [b, e] : blocks) {
    for (std::size_t n = 2; n <= e - b; ++n) total *= static_cast<double>(n);
  }
  if (blocks.empty() || total > static_cast<double>(cap)) return cols;

  std::vector<std::size_t> best = cols;
  auto best_rows = sorted_rows(t, cols);
  std::vector<std::size_t> cur = cols;
  // Odometer over per-block permutations.
  for (;;) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto first = cur.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
      auto last = cur.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
      if (std::next_permutation(first, last)) break;
    }
    if (b == blocks.size()) break;
    auto rows = sorted_rows(t, cur);
    if (rows < best_rows) {
      best_rows = std::move(rows);
      best = cur;
    }
  }
  return best;
}

}  // namespace

CharacterTable character_table(const GroupTable& g, const CharacterTableOptions& options) {
  const auto cls = conjugacy_classes(g);
  const auto lookup = class_lookup(g, cls);
  const std::size_t k = cls.size();
  const u64 order = g.order();
  const u64 e = g.exponent();

  std::size_t max_class = 1;
  for (const auto& c : cls) max_class = std::max(max_class, c.size());
  const Zp f{choose_prime(order, max_class, e)};

  // Class constants c[r][s][t] = #{(x, y) in C_r x C_s : xy = z_t}.
  std::vector<u64> consts(k * k * k, 0);
  auto at = [&](std::size_t r, std::size_t s, std::size_t t) -> u64& { return consts[(r * k + s) * k + t]; };
  parallel_chunks(k, options.jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t t = begin; t < end; ++t) {
      const ElementId z = cls[t].representative;
      for (ElementId x = 0; x < order; ++x) ++at(lookup[x], lookup[g.mul(g.inv(x), z)], t);
    }
  });

  std::vector<std::size_t> split_order(k);
  std::iota(split_order.begin(), split_order.end(), 0);
  std::stable_sort(split_order.begin(), split_order.end(),
                   [&](std::size_t a, std::size_t b) { return cls[a].size() < cls[b].size(); });

  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> basis(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) basis[i][i] = 1;
    spaces.push_back(std::move(basis));
  }
  for (const auto r : split_order) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    std::vector<std::vector<Vec>> next;
    for (auto& space : spaces) {
      const std::size_t d = space.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::vector<std::size_t> pivots;
      for (const auto& b : space) pivots.push_back(static_cast<std::size_t>(std::find_if(b.begin(), b.end(), [](u64 x) { return x != 0; }) - b.begin()));
      std::vector<Vec> a(d, Vec(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          u64 s = 0;
          for (std::size_t t = 0; t < k; ++t) s = f.add(s, f.mul(at(r, pivots[j], t) % f.p, space[i][t]));
          a[j][i] = s;
        }
      }
      const auto eigen = roots(f, charpoly(f, a));
      if (eigen.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::size_t total = 0;
      for (const auto lambda : eigen) {
        std::vector<Vec> shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        std::vector<Vec> sub;
        for (const auto& coords : nullspace(f, shifted)) {
          Vec v(k, 0);
          for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t t = 0; t < k; ++t) v[t] = f.add(v[t], f.mul(coords[j], space[j][t]));
          }
          sub.push_back(std::move(v));
        }
        rref(f, sub);
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != d) throw CharacterTableError("class matrix is not diagonalizable modulo p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw CharacterTableError("class matrices did not split the center into k eigenlines");

  // Power maps: class of g^l for each class representative.
  std::vector<std::vector<std::uint32_t>> powers(k);
  for (std::size_t t = 0; t < k; ++t) {
    const ElementId z = cls[t].representative;
    const std::uint32_t o = cls[t].element_order;
    ElementId cur = GroupTable::identity();
    for (std::uint32_t l = 0; l < o; ++l) {
      powers[t].push_back(lookup[cur]);
      cur = g.mul(cur, z);
    }
  }

  auto field = std::make_shared<const CyclotomicField>(static_cast<std::uint32_t>(e));
  std::map<std::uint32_t, CyclotomicField> local_fields;
  auto local_field = [&](std::uint32_t o) -> const CyclotomicField& {
    auto it = local_fields.find(o);
    if (it == local_fields.end()) it = local_fields.emplace(o, CyclotomicField(o)).first;
    return it->second;
  };
  const u64 z = f.pow(primitive_root(f), (f.p - 1) / e);

  RawTable raw;
  for (std::size_t t = 0; t < k; ++t) {
    CharacterClass c;
    c.representative = cls[t].representative;
    c.size = cls[t].size();
    c.element_order = cls[t].element_order;
    c.centralizer_order = order / c.size;
    c.inverse_class = lookup[g.inv(c.representative)];
    raw.classes.push_back(c);
  }

  for (const auto& space : spaces) {
    Vec w = space[0];
    if (w[0] == 0) throw CharacterTableError("central character vanishes on the identity class");
    const u64 norm = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, norm);

    u64 s = 0;
    for (std::size_t t = 0; t < k; ++t) {
      s = f.add(s, f.mul(f.mul(w[t], w[raw.classes[t].inverse_class]), f.inv(raw.classes[t].size % f.p)));
    }
    const u64 deg2 = f.mul(order % f.p, f.inv(s));
    const auto deg = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(deg2))));
    if (deg == 0 || deg * deg != deg2) throw CharacterTableError("degree square is not a perfect square");

    Vec values(k);
    for (std::size_t t = 0; t < k; ++t) values[t] = f.mul(f.mul(w[t], deg), f.inv(raw.classes[t].size % f.p));

    std::vector<Cyc> row(k);
    for (std::size_t t = 0; t < k; ++t) {
      const u64 o = raw.classes[t].element_order;
      const u64 zeta = f.pow(z, e / o);
      const u64 inv_o = f.inv(o % f.p);
      std::vector<std::pair<u64, std::int64_t>> terms;
      u64 total = 0;
      for (u64 j = 0; j < o; ++j) {
        u64 m = 0;
        for (u64 l = 0; l < o; ++l) {
          m = f.add(m, f.mul(values[powers[t][l]], f.pow(zeta, (o - (j * l) % o) % o)));
        }
        m = f.mul(m, inv_o);
        if (m > deg) throw CharacterTableError("eigenvalue multiplicity out of range; prime too small");
        total += m;
        if (m != 0) terms.push_back({j * (e / o), static_cast<std::int64_t>(m)});
      }
      if (total != deg) throw CharacterTableError("eigenvalue multiplicities do not sum to the degree");
      // Canonical in Q(zeta_o), written with z = zeta_e.
      const CyclotomicField& local = local_field(static_cast<std::uint32_t>(o));
      for (auto& term : terms) term.first /= e / o;
      row[t] = scale_exponents(local.from_terms(terms), static_cast<std::uint32_t>(e / o));
    }
    raw.irr.push_back(std::move(row));
    raw.degrees.push_back(static_cast<std::int64_t>(deg));
  }

  const auto cols = canonical_columns(raw, options.column_permutation_cap);
  const auto rows = sorted_rows(raw, cols);

  CharacterTable out;
  out.group_order = order;
  out.exponent = static_cast<std::uint32_t>(e);
  out.prime = f.p;
  out.field = field;
  std::vector<std::uint32_t> column_of(k);
  for (std::size_t c = 0; c < k; ++c) column_of[cols[c]] = static_cast<std::uint32_t>(c);
  for (std::size_t c = 0; c < k; ++c) {
    CharacterClass cc = raw.classes[cols[c]];
    cc.inverse_class = column_of[cc.inverse_class];
    out.classes.push_back(cc);
  }
  out.class_of.resize(order);
  for (ElementId x = 0; x < order; ++x) out.class_of[x] = column_of[lookup[x]];
  for (const auto& [deg, row] : rows) {
    out.degrees.push_back(deg);
    out.irr.push_back(row);
  }

  const TableChecks checks = check_table(out);
  if (!checks.all_pass()) throw CharacterTableError("computed character table fails its orthogonality checks");
  return out;
}

std::int64_t inner_product(const CharacterTable& t, const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
  std::vector<std::int64_t> acc(t.field->conductor(), 0);
  for (std::size_t c = 0; c < t.size(); ++c) {
    t.field->add_product_conj(acc, a[c], b[c], static_cast<std::int64_t>(t.classes[c].size));
  }
  const std::int64_t sum = t.field->reduce(acc).rational_value();
  const auto n = static_cast<std::int64_t>(t.group_order);
  if (sum % n != 0) throw CharacterTableError("inner product is not an integer");
  return sum / n;
}

TableChecks check_table(const CharacterTable& t) {
  TableChecks c;
  const std::size_t k = t.size();
  c.square = t.irr.size() == k && t.degrees.size() == k;
  if (!c.square) return c;
  for (const auto d : t.degrees) c.degree_square_sum += d * d;
  c.degree_sum_matches = c.degree_square_sum == static_cast<std::int64_t>(t.group_order);
  c.degrees_divide = std::all_of(t.degrees.begin(), t.degrees.end(), [&](std::int64_t d) {
    return d > 0 && static_cast<std::int64_t>(t.group_order) % d == 0;
  });
  c.row_orthogonal = true;
  for (std::size_t i = 0; i < k && c.row_orthogonal; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      std::int64_t v;
      try {
        v = inner_product(t, t.irr[i], t.irr[j]);
      } catch (const CharacterTableError&) {
        c.row_orthogonal = false;
        break;
      }
      if (v != (i == j ? 1 : 0)) {
        c.row_orthogonal = false;
        break;
      }
    }
  }
  c.column_orthogonal = true;
  for (std::size_t s = 0; s < k && c.column_orthogonal; ++s) {
    for (std::size_t u = s; u < k; ++u) {
      std::vector<std::int64_t> acc(t.field->conductor(), 0);
      for (std::size_t i = 0; i < k; ++i) t.field->add_product_conj(acc, t.irr[i][s], t.irr[i][u], 1);
      const Cyc v = t.field->reduce(acc);
      const std::int64_t want = s == u ? static_cast<std::int64_t>(t.classes[s].centralizer_order) : 0;
      if (!(v == Cyc::integer(want))) {
        c.column_orthogonal = false;
        break;
      }
    }
  }
  return c;
}

SubgroupTable standalone(const GroupTable& g, const Subgroup& h) {
  std::vector<Perm> gens;
  for (const auto s : h.generators()) gens.push_back(g.element(s));
  SubgroupTable out{GroupTable::enumerate(gens, h.order() + 1, g.degree()), {}};
  if (out.table.order() != h.order()) throw GroupError("re-enumerated subgroup has the wrong order");
  out.to_ambient.resize(out.table.order());
  for (ElementId x = 0; x < out.table.order(); ++x) {
    const auto id = g.find(out.table.images(x));
    if (!id || !h.contains(*id)) throw GroupError("re-enumerated subgroup left the ambient subgroup");
    out.to_ambient[x] = *id;
  }
  return out;
}

std::vector<std::uint32_t> class_fusion(const SubgroupTable& h, const CharacterTable& th, const CharacterTable& tg) {
  std::vector<std::uint32_t> fusion(th.size());
  std::vector<bool> set(th.size(), false);
  for (ElementId x = 0; x < h.table.order(); ++x) {
    const std::uint32_t hc = th.class_of[x];
    const std::uint32_t gc = tg.class_of.at(h.to_ambient[x]);
    if (!set[hc]) {
      fusion[hc] = gc;
      set[hc] = true;
      if (th.classes[hc].element_order != tg.classes[gc].element_order) {
        throw CharacterTableError("class fusion changes element order");
      }
    } else if (fusion[hc] != gc) {
      throw CharacterTableError("a subgroup class meets two classes of the group");
    }
  }
  return fusion;
}

namespace {

std::vector<std::string> class_labels(const CharacterTable& t) {
  std::vector<std::string> labels;
  std::uint32_t prev = 0;
  int letter = 0;
  for (const auto& c : t.classes) {
    letter = c.element_order == prev ? letter + 1 : 0;
    prev = c.element_order;
    std::string suffix;
    for (int n = letter;; n = n / 26 - 1) {
      suffix.insert(suffix.begin(), static_cast<char>('a' + n % 26));
      if (n < 26) break;
    }
    labels.push_back(std::to_string(c.element_order) + suffix);
  }
  return labels;
}

}  // namespace

std::string table_to_csv(const CharacterTable& t) {
  std::ostringstream out;
  out << "character";
  for (const auto& l : class_labels(t)) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "chi" << (i + 1);
    for (const auto& v : t.irr[i]) out << ',' << CyclotomicField::to_string(v);
    out << '\n';
  }
  return out.str();
}

nlohmann::json table_to_json(const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  const auto labels = class_labels(t);
  for (std::size_t c = 0; c < t.size(); ++c) {
    classes.push_back({{"label", labels[c]},
                       {"representative", t.classes[c].representative},
                       {"size", t.classes[c].size},
                       {"element_order", t.classes[c].element_order},
                       {"centralizer_order", t.classes[c].centralizer_order}});
  }
  nlohmann::json irr = nlohmann::json::array();
  for (const auto& row : t.irr) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(CyclotomicField::to_string(v));
    irr.push_back(std::move(r));
  }
  return {{"group_order", t.group_order}, {"exponent", t.exponent}, {"prime", t.prime},
          {"root_of_unity", "z = exp(2*pi*i/" + std::to_string(t.exponent) + ")"},
          {"classes", std::move(classes)}, {"degrees", t.degrees}, {"irr", std::move(irr)}};
}

}  // namespace sz
