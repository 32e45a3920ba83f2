#include "sz/s2lab.hpp"

#include <algorithm>

#include "sz/error.hpp"
#include "sz/parallel.hpp"

namespace sz {

UElement u_mul(const Field& field, const UElement& x, const UElement& y) {
  return {field.add(x.a, y.a), field.add(field.add(field.mul(y.a, field.frobenius_pi(x.a)), x.b), y.b)};
}

UElement u_inv(const Field& field, const UElement& x) {
  return {x.a, field.add(x.b, field.mul(x.a, field.frobenius_pi(x.a)))};
}

UGroup::UGroup(Field field) : field_(std::move(field)) {
  if (2 * field_.degree() > 30) throw FieldError("field too large for packed u(a,b) keys");
}

std::vector<UGroup::Key> UGroup::generators() const {
  std::vector<Key> out;
  for (int k = 0; k < field_.degree(); ++k) out.push_back(pack(1U << k, 0));
  for (int k = 0; k < field_.degree(); ++k) out.push_back(pack(0, 1U << k));
  return out;
}

namespace {

Bitset member_mask(const UGroup& s, const USet& set) {
  Bitset mask(s.order());
  for (const auto x : set) mask.set(x);
  return mask;
}

USet collect(std::size_t n, unsigned jobs, const auto& keep) {
  const unsigned chunks = std::max(1U, jobs);
  std::vector<USet> parts(chunks);
  parallel_chunks(n, jobs, [&](std::size_t begin, std::size_t end, unsigned c) {
    for (std::size_t x = begin; x < end; ++x) {
      if (keep(static_cast<UGroup::Key>(x))) parts[c].push_back(static_cast<UGroup::Key>(x));
    }
  });
  USet out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Subfield checked_subfield(const UGroup& s, int d) {
  const int n = s.field().degree();
  if (d < 3 || d % 2 == 0 || n % d != 0 || n / d < 3 || (n / d) % 2 == 0) {
    throw FieldError("GF(2^" + std::to_string(d) + ") is not an admissible subfield of GF(2^" + std::to_string(n) +
                     ")");
  }
  return s.field().subfield(d);
}

}  // namespace

USet center(const UGroup& s, unsigned jobs) {
  const auto gens = s.generators();
  return collect(s.order(), jobs, [&](UGroup::Key x) {
    return std::all_of(gens.begin(), gens.end(), [&](UGroup::Key g) { return s.mul(x, g) == s.mul(g, x); });
  });
}

USet center_closed_form(const UGroup& s) {
  USet out;
  for (std::uint32_t b = 0; b < s.field().order(); ++b) out.push_back(s.pack(0, b));
  return out;
}

USet subfield_sylow(const UGroup& s, int d) {
  const Subfield sub = checked_subfield(s, d);
  USet out;
  for (const auto& a : sub.elements) {
    for (const auto& b : sub.elements) out.push_back(s.pack(a.bits, b.bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

USet subfield_center(const UGroup& s, int d) {
  const Subfield sub = checked_subfield(s, d);
  USet out;
  for (const auto& b : sub.elements) out.push_back(s.pack(0, b.bits));
  std::sort(out.begin(), out.end());
  return out;
}

USet normalizer_in_S(const UGroup& s, const USet& k, unsigned jobs) {
  const Bitset in_k = member_mask(s, k);
  return collect(s.order(), jobs, [&](UGroup::Key u) {
    return std::all_of(k.begin(), k.end(), [&](UGroup::Key x) { return in_k.test(s.conj(x, u)); });
  });
}

USet normalizer_closed_form(const UGroup& s, int d) {
  const Subfield sub = checked_subfield(s, d);
  const Field& f = s.field();
  USet out;
  for (std::uint32_t c = 0; c < f.order(); ++c) {
    const bool ok = std::all_of(sub.elements.begin(), sub.elements.end(), [&](FieldElement a) {
      return sub.member[f.raw_mul(a.bits, f.raw_pi(c)) ^ f.raw_mul(c, f.raw_pi(a.bits))];
    });
    if (!ok) continue;
    for (std::uint32_t dd = 0; dd < f.order(); ++dd) out.push_back(s.pack(c, dd));
  }
  std::sort(out.begin(), out.end());
  return out;
}

USet normalizer_of_coset(const UGroup& s, int d, UGroup::Key x, unsigned jobs) {
  USet coset;
  for (const auto z : subfield_center(s, d)) coset.push_back(s.mul(z, x));
  std::sort(coset.begin(), coset.end());
  return normalizer_in_S(s, coset, jobs);
}

USet coset_normalizer_closed_form(const UGroup& s, int d) {
  const Subfield sub = checked_subfield(s, d);
  USet out;
  for (const auto& c : sub.elements) {
    for (std::uint32_t dd = 0; dd < s.field().order(); ++dd) out.push_back(s.pack(c.bits, dd));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CensusEntry> sylow_intersection_scan(const UGroup& s, int d, unsigned jobs) {
  const USet s1 = subfield_sylow(s, d);
  const USet z1 = subfield_center(s, d);
  const Bitset in_s1 = member_mask(s, s1);
  const unsigned chunks = std::max(1U, jobs);
  std::vector<std::map<Bitset, std::size_t>> parts(chunks);
  parallel_chunks(s.order(), jobs, [&](std::size_t begin, std::size_t end, unsigned c) {
    for (std::size_t u = begin; u < end; ++u) {
      // g in S1^u iff u g u^-1 in S1.
      const auto uinv = s.inv(static_cast<UGroup::Key>(u));
      Bitset mask(s1.size());
      for (std::size_t j = 0; j < s1.size(); ++j) {
        if (in_s1.test(s.conj(s1[j], uinv))) mask.set(j);
      }
      ++parts[c][mask];
    }
  });
  std::map<Bitset, std::size_t> merged;
  for (const auto& p : parts) {
    for (const auto& [mask, n] : p) merged[mask] += n;
  }
  Bitset full(s1.size());
  full.set_all();
  Bitset center_mask(s1.size());
  for (std::size_t j = 0; j < s1.size(); ++j) {
    if (std::binary_search(z1.begin(), z1.end(), s1[j])) center_mask.set(j);
  }
  std::vector<CensusEntry> out;
  for (const auto& [mask, n] : merged) out.push_back({mask.count(), n, mask == full, mask == center_mask});
  std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return std::tie(a.order, a.count) < std::tie(b.order, b.count);
  });
  return out;
}

IsoCheck iso_check_with_F(const UGroup& s, const GroupTable& g, const Ovoid& ovoid, const Subgroup& f) {
  if (!(s.field() == ovoid.field())) throw GroupError("u(a,b) group and ovoid use different fields");
  const Field& field = s.field();
  std::vector<ElementId> image(s.order());
  for (UGroup::Key x = 0; x < s.order(); ++x) {
    const UElement u = s.unpack(x);
    image[x] = g.id_of(mat_to_perm(gen_S(field, u.a, u.b), ovoid));
  }
  IsoCheck r;
  Bitset seen(g.order());
  for (const auto id : image) seen.set(id);
  r.injective = seen.count() == s.order();
  r.image_is_f = r.injective && seen == f.members();
  r.homomorphism = true;
  for (UGroup::Key x = 0; x < s.order() && r.homomorphism; ++x) {
    for (UGroup::Key y = 0; y < s.order(); ++y) {
      if (image[s.mul(x, y)] != g.mul(image[x], image[y])) {
        r.homomorphism = false;
        break;
      }
    }
  }
  Bitset center_image(g.order());
  for (const auto x : center(s)) center_image.set(image[x]);
  r.center_to_zf = center_image == sz::center(g, f).members();
  const ElementId inv = image[s.pack(0, 1)];
  const Perm p = g.element(inv);
  r.involution_fixes_only_infinity =
      g.element_order(inv) == 2 && p.fixed_point_count() == 1 && g.images(inv)[Ovoid::kInfinity] == Ovoid::kInfinity;
  return r;
}

bool SylowLabReport::ok() const {
  return center_matches && s1_closed && ns_matches_closed_form && ns_proper && coset_normalizers_equal &&
         predicate_equivalence && census_ok && ns_s1_size == static_cast<std::size_t>(q) * s;
}

SylowLabReport sylow_lab(const Field& field, int subfield_degree, unsigned jobs) {
  const UGroup s(field);
  const int d = subfield_degree;
  SylowLabReport r;
  r.q = field.order();
  r.s = 1U << d;
  r.group_order = s.order();

  const USet z = center(s, jobs);
  r.center_size = z.size();
  r.center_matches = z == center_closed_form(s);

  const USet s1 = subfield_sylow(s, d);
  r.s1_size = s1.size();
  r.s1_closed = true;
  for (const auto x : s1) {
    for (const auto y : s1) {
      if (!std::binary_search(s1.begin(), s1.end(), s.mul(x, y))) r.s1_closed = false;
    }
  }

  const USet ns = normalizer_in_S(s, s1, jobs);
  r.ns_s1_size = ns.size();
  r.ns_matches_closed_form = ns == normalizer_closed_form(s, d);
  r.ns_proper = ns.size() < s.order();

  r.coset_normalizers_equal = coset_normalizer_closed_form(s, d) == ns;
  const USet z1 = subfield_center(s, d);
  for (const auto x : s1) {
    if (std::binary_search(z1.begin(), z1.end(), x)) continue;
    if (normalizer_of_coset(s, d, x, jobs) != ns) r.coset_normalizers_equal = false;
  }

  const Subfield sub = field.subfield(d);
  r.predicate_equivalence = true;
  for (std::uint32_t c = 0; c < field.order(); ++c) {
    const bool lhs = sub.member[c ^ field.raw_pi(c)];
    if (lhs != sub.member[c]) r.predicate_equivalence = false;
  }

  r.census = sylow_intersection_scan(s, d, jobs);
  r.census_ok = r.census.size() == 2 && std::all_of(r.census.begin(), r.census.end(), [](const CensusEntry& e) {
                  return e.is_s1 || e.is_center;
                });
  return r;
}

nlohmann::json SylowLabReport::to_json() const {
  nlohmann::json census_json = nlohmann::json::array();
  for (const auto& e : census) {
    census_json.push_back({{"order", e.order},
                           {"count", e.count},
                           {"subgroup", e.is_s1 ? "S1" : e.is_center ? "Z(S1)" : "other"}});
  }
  return {
      {"q", q},
      {"s", s},
      {"group_order", group_order},
      {"center_size", center_size},
      {"center_matches_closed_form", center_matches},
      {"s1_size", s1_size},
      {"s1_closed", s1_closed},
      {"ns_s1_size", ns_s1_size},
      {"ns_s1_matches_closed_form", ns_matches_closed_form},
      {"ns_s1_proper", ns_proper},
      {"coset_normalizers_equal", coset_normalizers_equal},
      {"predicate_equivalence", predicate_equivalence},
      {"intersection_census", census_json},
      {"census_ok", census_ok},
      {"ok", ok()},
  };
}

}  // namespace sz
