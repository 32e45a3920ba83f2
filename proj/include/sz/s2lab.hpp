#pragma once

// The Suzuki 2-group S = {u(a,b)} of order q^2 given by its multiplication
// law, with subfield subgroups S1 = {u(a,b) : a,b in GF(s)}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "sz/bitset.hpp"
#include "sz/geometry.hpp"
#include "sz/gf2n.hpp"
#include "sz/group.hpp"

namespace sz {

struct UElement {
  FieldElement a;
  FieldElement b;
  friend auto operator<=>(const UElement&, const UElement&) = default;
};

/// u(a,b) u(c,d) = u(a+c, c pi(a) + b + d).
UElement u_mul(const Field& field, const UElement& x, const UElement& y);
/// u(a,b)^-1 = u(a, b + a pi(a)).
UElement u_inv(const Field& field, const UElement& x);

/// Elements are packed as (a << n) | b.
class UGroup {
 public:
  using Key = std::uint32_t;

  explicit UGroup(Field field);

  const Field& field() const { return field_; }
  std::size_t order() const { return std::size_t{1} << (2 * field_.degree()); }

  Key pack(std::uint32_t a, std::uint32_t b) const { return (a << field_.degree()) | b; }
  Key pack(const UElement& x) const { return pack(x.a.bits, x.b.bits); }
  std::uint32_t a_of(Key x) const { return x >> field_.degree(); }
  std::uint32_t b_of(Key x) const { return x & (field_.order() - 1); }
  UElement unpack(Key x) const { return {field_.element(a_of(x)), field_.element(b_of(x))}; }

  Key mul(Key x, Key y) const {
    const std::uint32_t a = a_of(x);
    const std::uint32_t c = a_of(y);
    return pack(a ^ c, field_.raw_mul(c, field_.raw_pi(a)) ^ b_of(x) ^ b_of(y));
  }
  Key inv(Key x) const {
    const std::uint32_t a = a_of(x);
    return pack(a, b_of(x) ^ field_.raw_mul(a, field_.raw_pi(a)));
  }
  /// x^-1 g x.
  Key conj(Key g, Key x) const { return mul(mul(inv(x), g), x); }

  /// u(e,0) and u(0,e) over a GF(2)-basis e of the field.
  std::vector<Key> generators() const;

 private:
  Field field_;
};

/// Sorted element set.
using USet = std::vector<UGroup::Key>;

/// Elements commuting with every generator.
USet center(const UGroup& s, unsigned jobs = 1);
/// {u(0,b) : b in GF(q)}.
USet center_closed_form(const UGroup& s);

/// S1 for the subfield of degree d (s = 2^d); throws FieldError unless
/// d divides n with n/d odd and d >= 3 odd.
USet subfield_sylow(const UGroup& s, int d);
USet subfield_center(const UGroup& s, int d);

/// {u in S : u^-1 K u = K}, by conjugating every element of K.
USet normalizer_in_S(const UGroup& s, const USet& k, unsigned jobs = 1);
/// {u(c,d) : a pi(c) + c pi(a) in GF(s) for every a in GF(s)}.
USet normalizer_closed_form(const UGroup& s, int d);
/// Normalizer of the coset Z(S1) x as a set.
USet normalizer_of_coset(const UGroup& s, int d, UGroup::Key x, unsigned jobs = 1);
/// {u(c,d) : c in GF(s)}.
USet coset_normalizer_closed_form(const UGroup& s, int d);

struct CensusEntry {
  std::size_t order = 0;
  std::size_t count = 0;
  bool is_s1 = false;
  bool is_center = false;
};

/// S1 ∩ S1^u for every u in S, grouped by the resulting subgroup.
std::vector<CensusEntry> sylow_intersection_scan(const UGroup& s, int d, unsigned jobs = 1);

struct IsoCheck {
  bool injective = false;
  bool image_is_f = false;
  bool homomorphism = false;
  bool center_to_zf = false;
  bool involution_fixes_only_infinity = false;
  bool ok() const { return injective && image_is_f && homomorphism && center_to_zf && involution_fixes_only_infinity; }
};

/// u(a,b) -> permutation of S(a,b) as a map onto F (q = 8 on both sides).
IsoCheck iso_check_with_F(const UGroup& s, const GroupTable& g, const Ovoid& ovoid, const Subgroup& f);

struct SylowLabReport {
  std::uint32_t q = 0;
  std::uint32_t s = 0;
  std::size_t group_order = 0;
  std::size_t center_size = 0;
  bool center_matches = false;
  std::size_t s1_size = 0;
  bool s1_closed = false;
  std::size_t ns_s1_size = 0;
  bool ns_matches_closed_form = false;
  bool ns_proper = false;
  bool coset_normalizers_equal = false;  // every nontrivial coset, and the closed form
  bool predicate_equivalence = false;    // {c : c + pi(c) in GF(s)} = GF(s)
  std::vector<CensusEntry> census;
  bool census_ok = false;

  bool ok() const;
  nlohmann::json to_json() const;
};

SylowLabReport sylow_lab(const Field& field, int subfield_degree, unsigned jobs = 1);

}  // namespace sz
