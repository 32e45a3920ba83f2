#pragma once

// Sz(q) as collineations of the Tits ovoid in P(3, q).
//
// Points are row vectors; a matrix A acts on the right, v -> vA. Under this
// convention every S(a, b) fixes p_inf = [1, 0, 0, 0].

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "sz/gf2n.hpp"
#include "sz/perm.hpp"

namespace sz {

using Vec4 = std::array<FieldElement, 4>;

struct Mat4 {
  std::array<std::array<FieldElement, 4>, 4> entries;

  static Mat4 identity(const Field& field);
  static Mat4 zero(const Field& field);
  friend bool operator==(const Mat4&, const Mat4&) = default;
};

Mat4 multiply(const Field& field, const Mat4& a, const Mat4& b);
Vec4 apply(const Field& field, const Vec4& v, const Mat4& a);
bool invertible(const Field& field, const Mat4& a);

/// S(a, b): lower unitriangular generator of the Sylow 2-subgroup.
Mat4 gen_S(const Field& field, FieldElement a, FieldElement b);
/// M(lambda) = diag(l^(1+r), l^r, l^(-r), l^(-1-r)), r = 2^m.
Mat4 gen_M(const Field& field, FieldElement lambda);
/// The antidiagonal involution T.
Mat4 gen_T(const Field& field);

/// A projective point, normalized so the last nonzero coordinate is 1.
struct ProjPoint {
  Vec4 coords;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

ProjPoint normalize(const Field& field, const Vec4& v);
/// p(x, y) = [xy + pi(x) x^2 + pi(y), y, x, 1].
ProjPoint ovoid_point(const Field& field, FieldElement x, FieldElement y);

/// True iff the three points span at most a projective line.
bool collinear(const Field& field, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// The q^2+1 ovoid points. Index 0 is p_inf; index 1 + x*q + y is p(x, y),
/// with x, y taken as integers of their bit-vectors.
class Ovoid {
 public:
  static constexpr std::size_t kInfinity = 0;
  static constexpr std::size_t kOrigin = 1;  // p(0, 0)

  explicit Ovoid(Field field);

  const Field& field() const { return field_; }
  std::size_t size() const { return points_.size(); }
  const ProjPoint& point(std::size_t i) const { return points_[i]; }
  const std::vector<ProjPoint>& points() const { return points_; }
  std::optional<std::size_t> index_of(const ProjPoint& p) const;

 private:
  Field field_;
  std::vector<ProjPoint> points_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Permutation induced on the ovoid by a matrix. Throws GeometryError if the
/// matrix is singular or moves an ovoid point off the ovoid.
Perm mat_to_perm(const Mat4& m, const Ovoid& ovoid);

/// Permutations of S(1,0), S(0,1), M(g) for the pinned primitive g, and T.
std::vector<Perm> suzuki_generators(const Ovoid& ovoid);

nlohmann::json ovoid_to_json(const Ovoid& ovoid);
nlohmann::json perms_to_json(const std::vector<Perm>& perms);

}  // namespace sz
