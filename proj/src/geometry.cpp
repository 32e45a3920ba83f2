#include "sz/geometry.hpp"

#include <string>

#include "sz/error.hpp"

namespace sz {

namespace {

std::uint64_t pack(const Vec4& v) {
  std::uint64_t key = 0;
  for (const auto& c : v) key = (key << 16) | c.bits;
  return key;
}

// Rank of a list of vectors over the field (Gaussian elimination).
int rank(const Field& f, std::vector<Vec4> rows) {
  int r = 0;
  for (int col = 0; col < 4 && r < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col].bits != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    const FieldElement inv = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col].bits == 0) continue;
      const FieldElement factor = rows[i][col];
      for (int k = 0; k < 4; ++k) rows[i][k] = f.add(rows[i][k], f.mul(factor, rows[r][k]));
    }
    ++r;
  }
  return r;
}

}  // namespace

Mat4 Mat4::zero(const Field& field) {
  Mat4 m;
  for (auto& row : m.entries) row.fill(field.zero());
  return m;
}

Mat4 Mat4::identity(const Field& field) {
  Mat4 m = zero(field);
  for (int i = 0; i < 4; ++i) m.entries[i][i] = field.one();
  return m;
}

Mat4 multiply(const Field& f, const Mat4& a, const Mat4& b) {
  Mat4 out = Mat4::zero(f);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      FieldElement s = f.zero();
      for (int k = 0; k < 4; ++k) s = f.add(s, f.mul(a.entries[i][k], b.entries[k][j]));
      out.entries[i][j] = s;
    }
  }
  return out;
}

Vec4 apply(const Field& f, const Vec4& v, const Mat4& a) {
  Vec4 out;
  for (int j = 0; j < 4; ++j) {
    FieldElement s = f.zero();
    for (int i = 0; i < 4; ++i) s = f.add(s, f.mul(v[i], a.entries[i][j]));
    out[j] = s;
  }
  return out;
}

bool invertible(const Field& f, const Mat4& a) {
  std::vector<Vec4> rows(a.entries.begin(), a.entries.end());
  return rank(f, std::move(rows)) == 4;
}

Mat4 gen_S(const Field& f, FieldElement a, FieldElement b) {
  const FieldElement pa = f.frobenius_pi(a);
  const FieldElement pb = f.frobenius_pi(b);
  Mat4 m = Mat4::identity(f);
  m.entries[1][0] = a;
  m.entries[2][0] = b;
  m.entries[2][1] = pa;
  // a^2 pi(a) + ab + pi(b)
  m.entries[3][0] = f.add(f.add(f.mul(f.square(a), pa), f.mul(a, b)), pb);
  // a pi(a) + b
  m.entries[3][1] = f.add(f.mul(a, pa), b);
  m.entries[3][2] = a;
  return m;
}

Mat4 gen_M(const Field& f, FieldElement lambda) {
  if (lambda.bits == 0) throw GeometryError("M(lambda) requires lambda != 0");
  const std::int64_t r = std::int64_t{1} << f.m();
  Mat4 m = Mat4::zero(f);
  m.entries[0][0] = f.pow(lambda, 1 + r);
  m.entries[1][1] = f.pow(lambda, r);
  m.entries[2][2] = f.pow(lambda, -r);
  m.entries[3][3] = f.pow(lambda, -1 - r);
  return m;
}

Mat4 gen_T(const Field& f) {
  Mat4 m = Mat4::zero(f);
  for (int i = 0; i < 4; ++i) m.entries[i][3 - i] = f.one();
  return m;
}

ProjPoint normalize(const Field& f, const Vec4& v) {
  for (int i = 3; i >= 0; --i) {
    if (v[i].bits != 0) {
      const FieldElement inv = f.inv(v[i]);
      ProjPoint p;
      for (int k = 0; k < 4; ++k) p.coords[k] = f.mul(v[k], inv);
      return p;
    }
  }
  throw GeometryError("the zero vector is not a projective point");
}

ProjPoint ovoid_point(const Field& f, FieldElement x, FieldElement y) {
  const FieldElement first = f.add(f.add(f.mul(x, y), f.mul(f.frobenius_pi(x), f.square(x))), f.frobenius_pi(y));
  return normalize(f, Vec4{first, y, x, f.one()});
}

bool collinear(const Field& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return rank(f, {a.coords, b.coords, c.coords}) < 3;
}

Ovoid::Ovoid(Field field) : field_(std::move(field)) {
  const std::uint32_t q = field_.order();
  points_.reserve(static_cast<std::size_t>(q) * q + 1);
  points_.push_back(normalize(field_, Vec4{field_.one(), field_.zero(), field_.zero(), field_.zero()}));
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      points_.push_back(ovoid_point(field_, field_.element(x), field_.element(y)));
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!index_.emplace(pack(points_[i].coords), i).second) {
      throw GeometryError("duplicate ovoid point at index " + std::to_string(i));
    }
  }
}

std::optional<std::size_t> Ovoid::index_of(const ProjPoint& p) const {
  const auto it = index_.find(pack(p.coords));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Perm mat_to_perm(const Mat4& m, const Ovoid& ovoid) {
  const Field& f = ovoid.field();
  if (!invertible(f, m)) throw GeometryError("matrix is singular");
  std::vector<std::uint16_t> img(ovoid.size());
  for (std::size_t i = 0; i < ovoid.size(); ++i) {
    const ProjPoint image = normalize(f, apply(f, ovoid.point(i).coords, m));
    const auto j = ovoid.index_of(image);
    if (!j) throw GeometryError("matrix maps ovoid point " + std::to_string(i) + " off the ovoid");
    img[i] = static_cast<std::uint16_t>(*j);
  }
  return Perm(std::move(img));
}

std::vector<Perm> suzuki_generators(const Ovoid& ovoid) {
  const Field& f = ovoid.field();
  return {
      mat_to_perm(gen_S(f, f.one(), f.zero()), ovoid),
      mat_to_perm(gen_S(f, f.zero(), f.one()), ovoid),
      mat_to_perm(gen_M(f, f.primitive_element()), ovoid),
      mat_to_perm(gen_T(f), ovoid),
  };
}

nlohmann::json ovoid_to_json(const Ovoid& ovoid) {
  const Field& f = ovoid.field();
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : ovoid.points()) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : p.coords) coords.push_back(f.to_hex(c));
    pts.push_back(std::move(coords));
  }
  return {
      {"q", f.order()},
      {"modulus", format_modulus(f.modulus())},
      {"size", ovoid.size()},
      {"points", std::move(pts)},
  };
}

nlohmann::json perms_to_json(const std::vector<Perm>& perms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : perms) out.push_back(std::vector<std::uint16_t>(p.images().begin(), p.images().end()));
  return out;
}

}  // namespace sz
