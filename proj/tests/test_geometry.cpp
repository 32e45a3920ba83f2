#include <doctest.h>

#include <deque>
#include <set>

#include "sz/error.hpp"
#include "sz/geometry.hpp"
#include "support.hpp"

using namespace sz;

namespace {

// c lies on the line through a and b iff c is proportional to la + mb for
// some (l, m) != (0, 0); checked by brute force over the field.
bool collinear_brute(const Ovoid& o, std::size_t i, std::size_t j, std::size_t k) {
  const Field& f = o.field();
  const auto& a = o.point(i).coords;
  const auto& b = o.point(j).coords;
  const auto& c = o.point(k).coords;
  const std::uint32_t mod = f.modulus();
  for (std::uint32_t l = 0; l < f.order(); ++l) {
    for (std::uint32_t m = 0; m < f.order(); ++m) {
      if (l == 0 && m == 0) continue;
      std::array<std::uint32_t, 4> v{};
      for (int t = 0; t < 4; ++t) v[t] = test::longdiv_mul(l, a[t].bits, mod) ^ test::longdiv_mul(m, b[t].bits, mod);
      // v and c proportional: all 2x2 minors vanish.
      bool prop = true;
      for (int s = 0; s < 4 && prop; ++s) {
        for (int t = s + 1; t < 4; ++t) {
          if ((test::longdiv_mul(v[s], c[t].bits, mod) ^ test::longdiv_mul(v[t], c[s].bits, mod)) != 0) {
            prop = false;
            break;
          }
        }
      }
      if (prop && std::any_of(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; })) return true;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("ovoid sizes and point formula") {
    for (int n : {3, 5}) {
      const Ovoid o(Field::standard(n));
      const std::size_t q = o.field().order();
      CHECK(o.size() == q * q + 1);
    }
    const Ovoid o(Field::standard(3));
    const Field& f = o.field();
    CHECK(o.point(Ovoid::kInfinity).coords == Vec4{f.one(), f.zero(), f.zero(), f.zero()});
    // p(x, y) = [xy + pi(x) x^2 + pi(y), y, x, 1]
    for (std::uint32_t x = 0; x < 8; ++x) {
      for (std::uint32_t y = 0; y < 8; ++y) {
        const auto fx = f.element(x);
        const auto fy = f.element(y);
        const auto first = f.add(f.add(f.mul(fx, fy), f.mul(f.frobenius_pi(fx), f.square(fx))), f.frobenius_pi(fy));
        CHECK(o.point(1 + x * 8 + y).coords == Vec4{first, fy, fx, f.one()});
        CHECK(o.index_of(o.point(1 + x * 8 + y)) == 1 + x * 8 + y);
      }
    }
  }

  TEST_CASE("no three ovoid points are collinear (all C(65,3) triples)") {
    const Ovoid o(Field::standard(3));
    std::size_t bad = 0;
    std::size_t bad_brute = 0;
    for (std::size_t i = 0; i < o.size(); ++i) {
      for (std::size_t j = i + 1; j < o.size(); ++j) {
        for (std::size_t k = j + 1; k < o.size(); ++k) {
          if (collinear(o.field(), o.point(i), o.point(j), o.point(k))) ++bad;
          if (collinear_brute(o, i, j, k)) ++bad_brute;
        }
      }
    }
    CHECK(bad == 0);
    CHECK(bad_brute == 0);
  }

  TEST_CASE("collinearity detects a genuine line") {
    const Field f = Field::standard(3);
    const ProjPoint a{{f.one(), f.zero(), f.zero(), f.zero()}};
    const ProjPoint b{{f.zero(), f.one(), f.zero(), f.zero()}};
    const ProjPoint c = normalize(f, Vec4{f.one(), f.one(), f.zero(), f.zero()});
    CHECK(collinear(f, a, b, c));
  }

  TEST_CASE("generators are invertible and permute the ovoid") {
    for (int n : {3, 5}) {
      const Ovoid o(Field::standard(n));
      const Field& f = o.field();
      CHECK(invertible(f, gen_S(f, f.one(), f.zero())));
      CHECK(invertible(f, gen_M(f, f.primitive_element())));
      CHECK(invertible(f, gen_T(f)));
      for (const auto& p : suzuki_generators(o)) {
        CHECK(p.degree() == o.size());
        CHECK(is_bijection(p.images()));
      }
    }
  }

  TEST_CASE("S(a,b) fixes only p_inf; M fixes p_inf and p(0,0); T swaps them") {
    const Ovoid o(Field::standard(3));
    const Field& f = o.field();
    const Perm s = mat_to_perm(gen_S(f, f.one(), f.zero()), o);
    CHECK(s[Ovoid::kInfinity] == Ovoid::kInfinity);
    CHECK(s.fixed_point_count() == 1);
    const Perm m = mat_to_perm(gen_M(f, f.primitive_element()), o);
    CHECK(m[Ovoid::kInfinity] == Ovoid::kInfinity);
    CHECK(m[Ovoid::kOrigin] == Ovoid::kOrigin);
    CHECK(m.fixed_point_count() == 2);
    const Perm t = mat_to_perm(gen_T(f), o);
    CHECK(t[Ovoid::kInfinity] == Ovoid::kOrigin);
    CHECK(t.then(t).is_identity());
  }

  TEST_CASE("the generated group is 2-transitive (orbit of an ordered pair)") {
    const Ovoid o(Field::standard(3));
    const auto gens = suzuki_generators(o);
    const std::size_t n = o.size();
    std::vector<bool> seen(n * n, false);
    std::deque<std::pair<std::size_t, std::size_t>> queue{{0, 1}};
    seen[1] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      const auto [a, b] = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        const std::size_t x = g[a];
        const std::size_t y = g[b];
        if (!seen[x * n + y]) {
          seen[x * n + y] = true;
          ++count;
          queue.push_back({x, y});
        }
      }
    }
    CHECK(count == n * (n - 1));
  }

  TEST_CASE("a matrix moving the ovoid is rejected") {
    const Ovoid o(Field::standard(3));
    const Field& f = o.field();
    Mat4 m = Mat4::identity(f);
    m.entries[0][1] = f.one();
    CHECK_THROWS_AS(mat_to_perm(m, o), GeometryError);
  }
}
