#include "sz/bounds.hpp"

#include <sstream>

#include "sz/error.hpp"

namespace sz {

namespace {

// Exponent k with s = 2^k, or -1.
int log2_exact(std::uint64_t s) {
  if (s == 0 || (s & (s - 1)) != 0) return -1;
  int k = 0;
  while ((std::uint64_t{1} << k) != s) ++k;
  return k;
}

mpz_class pow2(unsigned long k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, k);
  return out;
}

mpz_class divide_exact(const mpz_class& num, unsigned long den, const char* what) {
  if (mpz_divisible_ui_p(num.get_mpz_t(), den) == 0) {
    throw BoundsError(std::string("inexact division in ") + what);
  }
  return num / den;
}

mpz_class parse(const nlohmann::json& j, const char* key) {
  return mpz_class(j.at(key).get<std::string>(), 10);
}

}  // namespace

BoundReport counting_bounds(std::uint64_t s, std::uint64_t t) {
  const int ks = log2_exact(s);
  if (ks < 3 || ks % 2 == 0) throw BoundsError("s must be an odd power of 2 with s >= 8, got " + std::to_string(s));
  if (t < 3 || t % 2 == 0) throw BoundsError("t must be odd and at least 3, got " + std::to_string(t));

  BoundReport b;
  b.s = s;
  b.t = t;
  const mpz_class S(static_cast<unsigned long>(s));
  mpz_pow_ui(b.q.get_mpz_t(), S.get_mpz_t(), t);
  const unsigned long kq = static_cast<unsigned long>(ks) * t;
  b.r = pow2((kq - 1) / 2);
  b.r1 = pow2((static_cast<unsigned long>(ks) - 1) / 2);

  const mpz_class& q = b.q;
  const mpz_class s2 = S * S;
  const mpz_class s4 = s2 * s2;
  const mpz_class sq1 = (s2 + 1) * (s2 + 1);

  b.bound_Z = (S - 1) * (q * q - s2) * sq1;
  b.bound_K = divide_exact((q - S) * s4 * sq1, 2, "bound_K");
  const mpz_class lead = s4 * (S - 1) * (S - 1);
  const mpz_class a1 = S - 2 * b.r1 + 1;
  const mpz_class a2 = S + 2 * b.r1 + 1;
  b.bound_A1 = divide_exact(lead * a1 * a1 * (q - S + 2 * (b.r - b.r1)), 4, "bound_A1");
  b.bound_A2 = divide_exact(lead * a2 * a2 * (q - S - 2 * (b.r - b.r1)), 4, "bound_A2");
  b.order_G1 = s2 * (s2 + 1) * (S - 1);
  b.order_G = q * q * (q * q + 1) * (q - 1);

  b.rhs = b.bound_Z + b.bound_K + b.bound_A1 + b.bound_A2 + b.order_G1;
  b.margin = b.order_G - b.rhs;
  b.inequality_holds = b.order_G > b.rhs;
  b.dominance_holds = b.order_G > 5 * s4 * b.bound_Z;
  return b;
}

bool trivial_intersection_exists(std::uint64_t s, std::uint64_t t) { return counting_bounds(s, t).inequality_holds; }

std::vector<BoundReport> bounds_sweep(std::uint64_t s_max, std::uint64_t t_max) {
  std::vector<BoundReport> out;
  for (std::uint64_t s = 8; s <= s_max; s *= 4) {
    for (std::uint64_t t = 3; t <= t_max; t += 2) out.push_back(counting_bounds(s, t));
  }
  return out;
}

nlohmann::json BoundReport::to_json() const {
  return {
      {"s", s},
      {"t", t},
      {"q", q.get_str()},
      {"r", r.get_str()},
      {"r1", r1.get_str()},
      {"bound_Z", bound_Z.get_str()},
      {"bound_K", bound_K.get_str()},
      {"bound_A1", bound_A1.get_str()},
      {"bound_A2", bound_A2.get_str()},
      {"order_G1", order_G1.get_str()},
      {"order_G", order_G.get_str()},
      {"rhs", rhs.get_str()},
      {"margin", margin.get_str()},
      {"inequality_holds", inequality_holds},
      {"dominance_holds", dominance_holds},
  };
}

BoundReport BoundReport::from_json(const nlohmann::json& j) {
  BoundReport b;
  b.s = j.at("s").get<std::uint64_t>();
  b.t = j.at("t").get<std::uint64_t>();
  b.q = parse(j, "q");
  b.r = parse(j, "r");
  b.r1 = parse(j, "r1");
  b.bound_Z = parse(j, "bound_Z");
  b.bound_K = parse(j, "bound_K");
  b.bound_A1 = parse(j, "bound_A1");
  b.bound_A2 = parse(j, "bound_A2");
  b.order_G1 = parse(j, "order_G1");
  b.order_G = parse(j, "order_G");
  b.rhs = parse(j, "rhs");
  b.margin = parse(j, "margin");
  b.inequality_holds = j.at("inequality_holds").get<bool>();
  b.dominance_holds = j.at("dominance_holds").get<bool>();
  return b;
}

std::string sweep_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << "s,t,q,bound_Z,bound_K,bound_A1,bound_A2,order_G1,order_G,margin,inequality_holds,dominance_holds\n";
  for (const auto& b : reports) {
    out << b.s << ',' << b.t << ',' << b.q << ',' << b.bound_Z << ',' << b.bound_K << ',' << b.bound_A1 << ','
        << b.bound_A2 << ',' << b.order_G1 << ',' << b.order_G << ',' << b.margin << ','
        << (b.inequality_holds ? "true" : "false") << ',' << (b.dominance_holds ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace sz
