#include "sz/gf2n.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <set>

#include "sz/error.hpp"

namespace sz {

int poly_degree(std::uint32_t poly) {
  if (poly == 0) throw FieldError("degree of the zero polynomial");
  return 31 - std::countl_zero(poly);
}

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int n) {
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> n) & 1U) a ^= modulus;
  }
  return r;
}

namespace {

// Remainder of a modulo b over GF(2).
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t f = 2; f < (std::uint32_t{1} << (d / 2 + 1)); ++f) {
    if (poly_degree(f) > d / 2) break;
    if (poly_mod(poly, f) == 0) return false;
  }
  return true;
}

std::uint32_t parse_modulus(std::string_view exponents) {
  std::uint32_t poly = 0;
  std::size_t pos = 0;
  while (pos <= exponents.size()) {
    const std::size_t comma = std::min(exponents.find(',', pos), exponents.size());
    std::string_view tok = exponents.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int e = -1;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || e < 0 || e > 16) {
      throw UsageError("malformed modulus exponent list: '" + std::string(exponents) + "'");
    }
    if (poly & (std::uint32_t{1} << e)) {
      throw UsageError("repeated exponent in modulus: '" + std::string(exponents) + "'");
    }
    poly |= std::uint32_t{1} << e;
    pos = comma + 1;
  }
  return poly;
}

std::string format_modulus(std::uint32_t poly) {
  std::string out;
  for (int e = 31; e >= 0; --e) {
    if ((poly >> e) & 1U) {
      if (!out.empty()) out += ',';
      out += std::to_string(e);
    }
  }
  return out;
}

std::uint32_t Field::default_modulus(int degree) {
  switch (degree) {
    case 3: return 0b1011;                               // x^3+x+1
    case 5: return 0b100101;                             // x^5+x^2+1
    case 9: return (1U << 9) | (1U << 4) | 1U;           // x^9+x^4+1
    default: break;
  }
  if (degree < 1 || degree > kMaxDegree) throw FieldError("unsupported field degree " + std::to_string(degree));
  for (std::uint32_t p = (1U << degree) | 1U; p < (2U << degree); p += 2) {
    if (is_irreducible(p)) return p;
  }
  throw FieldError("no irreducible polynomial found");
}

Field Field::standard(int degree) { return Field(degree, default_modulus(degree)); }

Field::Field(int degree, std::uint32_t modulus) : n_(degree), mod_(modulus) {
  if (degree < 1 || degree > kMaxDegree || degree % 2 == 0) {
    throw FieldError("field degree must be odd and in [1, 15], got " + std::to_string(degree));
  }
  if (modulus == 0 || poly_degree(modulus) != degree) {
    throw FieldError("modulus " + format_modulus(modulus) + " does not have degree " + std::to_string(degree));
  }
  if (!is_irreducible(modulus)) {
    throw FieldError("modulus " + format_modulus(modulus) + " is reducible");
  }

  const std::uint32_t q = order();
  const std::uint32_t group_order = q - 1;
  const auto factors = prime_factors(group_order);
  auto slow_pow = [&](std::uint32_t a, std::uint32_t k) {
    std::uint32_t r = 1;
    while (k != 0) {
      if (k & 1U) r = clmul_mod(r, a, mod_, n_);
      a = clmul_mod(a, a, mod_, n_);
      k >>= 1;
    }
    return r;
  };
  primitive_ = 0;
  for (std::uint32_t g = 1; g < q && primitive_ == 0; ++g) {
    bool generator = true;
    for (const auto p : factors) {
      if (slow_pow(g, group_order / p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) primitive_ = g;
  }
  if (primitive_ == 0) throw FieldError("no primitive element found");

  log_.assign(q, 0);
  exp_.assign(2 * static_cast<std::size_t>(group_order), 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < group_order; ++i) {
    exp_[i] = x;
    exp_[i + group_order] = x;
    log_[x] = i;
    x = clmul_mod(x, primitive_, mod_, n_);
  }

  std::vector<std::uint32_t> pi(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) pi[a] = frobenius_pi(element(a)).bits;
  pi_ = std::move(pi);
}

void Field::check(FieldElement a) const {
  if (a.modulus != mod_) {
    throw FieldError("field element belongs to a different field (modulus " + format_modulus(a.modulus) +
                     ", expected " + format_modulus(mod_) + ")");
  }
  if (a.bits >= order()) throw FieldError("field element out of range");
}

FieldElement Field::element(std::uint32_t bits) const {
  if (bits >= order()) {
    throw FieldError("bit-vector " + std::to_string(bits) + " has a set bit at position >= " + std::to_string(n_));
  }
  return {bits, mod_};
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order());
  for (std::uint32_t a = 0; a < order(); ++a) out.push_back({a, mod_});
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {a.bits ^ b.bits, mod_};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {raw_mul(a.bits, b.bits), mod_};
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.bits == 0) throw FieldError("inverse of zero");
  return {raw_inv(a.bits), mod_};
}

FieldElement Field::pow(FieldElement a, std::int64_t k) const {
  check(a);
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  FieldElement r = one();
  while (k != 0) {
    if (k & 1) r = {raw_mul(r.bits, a.bits), mod_};
    a = {raw_mul(a.bits, a.bits), mod_};
    k >>= 1;
  }
  return r;
}

FieldElement Field::frobenius_pi(FieldElement a) const {
  check(a);
  if (!pi_.empty()) return {pi_[a.bits], mod_};
  std::uint32_t x = a.bits;
  for (int i = 0; i <= m(); ++i) x = clmul_mod(x, x, mod_, n_);
  return {x, mod_};
}

FieldElement Field::id_plus_pi(FieldElement a) const { return add(a, frobenius_pi(a)); }

std::uint32_t Field::multiplicative_order(FieldElement a) const {
  check(a);
  if (a.bits == 0) throw FieldError("zero has no multiplicative order");
  const std::uint32_t g = order() - 1;
  return g / std::gcd(g, log_[a.bits]);
}

Subfield Field::subfield(int d) const {
  if (d < 1 || n_ % d != 0) {
    throw FieldError("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(n_));
  }
  Subfield sub;
  sub.degree = d;
  sub.member.assign(order(), false);
  for (std::uint32_t a = 0; a < order(); ++a) {
    std::uint32_t x = a;
    for (int i = 0; i < d; ++i) x = raw_mul(x, x);
    if (x == a) {
      sub.elements.push_back({a, mod_});
      sub.member[a] = true;
    }
  }
  if (sub.elements.size() != (std::size_t{1} << d)) throw FieldError("subfield has the wrong size");
  return sub;
}

std::string Field::to_hex(FieldElement a) const {
  check(a);
  const int bytes = (n_ + 7) / 8;
  std::string out;
  char buf[3];
  for (int i = 0; i < bytes; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned>((a.bits >> (8 * i)) & 0xffU));
    out += buf;
  }
  return out;
}

FieldElement Field::from_hex(std::string_view hex) const {
  const std::size_t bytes = static_cast<std::size_t>((n_ + 7) / 8);
  if (hex.size() != 2 * bytes) throw FieldError("hex field element has the wrong length: '" + std::string(hex) + "'");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < bytes; ++i) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(hex.data() + 2 * i, hex.data() + 2 * i + 2, v, 16);
    if (ec != std::errc{} || ptr != hex.data() + 2 * i + 2) throw FieldError("malformed hex field element");
    bits |= static_cast<std::uint32_t>(v) << (8 * i);
  }
  return element(bits);
}

std::vector<FieldElement> subfield_embedding(const Field& small, const Field& big) {
  if (big.degree() % small.degree() != 0) {
    throw FieldError("GF(2^" + std::to_string(small.degree()) + ") does not embed in GF(2^" +
                     std::to_string(big.degree()) + ")");
  }
  const int n = small.degree();
  auto eval = [&](std::uint32_t poly, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (int k = poly_degree(poly); k >= 0; --k) {
      acc = big.raw_mul(acc, x);
      if ((poly >> k) & 1U) acc ^= 1U;
    }
    return acc;
  };
  std::uint32_t root = 0;
  for (std::uint32_t x = 1; x < big.order(); ++x) {
    if (eval(small.modulus(), x) == 0) {
      root = x;
      break;
    }
  }
  if (root == 0) throw FieldError("no root of the subfield modulus found");
  std::vector<std::uint32_t> powers(static_cast<std::size_t>(n));
  powers[0] = 1;
  for (int k = 1; k < n; ++k) powers[static_cast<std::size_t>(k)] = big.raw_mul(powers[static_cast<std::size_t>(k - 1)], root);
  std::vector<FieldElement> out;
  out.reserve(small.order());
  for (std::uint32_t a = 0; a < small.order(); ++a) {
    std::uint32_t image = 0;
    for (int k = 0; k < n; ++k) {
      if ((a >> k) & 1U) image ^= powers[static_cast<std::size_t>(k)];
    }
    out.push_back(big.element(image));
  }
  return out;
}

}  // namespace sz
