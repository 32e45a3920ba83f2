#include "sz/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "sz/error.hpp"

namespace sz {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CharacterTableError("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CharacterTableError("cyclotomic coefficient overflow");
  return r;
}

// Exact quotient of a by a monic divisor b (both low degree first).
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> quot(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = checked_add(a[i - db + j], -checked_mul(c, b[j]));
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw CharacterTableError("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

}  // namespace

Cyc Cyc::integer(std::int64_t v) {
  Cyc c;
  if (v != 0) c.terms.push_back({0, v});
  return c;
}

std::int64_t Cyc::rational_value() const {
  if (!is_rational()) throw CharacterTableError("value is not a rational integer");
  return terms.empty() ? 0 : terms[0].second;
}

Cyc scale_exponents(const Cyc& a, std::uint32_t factor) {
  Cyc out = a;
  for (auto& term : out.terms) term.first *= factor;
  return out;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw CharacterTableError("cyclotomic polynomial of order 0");
  static std::map<std::uint32_t, std::vector<std::int64_t>> memo;
  static std::mutex lock;
  {
    std::lock_guard guard(lock);
    if (const auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard guard(lock);
  memo.emplace(n, poly);
  return poly;
}

CyclotomicField::CyclotomicField(std::uint32_t e) : e_(e) {
  if (e == 0) throw CharacterTableError("conductor must be positive");
  const auto phi_poly = cyclotomic_polynomial(e);
  phi_ = static_cast<std::uint32_t>(phi_poly.size() - 1);
  reduction_.assign(static_cast<std::size_t>(e) * phi_, 0);
  std::vector<std::int64_t> cur(phi_, 0);
  cur[0] = 1;
  if (phi_ == 0) return;
  for (std::uint32_t k = 0; k < e; ++k) {
    std::copy(cur.begin(), cur.end(), reduction_.begin() + static_cast<std::ptrdiff_t>(k) * phi_);
    // cur <- z * cur mod Phi_e
    const std::int64_t top = cur[phi_ - 1];
    for (std::uint32_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::uint32_t i = 0; i < phi_; ++i) cur[i] = checked_add(cur[i], -checked_mul(top, phi_poly[i]));
    }
  }
}

Cyc CyclotomicField::reduce(const std::vector<std::int64_t>& dense) const {
  std::vector<std::int64_t> out(phi_, 0);
  for (std::uint32_t k = 0; k < e_; ++k) {
    const std::int64_t c = dense[k];
    if (c == 0) continue;
    const std::int64_t* row = reduction_.data() + static_cast<std::size_t>(k) * phi_;
    for (std::uint32_t i = 0; i < phi_; ++i) {
      if (row[i] != 0) out[i] = checked_add(out[i], checked_mul(c, row[i]));
    }
  }
  Cyc r;
  for (std::uint32_t i = 0; i < phi_; ++i) {
    if (out[i] != 0) r.terms.push_back({i, out[i]});
  }
  return r;
}

Cyc CyclotomicField::from_terms(const std::vector<std::pair<std::uint64_t, std::int64_t>>& terms) const {
  std::vector<std::int64_t> dense(e_, 0);
  for (const auto& [k, c] : terms) dense[k % e_] = checked_add(dense[k % e_], c);
  return reduce(dense);
}

void CyclotomicField::add_product_conj(std::vector<std::int64_t>& acc, const Cyc& a, const Cyc& b,
                                       std::int64_t scale) const {
  for (const auto& [ea, ca] : a.terms) {
    const std::int64_t sa = checked_mul(scale, ca);
    for (const auto& [eb, cb] : b.terms) {
      const std::uint32_t k = (ea + e_ - eb % e_) % e_;
      acc[k] = checked_add(acc[k], checked_mul(sa, cb));
    }
  }
}

void CyclotomicField::add_product(std::vector<std::int64_t>& acc, const Cyc& a, const Cyc& b,
                                  std::int64_t scale) const {
  for (const auto& [ea, ca] : a.terms) {
    const std::int64_t sa = checked_mul(scale, ca);
    for (const auto& [eb, cb] : b.terms) {
      const std::uint32_t k = (ea + eb) % e_;
      acc[k] = checked_add(acc[k], checked_mul(sa, cb));
    }
  }
}

Cyc CyclotomicField::embed(const Cyc& a, const CyclotomicField& from) const {
  if (e_ % from.e_ != 0) throw CharacterTableError("cannot embed: conductor does not divide");
  const std::uint64_t step = e_ / from.e_;
  std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
  for (const auto& [k, c] : a.terms) terms.push_back({k * step, c});
  return from_terms(terms);
}

std::string CyclotomicField::to_string(const Cyc& a) {
  if (a.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto [k, c] = a.terms[i];
    if (i > 0 && c > 0) out += '+';
    if (k == 0) {
      out += std::to_string(c);
    } else {
      if (c == -1) out += '-';
      else if (c != 1) out += std::to_string(c) + '*';
      out += "z^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace sz
