#pragma once

// Exact elements of Q(zeta_e) with integer coefficients.
//
// Numbers are kept in the power basis 1, z, ..., z^(phi(e)-1) modulo the
// cyclotomic polynomial, which makes the representation unique. Products
// are formed in Z[x]/(x^e - 1) and reduced afterwards.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace sz {

/// Sparse canonical element: sorted (exponent, nonzero coefficient) pairs.
struct Cyc {
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;

  static Cyc integer(std::int64_t v);
  bool is_zero() const { return terms.empty(); }
  bool is_rational() const { return terms.empty() || (terms.size() == 1 && terms[0].first == 0); }
  std::int64_t rational_value() const;  // throws unless is_rational()

  friend auto operator<=>(const Cyc&, const Cyc&) = default;
};

/// Multiplies every exponent by `factor`: the image of Q(zeta_f) in
/// Q(zeta_(f*factor)) under zeta_f -> zeta^factor, kept unreduced.
Cyc scale_exponents(const Cyc& a, std::uint32_t factor);

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint32_t e);

  std::uint32_t conductor() const { return e_; }
  std::uint32_t degree() const { return phi_; }

  /// Reduces a dense vector over Z[x]/(x^e - 1) (length e) to canonical form.
  Cyc reduce(const std::vector<std::int64_t>& dense) const;
  /// Canonical form of sum c_k z^k for (k, c_k) with arbitrary k.
  Cyc from_terms(const std::vector<std::pair<std::uint64_t, std::int64_t>>& terms) const;

  /// acc += scale * a * conj(b), with acc a dense length-e accumulator.
  void add_product_conj(std::vector<std::int64_t>& acc, const Cyc& a, const Cyc& b, std::int64_t scale) const;
  /// acc += scale * a * b.
  void add_product(std::vector<std::int64_t>& acc, const Cyc& a, const Cyc& b, std::int64_t scale) const;

  /// Image of a number of Q(zeta_f), f | e, under zeta_f -> zeta_e^(e/f).
  Cyc embed(const Cyc& a, const CyclotomicField& from) const;

  /// Renders as "a0+a1*z^1+..." with z = zeta_e.
  static std::string to_string(const Cyc& a);

 private:
  std::uint32_t e_;
  std::uint32_t phi_;
  std::vector<std::int64_t> reduction_;  // row k (length phi): z^k in the power basis
};

}  // namespace sz
