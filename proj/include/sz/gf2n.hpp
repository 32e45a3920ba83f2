#pragma once

// Arithmetic in GF(2^n) for odd n, with the Suzuki field automorphism.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sz {

/// An element of GF(2^n): the residue bit-vector plus the modulus of the
/// field it belongs to.
struct FieldElement {
  std::uint32_t bits = 0;
  std::uint32_t modulus = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Polynomial product of a and b over GF(2), reduced modulo `modulus`
/// (degree n). Shift-and-add; used to bootstrap the log tables.
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int n);

/// True iff the GF(2) polynomial has no factor of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

/// Degree of a nonzero GF(2) polynomial.
int poly_degree(std::uint32_t poly);

/// Parses "3,1,0" into the bit-vector x^3 + x + 1.
std::uint32_t parse_modulus(std::string_view exponents);
std::string format_modulus(std::uint32_t poly);

/// The set {a : a^(2^d) = a}, i.e. the subfield GF(2^d).
struct Subfield {
  int degree = 0;
  std::vector<FieldElement> elements;
  std::vector<bool> member;  // indexed by bit-vector

  bool contains(FieldElement a) const { return member[a.bits]; }
  std::size_t size() const { return elements.size(); }
};

/// GF(2^n), n odd, 1 <= n <= 15. Immutable after construction.
///
/// For n = 2m+1 the automorphism pi is x -> x^(2^(m+1)); it is the unique
/// automorphism whose square is the Frobenius x -> x^2.
class Field {
 public:
  static constexpr int kMaxDegree = 15;

  Field(int degree, std::uint32_t modulus);

  /// Pinned default moduli: x^3+x+1, x^5+x^2+1, x^9+x^4+1 and the smallest
  /// irreducible for every other odd degree.
  static Field standard(int degree);
  static std::uint32_t default_modulus(int degree);

  int degree() const { return n_; }
  int m() const { return (n_ - 1) / 2; }
  std::uint32_t modulus() const { return mod_; }
  std::uint32_t order() const { return std::uint32_t{1} << n_; }

  FieldElement element(std::uint32_t bits) const;
  FieldElement zero() const { return {0, mod_}; }
  FieldElement one() const { return {1, mod_}; }
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement square(FieldElement a) const { return mul(a, a); }
  FieldElement inv(FieldElement a) const;
  /// Square-and-multiply; negative k requires a != 0.
  FieldElement pow(FieldElement a, std::int64_t k) const;
  /// a^(2^(m+1)) via m+1 squarings.
  FieldElement frobenius_pi(FieldElement a) const;
  /// a + pi(a); GF(2)-linear.
  FieldElement id_plus_pi(FieldElement a) const;

  /// Smallest bit-vector (as an integer) generating the multiplicative group.
  FieldElement primitive_element() const { return {primitive_, mod_}; }
  std::uint32_t multiplicative_order(FieldElement a) const;

  Subfield subfield(int d) const;

  /// Little-endian hex of the bit-vector, ceil(n/8) bytes.
  std::string to_hex(FieldElement a) const;
  FieldElement from_hex(std::string_view hex) const;

  // Unchecked bit-vector arithmetic for hot loops.
  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t raw_inv(std::uint32_t a) const { return exp_[(order() - 1) - log_[a]]; }
  std::uint32_t raw_pi(std::uint32_t a) const { return pi_[a]; }

  friend bool operator==(const Field& a, const Field& b) { return a.n_ == b.n_ && a.mod_ == b.mod_; }

 private:
  void check(FieldElement a) const;

  int n_;
  std::uint32_t mod_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<std::uint32_t> exp_;  // doubled for branch-free products
  std::vector<std::uint32_t> pi_;
};

/// The field embedding small -> big (small.degree() divides big.degree()),
/// sending the class of x to the least root of small's modulus in big.
/// Indexed by the bit-vector of the small element.
std::vector<FieldElement> subfield_embedding(const Field& small, const Field& big);

}  // namespace sz
