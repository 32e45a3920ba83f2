#pragma once

// Shared fixtures and oracles that do not go through the library code paths
// they are used to check.

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "sz/context.hpp"
#include "sz/cyclotomic.hpp"

namespace sz::test {

/// Sz(8) with the default modulus, built once per process.
inline const SuzukiContext& sz8() {
  static const SuzukiContext ctx = SuzukiContext::build({});
  return ctx;
}

/// Schoolbook product of GF(2) polynomials followed by long division.
inline std::uint32_t longdiv_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1U) prod ^= static_cast<std::uint64_t>(a) << i;
  }
  int dm = 31;
  while (((modulus >> dm) & 1U) == 0) --dm;
  for (int d = 63; d >= dm; --d) {
    if ((prod >> d) & 1U) prod ^= static_cast<std::uint64_t>(modulus) << (d - dm);
  }
  return static_cast<std::uint32_t>(prod);
}

/// x^(2^k) by k squarings with the long-division product.
inline std::uint32_t longdiv_pow2k(std::uint32_t x, int k, std::uint32_t modulus) {
  for (int i = 0; i < k; ++i) x = longdiv_mul(x, x, modulus);
  return x;
}

/// Complex value of sum c_k zeta_e^k.
inline std::complex<double> numeric(const Cyc& v, std::uint32_t e) {
  std::complex<double> out = 0;
  for (const auto& [k, c] : v.terms) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(e);
    out += static_cast<double>(c) * std::polar(1.0, angle);
  }
  return out;
}

}  // namespace sz::test
