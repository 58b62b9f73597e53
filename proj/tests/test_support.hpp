#pragma once

#include <cstdint>
#include <vector>

#include "sepform/sepform.hpp"

namespace sepform::testing {

inline BigInt random_bigint(Rng& rng, std::size_t bits) {
  if (bits == 0) return 0;
  BigInt v = 0;
  std::size_t left = bits;
  while (left > 0) {
    const std::size_t take = std::min<std::size_t>(left, 32);
    v <<= take;
    v += static_cast<unsigned long>(rng.uniform(0, (std::uint64_t(1) << take) - 1));
    left -= take;
  }
  return rng.uniform(0, 1) ? BigInt(-v) : v;
}

inline Poly<BigInt> random_uni(Rng& rng, std::size_t deg, std::size_t bits) {
  std::vector<BigInt> c(deg + 1);
  for (auto& v : c) v = random_bigint(rng, bits);
  while (c[deg] == 0) c[deg] = random_bigint(rng, std::max<std::size_t>(bits, 1));
  return Poly<BigInt>(std::move(c));
}

/// Random bivariate polynomial with deg_y exactly dy, total degree <= d.
/// `density` in [0, 100] is the percentage of monomials kept.
inline BivarPoly<BigInt> random_bivar(Rng& rng, std::size_t dy, std::size_t d, std::size_t bits,
                                      unsigned density = 70) {
  if (d < dy) d = dy;
  for (;;) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j <= dy; ++j) {
      for (std::size_t i = 0; i + j <= d; ++i) {
        if (rng.uniform(0, 99) >= density) continue;
        BigInt c = random_bigint(rng, bits);
        if (c != 0) terms.push_back({c, i, j});
      }
    }
    terms.push_back({BigInt(rng.uniform(0, 1) ? 1 : -1) * (1 + BigInt(static_cast<unsigned long>(rng.uniform(0, 3)))), 0, dy});
    auto P = from_terms(terms);
    if (!P.is_zero() && P.deg() == dy) return P;
  }
}

inline BivarPoly<ModInt> random_bivar_mod(Rng& rng, std::size_t dy, std::size_t d, std::uint64_t mu,
                                          unsigned density = 70) {
  for (;;) {
    auto P = reduce_mod(random_bivar(rng, dy, d, 20, density), mu);
    if (!P.is_zero() && P.deg() == dy) return P;
  }
}

inline BivarPoly<BigInt> bv(const std::string& s) { return parse_poly(s); }

}  // namespace sepform::testing
