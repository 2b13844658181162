#pragma once

// The Cantor space attached to the session primes: finite-support digit
// points, the multiplication and projection maps, and the free action of
// the torsion group by block addition on leading digits.  Digits are
// 1-based and most significant first within a block; finite support keeps
// every operation and the orbit relation decidable.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "catdiv/smooth.hpp"
#include "catdiv/torsion.hpp"

namespace catdiv {

struct CantorPoint {
  // digits[i] holds the sequence for the i-th session prime; the implicit
  // tail is zero and trailing zeros are trimmed in canonical form.
  std::vector<std::vector<std::uint8_t>> digits;

  void canonicalize() {
    for (auto& d : digits)
      while (!d.empty() && d.back() == 0) d.pop_back();
  }

  static CantorPoint zero(const PrimeSet& S) {
    return CantorPoint{std::vector<std::vector<std::uint8_t>>(S.size())};
  }

  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;
  friend bool operator<(const CantorPoint& a, const CantorPoint& b) {
    return a.digits < b.digits;
  }
};

inline CantorPoint make_point(const PrimeSet& S,
                              std::vector<std::vector<int>> raw) {
  if (raw.size() != S.size())
    throw std::invalid_argument("make_point: one digit sequence per session prime");
  CantorPoint x;
  x.digits.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (int d : raw[i]) {
      if (d < 0 || Int(d) >= S.at(i))
        throw std::invalid_argument("make_point: digit out of range");
      x.digits[i].push_back(static_cast<std::uint8_t>(d));
    }
  }
  x.canonicalize();
  return x;
}

// Digit shift: per prime, insert zeros below the existing digits.  This is
// multiplication by m on the underlying profinite integers.
inline CantorPoint mult(const PrimeSet& S, const SmoothNumber& m,
                        const CantorPoint& x) {
  CantorPoint y = x;
  for (std::size_t i = 0; i < S.size(); ++i) {
    int n = m.exponent(S.at(i));
    if (n == 0 || y.digits[i].empty()) continue;
    y.digits[i].insert(y.digits[i].begin(), static_cast<std::size_t>(n), 0);
  }
  y.canonicalize();
  return y;
}

// The projection onto the image of mult: per prime, zero the first
// exponent-many digits and keep the rest.
inline CantorPoint f_map(const PrimeSet& S, const SmoothNumber& m,
                         const CantorPoint& x) {
  CantorPoint y = x;
  for (std::size_t i = 0; i < S.size(); ++i) {
    int n = m.exponent(S.at(i));
    for (int k = 0; k < n && k < static_cast<int>(y.digits[i].size()); ++k)
      y.digits[i][static_cast<std::size_t>(k)] = 0;
  }
  y.canonicalize();
  return y;
}

// Add `a` to the leading depth-n block of a digit sequence, most
// significant digit first, carries confined to the block; digits past the
// block are untouched.
inline void block_add_msf(std::vector<std::uint8_t>& digits, const Int& p, int n,
                          const Int& a) {
  if (static_cast<int>(digits.size()) < n)
    digits.resize(static_cast<std::size_t>(n), 0);
  Int u = 0, pn = 1;
  for (int k = 0; k < n; ++k) u = u * p + digits[static_cast<std::size_t>(k)];
  for (int k = 0; k < n; ++k) pn *= p;
  u = (u + a) % pn;
  if (u < 0) u += pn;
  for (int k = n - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(u % p);
    u /= p;
  }
}

// The torsion action: each per-prime component a / p^n adds a to the
// leading depth-n block.  The block encoding is pinned down by the
// requirement that a / p^n and pa / p^{n+1} act identically; the
// least-significant variant below fails that law and exists only as the
// negative control.
inline CantorPoint act(const PrimeSet& S, const TorsionElement& t,
                       const CantorPoint& x) {
  CantorPoint y = x;
  for (const auto& c : decompose(S, t))
    block_add_msf(y.digits[c.prime_index], S.at(c.prime_index), c.depth,
                  c.numerator);
  y.canonicalize();
  return y;
}

// Single-prime action on an unreduced representation a / p^n; exercises
// the representation-independence law directly.
inline CantorPoint act_raw(const PrimeSet& S, std::size_t prime_index, const Int& a,
                           int n, const CantorPoint& x) {
  CantorPoint y = x;
  block_add_msf(y.digits[prime_index], S.at(prime_index), n, a);
  y.canonicalize();
  return y;
}

// Negative control: least-significant-first block encoding.
inline CantorPoint act_raw_lsf(const PrimeSet& S, std::size_t prime_index,
                               const Int& a, int n, const CantorPoint& x) {
  CantorPoint y = x;
  auto& digits = y.digits[prime_index];
  const Int& p = S.at(prime_index);
  if (static_cast<int>(digits.size()) < n) digits.resize(static_cast<std::size_t>(n), 0);
  Int u = 0, pn = 1;
  for (int k = n - 1; k >= 0; --k) u = u * p + digits[static_cast<std::size_t>(k)];
  for (int k = 0; k < n; ++k) pn *= p;
  u = (u + a) % pn;
  if (u < 0) u += pn;
  for (int k = 0; k < n; ++k) {
    digits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(u % p);
    u /= p;
  }
  y.canonicalize();
  return y;
}

struct OrbitWitness {
  TorsionElement t;    // act(t, x) = y
  SmoothNumber level;  // projections at this level agree
};

// Two finite-support points always meet at the level of their joint
// support; the witness is solved per prime from the block difference and
// verified before it is returned.
inline std::optional<OrbitWitness> same_orbit(const PrimeSet& S, const CantorPoint& x,
                                              const CantorPoint& y) {
  Int level = 1;
  TorsionElement t;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const Int& p = S.at(i);
    int n = static_cast<int>(std::max(x.digits[i].size(), y.digits[i].size()));
    if (n == 0) continue;
    Int pn = 1, ux = 0, uy = 0;
    for (int k = 0; k < n; ++k) {
      pn *= p;
      ux = ux * p + (k < static_cast<int>(x.digits[i].size())
                         ? x.digits[i][static_cast<std::size_t>(k)]
                         : 0);
      uy = uy * p + (k < static_cast<int>(y.digits[i].size())
                         ? y.digits[i][static_cast<std::size_t>(k)]
                         : 0);
    }
    level *= pn;
    t = t + TorsionElement::reduce(uy - ux, pn);
  }
  SmoothNumber m = SmoothNumber::make(S, level);
  if (f_map(S, m, x) != f_map(S, m, y)) return std::nullopt;
  if (act(S, t, x) != y) return std::nullopt;
  return OrbitWitness{t, m};
}

}  // namespace catdiv
