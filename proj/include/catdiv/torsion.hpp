#pragma once

// The torsion group of the localized integers modulo 1: elements a/m with
// S-smooth denominator, in canonical reduced form, with the per-prime
// component decomposition and the coset enumeration shared by slot
// evaluation and the sheaf module.

#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "catdiv/smooth.hpp"

namespace catdiv {

inline Int mod_inverse(const Int& a, const Int& n) {
  Int r0 = n, r1 = a % n, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += n;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: not invertible");
  Int r = s0 % n;
  if (r < 0) r += n;
  return r;
}

// a/den mod 1, reduced, 0 <= a < den; zero is 0/1.
struct TorsionElement {
  Int num = 0;
  Int den = 1;

  static TorsionElement reduce(Int num, Int den) {
    if (den <= 0) throw std::invalid_argument("TorsionElement: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    Int g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
    return TorsionElement{num, den};
  }

  static TorsionElement make(const PrimeSet& S, const Int& num, const Int& den) {
    auto t = reduce(num, den);
    if (!S.is_smooth(t.den))
      throw std::invalid_argument("TorsionElement: denominator not S-smooth");
    return t;
  }

  bool is_zero() const { return num == 0; }

  friend TorsionElement operator+(const TorsionElement& a, const TorsionElement& b) {
    return reduce(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend TorsionElement operator-(const TorsionElement& a) {
    return reduce(-a.num, a.den);
  }
  friend TorsionElement operator-(const TorsionElement& a, const TorsionElement& b) {
    return a + (-b);
  }

  friend bool operator==(const TorsionElement&, const TorsionElement&) = default;

  // (denominator, numerator) order; the enumeration order of truncations.
  friend bool operator<(const TorsionElement& a, const TorsionElement& b) {
    return std::tie(a.den, a.num) < std::tie(b.den, b.num);
  }
};

struct TorsionComponent {
  std::size_t prime_index;  // into the session PrimeSet
  Int numerator;            // a with component a / p^depth
  int depth;                // the p-exponent of the denominator
};

// Per-prime components: t = sum of a_p / p^{n_p} mod 1.
inline std::vector<TorsionComponent> decompose(const PrimeSet& S,
                                               const TorsionElement& t) {
  std::vector<TorsionComponent> parts;
  if (t.is_zero()) return parts;
  auto den = SmoothNumber::make(S, t.den);
  for (const auto& [p, e] : den.factors()) {
    Int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    Int rest = t.den / pe;
    Int a = (t.num % pe) * mod_inverse(rest, pe) % pe;
    parts.push_back({S.index_of(p), a, e});
  }
  return parts;
}

// Ascending S-smooth numbers, as many as requested.
inline std::vector<Int> ascending_smooth(const PrimeSet& S, std::size_t count) {
  std::set<Int> frontier{1};
  std::vector<Int> out;
  while (out.size() < count && !frontier.empty()) {
    Int d = *frontier.begin();
    frontier.erase(frontier.begin());
    out.push_back(d);
    for (const auto& p : S.primes()) frontier.insert(d * p);
  }
  return out;
}

// The first `count` cosets of the order-m cyclic subgroup, each labelled by
// its canonical representative: minimal in (denominator, numerator) order.
inline std::vector<TorsionElement> enumerate_cosets(const PrimeSet& S,
                                                    const SmoothNumber& m,
                                                    std::size_t count) {
  std::vector<TorsionElement> out;
  if (count == 0) return out;
  const Int mi = m.value();
  std::set<Int> frontier{1};
  while (out.size() < count) {
    if (frontier.empty()) break;
    Int d = *frontier.begin();
    frontier.erase(frontier.begin());
    for (const auto& p : S.primes()) frontier.insert(d * p);
    for (Int a = (d == 1 ? 0 : 1); a < (d == 1 ? 1 : d); ++a) {
      if (d > 1 && boost::multiprecision::gcd(a, d) != 1) continue;
      TorsionElement t{a, d};
      bool minimal = true;
      for (Int j = 1; j < mi && minimal; ++j) {
        auto shifted = TorsionElement::reduce(a * mi + j * d, d * mi);
        if (shifted < t) minimal = false;
      }
      if (minimal) {
        out.push_back(t);
        if (out.size() == count) break;
      }
    }
  }
  return out;
}

}  // namespace catdiv
