#pragma once

// Exactly represented coefficient fields for the base category: the
// rationals, and prime fields with a runtime modulus.  A field type
// supplies Elem plus the ring/field operations used by Matrix; it is the
// plug point for alternative additive bases.

#include <stdexcept>
#include <string>

#include "catdiv/smooth.hpp"

namespace catdiv {

struct RationalField {
  using Elem = Rat;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(const Int& n) const { return Elem(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("RationalField: division by zero");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string tag() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
 public:
  using Elem = Int;

  explicit PrimeField(Int p) : p_(std::move(p)) {
    if (!is_prime(p_)) throw std::invalid_argument("PrimeField: modulus not prime");
  }

  const Int& modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const Int& n) const {
    Int r = n % p_;
    if (r < 0) r += p_;
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const { return (a + b) % p_; }
  Elem sub(const Elem& a, const Elem& b) const { return from_int(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p_; }
  Elem neg(const Elem& a) const { return from_int(-a); }
  Elem inv(const Elem& a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: division by zero");
    // extended euclid
    Int r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int r2 = r0 - q * r1;
      Int s2 = s0 - q * s1;
      r0 = r1;
      r1 = r2;
      s0 = s1;
      s1 = s2;
    }
    return from_int(s0);
  }
  bool is_zero(const Elem& a) const { return a % p_ == 0; }
  bool eq(const Elem& a, const Elem& b) const { return from_int(a - b) == 0; }
  std::string tag() const { return "F" + p_.str(); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  Int p_;
};

}  // namespace catdiv
