#pragma once

// Exact arithmetic for S-smooth numbers and for integers with the primes
// of S inverted.  Everything here is an immutable value; operations are
// pure and safe to call concurrently.

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catdiv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// The session's effective prime set S: finite, strictly increasing, all
// entries prime.  An "infinite" S is represented by the finite subset a
// computation actually touches.
class PrimeSet {
 public:
  explicit PrimeSet(std::vector<Int> primes) : primes_(std::move(primes)) {
    if (primes_.empty())
      throw std::invalid_argument("PrimeSet: must be non-empty");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (!is_prime(primes_[i]))
        throw std::invalid_argument("PrimeSet: entry is not prime");
      if (i > 0 && primes_[i - 1] >= primes_[i])
        throw std::invalid_argument("PrimeSet: entries must be strictly increasing");
    }
  }

  static PrimeSet up_to(const Int& bound) {
    std::vector<Int> ps;
    for (Int n = 2; n <= bound; ++n)
      if (is_prime(n)) ps.push_back(n);
    return PrimeSet(std::move(ps));
  }

  const std::vector<Int>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  const Int& at(std::size_t i) const { return primes_.at(i); }

  bool contains(const Int& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }

  std::size_t index_of(const Int& p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
      throw std::invalid_argument("PrimeSet: prime not in set");
    return static_cast<std::size_t>(it - primes_.begin());
  }

  // Exponent vector of n over S (aligned with primes()), or nullopt if n
  // has a prime factor outside S.  Requires n >= 1.
  std::optional<std::vector<int>> try_factor(Int n) const {
    if (n < 1) return std::nullopt;
    std::vector<int> exps(primes_.size(), 0);
    for (std::size_t i = 0; i < primes_.size(); ++i)
      while (n % primes_[i] == 0) {
        n /= primes_[i];
        ++exps[i];
      }
    if (n != 1) return std::nullopt;
    return exps;
  }

  bool is_smooth(const Int& n) const { return try_factor(n).has_value(); }

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) {
    return a.primes_ == b.primes_;
  }

 private:
  std::vector<Int> primes_;
};

// A positive integer all of whose prime factors lie in the session's S,
// carried together with its factorization.  Construction validates
// smoothness once; derived values (quotients, lcms, products) stay smooth
// without consulting S again.
class SmoothNumber {
 public:
  SmoothNumber() : value_(1) {}

  static SmoothNumber make(const PrimeSet& S, const Int& value) {
    if (value < 1)
      throw std::invalid_argument("SmoothNumber: value must be positive");
    auto exps = S.try_factor(value);
    if (!exps)
      throw std::invalid_argument("SmoothNumber: value has a prime factor outside S");
    std::vector<std::pair<Int, int>> fac;
    for (std::size_t i = 0; i < S.size(); ++i)
      if ((*exps)[i] > 0) fac.emplace_back(S.at(i), (*exps)[i]);
    return SmoothNumber(value, std::move(fac));
  }

  static SmoothNumber one() { return SmoothNumber(); }

  const Int& value() const { return value_; }
  bool is_one() const { return value_ == 1; }

  // (prime, exponent) pairs with exponent > 0, sorted by prime.
  const std::vector<std::pair<Int, int>>& factors() const { return factors_; }

  int exponent(const Int& p) const {
    for (const auto& [q, e] : factors_)
      if (q == p) return e;
    return 0;
  }

  // Value as a machine int; sizes in this artifact stay desk-scale.
  int to_int() const {
    if (value_ > (Int(1) << 30))
      throw std::overflow_error("SmoothNumber: too large for index arithmetic");
    return static_cast<int>(value_);
  }

  // Quotient by a divisor whose prime factors all occur in this value.
  SmoothNumber quotient_by(const Int& g) const {
    Int rest = g;
    std::vector<std::pair<Int, int>> fac;
    for (const auto& [p, e] : factors_) {
      int drop = 0;
      while (rest % p == 0 && drop < e) {
        rest /= p;
        ++drop;
      }
      if (e - drop > 0) fac.emplace_back(p, e - drop);
    }
    if (rest != 1)
      throw std::invalid_argument("SmoothNumber: not a divisor");
    return SmoothNumber(value_ / g, std::move(fac));
  }

  friend bool operator==(const SmoothNumber& a, const SmoothNumber& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const SmoothNumber& a, const SmoothNumber& b) {
    return !(a == b);
  }
  friend bool operator<(const SmoothNumber& a, const SmoothNumber& b) {
    return a.value_ < b.value_;
  }

  // n = m * k resolves to k when m | n; otherwise absent.
  friend std::optional<SmoothNumber> divides(const SmoothNumber& m,
                                             const SmoothNumber& n) {
    std::vector<std::pair<Int, int>> fac;
    for (const auto& [p, e] : n.factors_) {
      int d = e - m.exponent(p);
      if (d < 0) return std::nullopt;
      if (d > 0) fac.emplace_back(p, d);
    }
    for (const auto& [p, e] : m.factors_)
      if (n.exponent(p) < e) return std::nullopt;
    return SmoothNumber(n.value_ / m.value_, std::move(fac));
  }

  friend SmoothNumber lcm(const SmoothNumber& a, const SmoothNumber& b) {
    return merge(a, b, /*take_max=*/true);
  }

  friend SmoothNumber gcd(const SmoothNumber& a, const SmoothNumber& b) {
    return merge(a, b, /*take_max=*/false);
  }

  friend SmoothNumber operator*(const SmoothNumber& a, const SmoothNumber& b) {
    std::vector<std::pair<Int, int>> fac;
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
        fac.push_back(*ia++);
      else if (ia == a.factors_.end() || ib->first < ia->first)
        fac.push_back(*ib++);
      else {
        fac.emplace_back(ia->first, ia->second + ib->second);
        ++ia, ++ib;
      }
    }
    return SmoothNumber(a.value_ * b.value_, std::move(fac));
  }

 private:
  SmoothNumber(Int value, std::vector<std::pair<Int, int>> factors)
      : value_(std::move(value)), factors_(std::move(factors)) {}

  static SmoothNumber merge(const SmoothNumber& a, const SmoothNumber& b,
                            bool take_max) {
    std::vector<std::pair<Int, int>> fac;
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
        if (take_max) fac.push_back(*ia);
        ++ia;
      } else if (ia == a.factors_.end() || ib->first < ia->first) {
        if (take_max) fac.push_back(*ib);
        ++ib;
      } else {
        int e = take_max ? std::max(ia->second, ib->second)
                         : std::min(ia->second, ib->second);
        if (e > 0) fac.emplace_back(ia->first, e);
        ++ia, ++ib;
      }
    }
    Int v = 1;
    for (const auto& [p, e] : fac)
      for (int i = 0; i < e; ++i) v *= p;
    return SmoothNumber(std::move(v), std::move(fac));
  }

  Int value_;
  std::vector<std::pair<Int, int>> factors_;
};

// An element of the integers with S inverted: numerator over an S-smooth
// denominator, always in lowest terms.
class SRational {
 public:
  SRational() : num_(0) {}
  explicit SRational(const Int& n) : num_(n) {}

  // Reduce num/den and verify the reduced denominator stays S-smooth.
  static SRational make(const PrimeSet& S, Int num, Int den) {
    if (den == 0) throw std::invalid_argument("SRational: zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return SRational(num, SmoothNumber::make(S, den));
  }

  // Internal route: the denominator is already known to be smooth; the
  // reduced denominator divides it, so smoothness is preserved.
  static SRational reduced(Int num, const SmoothNumber& den) {
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den.value());
    if (g <= 1) return SRational(std::move(num), den);
    return SRational(num / g, den.quotient_by(g));
  }

  const Int& num() const { return num_; }
  const SmoothNumber& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_.is_one(); }

  Rat to_rat() const { return Rat(num_, den_.value()); }

  friend SRational operator+(const SRational& a, const SRational& b) {
    SmoothNumber l = lcm(a.den_, b.den_);
    Int n = a.num_ * (l.value() / a.den_.value()) +
            b.num_ * (l.value() / b.den_.value());
    return reduced(std::move(n), l);
  }

  friend SRational operator-(const SRational& a) { return SRational(-a.num_, a.den_); }

  friend SRational operator-(const SRational& a, const SRational& b) {
    return a + (-b);
  }

  friend SRational operator*(const SRational& a, const SRational& b) {
    return reduced(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend bool operator==(const SRational& a, const SRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const SRational& a, const SRational& b) { return !(a == b); }

  friend std::strong_ordering operator<=>(const SRational& a, const SRational& b) {
    Int l = a.num_ * b.den_.value();
    Int r = b.num_ * a.den_.value();
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  SRational(Int num, SmoothNumber den) : num_(std::move(num)), den_(std::move(den)) {}

  Int num_;
  SmoothNumber den_;
};

}  // namespace catdiv
