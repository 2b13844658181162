#pragma once

// The clopen algebra of the session Cantor space in canonical cylinder
// form, and the ring of integer-valued locally constant functions on top
// of it.  A clopen is a per-prime depth vector together with the set of
// allowed digit prefixes, concatenated across primes in session order;
// canonical form has minimal depth, so equality is representation
// equality.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "catdiv/cantor.hpp"
#include "catdiv/smooth.hpp"
#include "catdiv/torsion.hpp"

namespace catdiv {

using Prefix = std::vector<std::uint8_t>;

struct Clopen {
  std::vector<int> depth;        // per session prime
  std::set<Prefix> prefixes;     // tuples of total length sum(depth)

  friend bool operator==(const Clopen&, const Clopen&) = default;
};

namespace detail {

inline int segment_offset(const std::vector<int>& depth, std::size_t prime_index) {
  int off = 0;
  for (std::size_t i = 0; i < prime_index; ++i) off += depth[i];
  return off;
}

inline void enumerate_tuples(const PrimeSet& S, const std::vector<int>& depth,
                             std::vector<Prefix>& out) {
  Prefix cur;
  int total = 0;
  for (int d : depth) total += d;
  cur.reserve(static_cast<std::size_t>(total));
  std::vector<int> radix;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (int k = 0; k < depth[i]; ++k)
      radix.push_back(static_cast<int>(S.at(i)));
  std::vector<int> idx(radix.size(), 0);
  for (;;) {
    Prefix t(idx.begin(), idx.end());
    out.push_back(std::move(t));
    int pos = static_cast<int>(idx.size()) - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] < radix[static_cast<std::size_t>(pos)]) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

}  // namespace detail

inline Clopen clopen_empty(const PrimeSet& S) {
  return Clopen{std::vector<int>(S.size(), 0), {}};
}

inline Clopen clopen_full(const PrimeSet& S) {
  return Clopen{std::vector<int>(S.size(), 0), {Prefix{}}};
}

inline bool clopen_is_empty(const Clopen& u) { return u.prefixes.empty(); }

// Raise the depth vector, expanding every prefix by all digit choices in
// the new positions.
inline Clopen clopen_lift(const PrimeSet& S, const Clopen& u,
                          const std::vector<int>& depth) {
  for (std::size_t i = 0; i < S.size(); ++i)
    if (depth[i] < u.depth[i])
      throw std::invalid_argument("clopen_lift: depth may only grow");
  Clopen out{depth, {}};
  std::vector<int> extra_depth(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) extra_depth[i] = depth[i] - u.depth[i];
  std::vector<Prefix> extensions;
  detail::enumerate_tuples(S, extra_depth, extensions);
  for (const auto& base : u.prefixes)
    for (const auto& ext : extensions) {
      Prefix t;
      int bpos = 0, epos = 0;
      for (std::size_t i = 0; i < S.size(); ++i) {
        for (int k = 0; k < u.depth[i]; ++k) t.push_back(base[static_cast<std::size_t>(bpos++)]);
        for (int k = 0; k < extra_depth[i]; ++k) t.push_back(ext[static_cast<std::size_t>(epos++)]);
      }
      out.prefixes.insert(std::move(t));
    }
  return out;
}

// Minimal-depth form: repeatedly drop the deepest digit of a prime when
// every complete sibling family is present.
inline Clopen clopen_canonicalize(const PrimeSet& S, Clopen u) {
  if (u.prefixes.empty()) return clopen_empty(S);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (u.depth[i] == 0) continue;
      int pos = detail::segment_offset(u.depth, i) + u.depth[i] - 1;
      int p = static_cast<int>(S.at(i));
      // group prefixes by the tuple with position `pos` removed
      std::map<Prefix, int> families;
      for (const auto& t : u.prefixes) {
        Prefix key = t;
        key.erase(key.begin() + pos);
        families[key]++;
      }
      bool complete = true;
      for (const auto& [key, count] : families)
        if (count != p) {
          complete = false;
          break;
        }
      if (!complete) continue;
      std::set<Prefix> reduced;
      for (auto& [key, count] : families) reduced.insert(key);
      u.prefixes = std::move(reduced);
      u.depth[i] -= 1;
      changed = true;
    }
  }
  return u;
}

inline std::vector<int> depth_join(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline Clopen clopen_union(const PrimeSet& S, const Clopen& a, const Clopen& b) {
  auto d = depth_join(a.depth, b.depth);
  auto la = clopen_lift(S, a, d), lb = clopen_lift(S, b, d);
  la.prefixes.insert(lb.prefixes.begin(), lb.prefixes.end());
  return clopen_canonicalize(S, std::move(la));
}

inline Clopen clopen_intersect(const PrimeSet& S, const Clopen& a, const Clopen& b) {
  auto d = depth_join(a.depth, b.depth);
  auto la = clopen_lift(S, a, d), lb = clopen_lift(S, b, d);
  Clopen out{d, {}};
  for (const auto& t : la.prefixes)
    if (lb.prefixes.count(t)) out.prefixes.insert(t);
  return clopen_canonicalize(S, std::move(out));
}

inline Clopen clopen_complement(const PrimeSet& S, const Clopen& a) {
  Clopen out{a.depth, {}};
  std::vector<Prefix> all;
  detail::enumerate_tuples(S, a.depth, all);
  for (auto& t : all)
    if (!a.prefixes.count(t)) out.prefixes.insert(std::move(t));
  return clopen_canonicalize(S, std::move(out));
}

inline Prefix point_prefix(const PrimeSet& S, const CantorPoint& x,
                           const std::vector<int>& depth) {
  Prefix t;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (int k = 0; k < depth[i]; ++k)
      t.push_back(k < static_cast<int>(x.digits[i].size())
                      ? x.digits[i][static_cast<std::size_t>(k)]
                      : 0);
  return t;
}

inline bool clopen_member(const PrimeSet& S, const Clopen& u, const CantorPoint& x) {
  return u.prefixes.count(point_prefix(S, x, u.depth)) > 0;
}

// The image of the translation action on a clopen: lift so every affected
// block is visible, then block-add each component.
inline Clopen clopen_translate(const PrimeSet& S, const TorsionElement& t,
                               const Clopen& u) {
  auto parts = decompose(S, t);
  std::vector<int> d = u.depth;
  for (const auto& c : parts) d[c.prime_index] = std::max(d[c.prime_index], c.depth);
  auto lifted = clopen_lift(S, u, d);
  Clopen out{d, {}};
  for (const auto& pre : lifted.prefixes) {
    Prefix moved = pre;
    for (const auto& c : parts) {
      const Int& p = S.at(c.prime_index);
      int off = detail::segment_offset(d, c.prime_index);
      int blockd = d[c.prime_index];
      Int u_val = 0, pn = 1, shift = 1;
      for (int k = 0; k < blockd; ++k) {
        u_val = u_val * p + moved[static_cast<std::size_t>(off + k)];
        pn *= p;
      }
      for (int k = 0; k < blockd - c.depth; ++k) shift *= p;
      u_val = (u_val + c.numerator * shift) % pn;
      for (int k = blockd - 1; k >= 0; --k) {
        moved[static_cast<std::size_t>(off + k)] = static_cast<std::uint8_t>(u_val % p);
        u_val /= p;
      }
    }
    out.prefixes.insert(std::move(moved));
  }
  return clopen_canonicalize(S, std::move(out));
}

// {points whose leading block vanishes}: the image of multiplication.
inline Clopen clopen_mult_image(const PrimeSet& S, const SmoothNumber& m) {
  Clopen out;
  out.depth.resize(S.size());
  int total = 0;
  for (std::size_t i = 0; i < S.size(); ++i) {
    out.depth[i] = m.exponent(S.at(i));
    total += out.depth[i];
  }
  out.prefixes.insert(Prefix(static_cast<std::size_t>(total), 0));
  return out;  // already canonical: a single prefix can never merge away
}

// All cells of u at a uniform depth at least its own.
inline std::vector<Prefix> clopen_cells(const PrimeSet& S, const Clopen& u,
                                        int uniform_depth) {
  std::vector<int> d = u.depth;
  for (auto& v : d) v = std::max(v, uniform_depth);
  auto lifted = clopen_lift(S, u, d);
  return {lifted.prefixes.begin(), lifted.prefixes.end()};
}

// ---------------------------------------------------------------------------
// Integer-valued locally constant functions: a full table of values on the
// cells of a finite depth vector, canonicalized by merging complete sibling
// families with equal values.

struct LCFunction {
  std::vector<int> depth;
  std::map<Prefix, Int> values;  // total: every tuple at `depth` is present

  friend bool operator==(const LCFunction&, const LCFunction&) = default;
};

inline LCFunction lc_const(const PrimeSet& S, const Int& c) {
  LCFunction f;
  f.depth.assign(S.size(), 0);
  f.values[Prefix{}] = c;
  return f;
}

inline LCFunction lc_lift(const PrimeSet& S, const LCFunction& f,
                          const std::vector<int>& depth) {
  LCFunction out;
  out.depth = depth;
  std::vector<int> extra(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (depth[i] < f.depth[i])
      throw std::invalid_argument("lc_lift: depth may only grow");
    extra[i] = depth[i] - f.depth[i];
  }
  std::vector<Prefix> extensions;
  detail::enumerate_tuples(S, extra, extensions);
  for (const auto& [base, val] : f.values)
    for (const auto& ext : extensions) {
      Prefix t;
      int bpos = 0, epos = 0;
      for (std::size_t i = 0; i < S.size(); ++i) {
        for (int k = 0; k < f.depth[i]; ++k) t.push_back(base[static_cast<std::size_t>(bpos++)]);
        for (int k = 0; k < extra[i]; ++k) t.push_back(ext[static_cast<std::size_t>(epos++)]);
      }
      out.values[std::move(t)] = val;
    }
  return out;
}

inline LCFunction lc_canonicalize(const PrimeSet& S, LCFunction f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (f.depth[i] == 0) continue;
      int pos = detail::segment_offset(f.depth, i) + f.depth[i] - 1;
      std::map<Prefix, std::pair<Int, bool>> families;  // value, consistent
      bool mergeable = true;
      for (const auto& [t, val] : f.values) {
        Prefix key = t;
        key.erase(key.begin() + pos);
        auto it = families.find(key);
        if (it == families.end())
          families[key] = {val, true};
        else if (it->second.first != val)
          mergeable = false;
      }
      if (!mergeable) continue;
      std::map<Prefix, Int> reduced;
      for (auto& [key, v] : families) reduced[key] = v.first;
      f.values = std::move(reduced);
      f.depth[i] -= 1;
      changed = true;
    }
  }
  return f;
}

inline LCFunction lc_indicator(const PrimeSet& S, const Clopen& u) {
  LCFunction f;
  f.depth = u.depth;
  std::vector<Prefix> all;
  detail::enumerate_tuples(S, u.depth, all);
  for (auto& t : all) {
    bool in = u.prefixes.count(t) > 0;
    f.values[std::move(t)] = in ? 1 : 0;
  }
  return lc_canonicalize(S, std::move(f));
}

template <typename Op>
LCFunction lc_pointwise(const PrimeSet& S, const LCFunction& a, const LCFunction& b,
                        Op op) {
  auto d = depth_join(a.depth, b.depth);
  auto la = lc_lift(S, a, d), lb = lc_lift(S, b, d);
  LCFunction out;
  out.depth = d;
  for (const auto& [t, val] : la.values) out.values[t] = op(val, lb.values.at(t));
  return lc_canonicalize(S, std::move(out));
}

inline LCFunction lc_add(const PrimeSet& S, const LCFunction& a, const LCFunction& b) {
  return lc_pointwise(S, a, b, [](const Int& x, const Int& y) { return x + y; });
}

inline LCFunction lc_mul(const PrimeSet& S, const LCFunction& a, const LCFunction& b) {
  return lc_pointwise(S, a, b, [](const Int& x, const Int& y) { return x * y; });
}

inline Int lc_eval(const PrimeSet& S, const LCFunction& f, const CantorPoint& x) {
  return f.values.at(point_prefix(S, x, f.depth));
}

inline bool lc_eq(const LCFunction& a, const LCFunction& b) { return a == b; }

}  // namespace catdiv
