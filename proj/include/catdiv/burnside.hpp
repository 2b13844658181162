#pragma once

// The effective Burnside category of finite sets at desk scale: spans
// composed by explicit fiber products, leg-swap duality, and the simplex
// diagrams attached to chains in the arrow category of divisibility.
// Spans are compared up to a bijection of apexes commuting with both legs;
// no 2-morphism data is stored.
//
// This category is the theory of commutative monoid objects: a
// product-preserving assignment out of it is determined by where the
// point goes.  That realization is not an operation here; its computable
// shadow is the additivity of classes and hom spaces over formal sums in
// sheaf.hpp.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catdiv/smooth.hpp"

namespace catdiv {

// <k> = {0, 1, ..., k-1}
struct FinSet {
  int size = 0;
  friend bool operator==(const FinSet&, const FinSet&) = default;
};

struct FinMap {
  int src = 0;
  int dst = 0;
  std::vector<int> table;  // table[i] in <dst>, length src

  void validate() const {
    if (static_cast<int>(table.size()) != src)
      throw std::invalid_argument("FinMap: table length != source size");
    for (int v : table)
      if (v < 0 || v >= dst)
        throw std::invalid_argument("FinMap: table entry out of range");
  }

  int operator()(int i) const { return table.at(static_cast<std::size_t>(i)); }

  static FinMap identity(int n) {
    FinMap m{n, n, std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) m.table[static_cast<std::size_t>(i)] = i;
    return m;
  }

  friend bool operator==(const FinMap&, const FinMap&) = default;
};

// g after f.
inline FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.dst != g.src) throw std::invalid_argument("compose: boundary mismatch");
  FinMap r{f.src, g.dst, {}};
  r.table.reserve(f.table.size());
  for (int v : f.table) r.table.push_back(g.table.at(static_cast<std::size_t>(v)));
  return r;
}

// <n> -> <m> collapsing consecutive blocks of length k = n/m.
inline FinMap pmap(const SmoothNumber& m, const SmoothNumber& n) {
  auto k = divides(m, n);
  if (!k) throw std::invalid_argument("pmap: first argument must divide second");
  int mi = m.to_int(), ni = n.to_int(), ki = k->to_int();
  FinMap r{ni, mi, {}};
  r.table.reserve(static_cast<std::size_t>(ni));
  for (int i = 0; i < ni; ++i) r.table.push_back(i / ki);
  return r;
}

// <n> -> <m> by residue.
inline FinMap jmap(const SmoothNumber& m, const SmoothNumber& n) {
  if (!divides(m, n))
    throw std::invalid_argument("jmap: first argument must divide second");
  int mi = m.to_int(), ni = n.to_int();
  FinMap r{ni, mi, {}};
  r.table.reserve(static_cast<std::size_t>(ni));
  for (int i = 0; i < ni; ++i) r.table.push_back(i % mi);
  return r;
}

// A morphism X -> Y of the effective Burnside category: a diagram
// X <- A -> Y with both legs out of the shared apex A.
struct Span {
  FinMap left;   // A -> X
  FinMap right;  // A -> Y

  void validate() const {
    left.validate();
    right.validate();
    if (left.src != right.src)
      throw std::invalid_argument("Span: legs must share the apex");
  }

  int apex() const { return left.src; }
  int from() const { return left.dst; }
  int to() const { return right.dst; }

  static Span identity(int n) { return {FinMap::identity(n), FinMap::identity(n)}; }

  friend bool operator==(const Span&, const Span&) = default;
};

// The generator span <1> <- <k> -> <1> for the morphism k of the
// divisibility category.
inline Span generator_span(const SmoothNumber& k) {
  int ki = k.to_int();
  FinMap leg{ki, 1, std::vector<int>(static_cast<std::size_t>(ki), 0)};
  return {leg, leg};
}

// Composition by the explicit fiber product, apex enumerated in
// lexicographic (left-apex index, right-apex index) order.
inline Span span_compose(const Span& g, const Span& f) {
  if (f.to() != g.from())
    throw std::invalid_argument("span_compose: boundary mismatch");
  std::vector<int> la, ra;
  for (int a = 0; a < f.apex(); ++a)
    for (int b = 0; b < g.apex(); ++b)
      if (f.right(a) == g.left(b)) {
        la.push_back(f.left(a));
        ra.push_back(g.right(b));
      }
  int n = static_cast<int>(la.size());
  return {FinMap{n, f.from(), std::move(la)}, FinMap{n, g.to(), std::move(ra)}};
}

inline Span span_dual(const Span& s) { return {s.right, s.left}; }

// True iff a bijection of apexes commutes with both legs.  An apex element
// is pinned by its pair of leg values only, so the search reduces to
// matching fiber sizes over those pairs.
inline bool span_equiv(const Span& s, const Span& t) {
  if (s.from() != t.from() || s.to() != t.to())
    throw std::invalid_argument("span_equiv: boundary mismatch");
  if (s.apex() != t.apex()) return false;
  std::map<std::pair<int, int>, int> fibers;
  for (int a = 0; a < s.apex(); ++a) fibers[{s.left(a), s.right(a)}]++;
  for (int a = 0; a < t.apex(); ++a) {
    auto it = fibers.find({t.left(a), t.right(a)});
    if (it == fibers.end() || it->second == 0) return false;
    --it->second;
  }
  return true;
}

// A commuting square
//        A --to_right--> C
//        |               |
//     to_left        right_down
//        v               v
//        B --left_down-> D
struct CommutingSquare {
  FinMap to_left;     // A -> B
  FinMap to_right;    // A -> C
  FinMap left_down;   // B -> D
  FinMap right_down;  // C -> D
};

inline bool square_commutes(const CommutingSquare& sq) {
  return compose(sq.left_down, sq.to_left) == compose(sq.right_down, sq.to_right);
}

// True iff the canonical comparison map from A to the fiber product
// B x_D C is a bijection.  A non-commuting square is an error, reported
// distinctly from a commuting square that fails to be a pullback.
inline bool is_pullback(const CommutingSquare& sq) {
  if (!square_commutes(sq))
    throw std::invalid_argument("is_pullback: square does not commute");
  // Fiber product as a flat (b, c) table.
  const int nb = sq.to_left.dst, nc = sq.to_right.dst;
  std::vector<int> hits(static_cast<std::size_t>(nb) * static_cast<std::size_t>(nc), -1);
  int count = 0;
  for (int b = 0; b < nb; ++b)
    for (int c = 0; c < nc; ++c)
      if (sq.left_down(b) == sq.right_down(c)) {
        hits[static_cast<std::size_t>(b) * static_cast<std::size_t>(nc) +
             static_cast<std::size_t>(c)] = 0;
        ++count;
      }
  if (count != sq.to_left.src) return false;
  for (int a = 0; a < sq.to_left.src; ++a) {
    auto& cell = hits[static_cast<std::size_t>(sq.to_left(a)) * static_cast<std::size_t>(nc) +
                      static_cast<std::size_t>(sq.to_right(a))];
    if (cell != 0) return false;
    cell = 1;
  }
  return true;
}

// A chain (m_0|n_0) | (m_1|n_1) | ... | (m_p|n_p) in the arrow category of
// the divisibility category: m_s | m_{s+1}, n_t | n_{t+1}, m_s | n_s.
struct ArrowChain {
  std::vector<std::pair<SmoothNumber, SmoothNumber>> entries;

  void validate() const {
    if (entries.empty()) throw std::invalid_argument("ArrowChain: empty chain");
    for (std::size_t s = 0; s < entries.size(); ++s) {
      if (!divides(entries[s].first, entries[s].second))
        throw std::invalid_argument("ArrowChain: m_s must divide n_s");
      if (s + 1 < entries.size()) {
        if (!divides(entries[s].first, entries[s + 1].first))
          throw std::invalid_argument("ArrowChain: m_s must divide m_{s+1}");
        if (!divides(entries[s].second, entries[s + 1].second))
          throw std::invalid_argument("ArrowChain: n_t must divide n_{t+1}");
      }
    }
  }

  int length() const { return static_cast<int>(entries.size()) - 1; }
};

// The triangular diagram attached to a chain: vertices <k_{s,t}> with
// k_{s,t} = n_t / m_s for s <= t, one family of edges of quotient type and
// one of residue type, and every interior diamond as an explicit square.
// Each edge is oriented from the larger set to the divisor-cardinality set;
// the pullback validation below is what makes that orientation falsifiable.
struct SimplexDiagram {
  int p = 0;
  std::vector<std::vector<SmoothNumber>> k;  // k[s][t], valid for s <= t

  const SmoothNumber& at(int s, int t) const {
    return k.at(static_cast<std::size_t>(s)).at(static_cast<std::size_t>(t));
  }

  // <k_{s,t}> -> <k_{s+1,t}>, defined for s < t.
  FinMap p_edge(int s, int t) const { return pmap(at(s + 1, t), at(s, t)); }

  // <k_{s,t}> -> <k_{s,t-1}>, defined for s < t.
  FinMap j_edge(int s, int t) const { return jmap(at(s, t - 1), at(s, t)); }

  // Interior diamonds, indexed by their top vertex (s,t) with t >= s+2.
  std::vector<CommutingSquare> diamonds() const {
    std::vector<CommutingSquare> out;
    for (int s = 0; s + 2 <= p; ++s)
      for (int t = s + 2; t <= p; ++t) {
        CommutingSquare sq;
        sq.to_left = j_edge(s, t);
        sq.to_right = p_edge(s, t);
        sq.left_down = p_edge(s, t - 1);
        sq.right_down = j_edge(s + 1, t);
        out.push_back(std::move(sq));
      }
    return out;
  }
};

inline SimplexDiagram simplex_diagram(const ArrowChain& chain) {
  chain.validate();
  SimplexDiagram d;
  d.p = chain.length();
  d.k.resize(chain.entries.size());
  for (int s = 0; s <= d.p; ++s) {
    d.k[static_cast<std::size_t>(s)].resize(chain.entries.size());
    for (int t = s; t <= d.p; ++t) {
      auto q = divides(chain.entries[static_cast<std::size_t>(s)].first,
                       chain.entries[static_cast<std::size_t>(t)].second);
      if (!q) throw std::invalid_argument("simplex_diagram: divisibility fails");
      d.k[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = *q;
    }
  }
  return d;
}

}  // namespace catdiv
