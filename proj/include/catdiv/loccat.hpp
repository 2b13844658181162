#pragma once

// The filtered-colimit model of the localized category over a vector-space
// base: objects are (stalk, level) pairs, morphisms are exact matrices
// written at a common refinement level, and equality is decided by
// normalization to the minimal level.  The base category is the plug
// point: any exactly represented field from fields.hpp works.
//
// Conventions.  A level-r morphism (V,m) -> (W,n) stores the matrix of the
// induced map between the level-r presentations, with stalk copies laid
// out copy-major.  Raising the level by s interleaves copies by the
// <ss'> = <s> x <s'> rule (i mod s picks the new parallel copy), so
// refinement on a morphism keeps its source and target objects and is the
// transition map of the Hom colimit; the object-level refinement
// equivalence is carried separately by refinement_iso.
//
// A caution worth recording: dividing the category by the primes does not
// make multiplication by them invertible in general.  Over a prime field
// containing p, mult_by p is the zero endomorphism before and after the
// construction; only the class group is localized.  No operation here
// claims otherwise.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catdiv/matrix.hpp"
#include "catdiv/smooth.hpp"
#include "catdiv/torsion.hpp"

namespace catdiv {

template <typename F>
struct LocObject {
  F field;
  int dim = 0;  // stalk dimension
  SmoothNumber level;

  friend bool operator==(const LocObject& a, const LocObject& b) {
    return a.field == b.field && a.dim == b.dim && a.level == b.level;
  }
};

template <typename F>
LocObject<F> object_at_level(F field, int dim, SmoothNumber level) {
  if (dim < 0) throw std::invalid_argument("LocObject: negative dimension");
  return LocObject<F>{std::move(field), dim, std::move(level)};
}

// dim(V)/m in lowest terms; the class in the Grothendieck group.
template <typename F>
SRational loc_dim(const LocObject<F>& x) {
  return SRational::reduced(Int(x.dim), x.level);
}

template <typename F>
LocObject<F> refine(const LocObject<F>& x, const SmoothNumber& s) {
  return LocObject<F>{x.field, x.dim * s.to_int(), s * x.level};
}

template <typename F>
LocObject<F> loc_dsum(const LocObject<F>& x, const LocObject<F>& y) {
  if (!(x.field == y.field)) throw std::invalid_argument("loc_dsum: field mismatch");
  SmoothNumber l = lcm(x.level, y.level);
  int copies_x = divides(x.level, l)->to_int();
  int copies_y = divides(y.level, l)->to_int();
  return LocObject<F>{x.field, copies_x * x.dim + copies_y * y.dim, l};
}

template <typename F>
struct LocMorphism {
  LocObject<F> source;
  LocObject<F> target;
  SmoothNumber level;  // common refinement; source.level | level, target.level | level
  Matrix<F> matrix;    // (level/target.level)*target.dim rows,
                       // (level/source.level)*source.dim cols

  void validate() const {
    auto cs = divides(source.level, level);
    auto ct = divides(target.level, level);
    if (!cs || !ct)
      throw std::invalid_argument("LocMorphism: object levels must divide the level");
    if (matrix.rows() != ct->to_int() * target.dim ||
        matrix.cols() != cs->to_int() * source.dim)
      throw std::invalid_argument("LocMorphism: matrix shape mismatch");
  }
};

template <typename F>
LocMorphism<F> loc_identity(const LocObject<F>& x) {
  return {x, x, x.level, Matrix<F>::identity(x.field, x.dim)};
}

// The endomorphism k . id at the object's own level.  Over a prime field
// containing a prime of k this is the zero morphism: inverting k at the
// category level never asks k to be invertible in the base.
template <typename F>
LocMorphism<F> mult_by(const LocObject<F>& x, const SmoothNumber& k) {
  auto c = x.field.from_int(k.value());
  return {x, x, x.level, Matrix<F>::scalar(x.field, x.dim, c)};
}

// Hom-colimit transition: same objects, level multiplied by s, matrix the
// s-fold interleaved block diagonal.
template <typename F>
LocMorphism<F> refine(const LocMorphism<F>& f, const SmoothNumber& s) {
  return {f.source, f.target, s * f.level,
          refine_matrix(f.matrix, s.to_int(), f.target.dim, f.source.dim)};
}

template <typename F>
LocMorphism<F> raise_to_level(const LocMorphism<F>& f, const SmoothNumber& level) {
  auto s = divides(f.level, level);
  if (!s) throw std::invalid_argument("raise_to_level: not a refinement of the level");
  if (s->is_one()) return f;
  return refine(f, *s);
}

// Canonical representative at the minimal level: greedy per-prime descent
// testing exact block equality against the interleave convention.
template <typename F>
LocMorphism<F> mor_normalize(LocMorphism<F> f) {
  bool descended = true;
  while (descended) {
    descended = false;
    for (const auto& [p, e] : f.level.factors()) {
      Int lower = f.level.value() / p;
      if (lower % f.source.level.value() != 0 || lower % f.target.level.value() != 0)
        continue;
      auto base = unrefine_matrix(f.matrix, static_cast<int>(p), f.target.dim,
                                  f.source.dim);
      if (!base) continue;
      f.level = f.level.quotient_by(p);
      f.matrix = std::move(*base);
      descended = true;
      break;
    }
  }
  return f;
}

// g after f, resolved at the least common refinement and normalized.
template <typename F>
LocMorphism<F> loc_compose(const LocMorphism<F>& g, const LocMorphism<F>& f) {
  if (!(f.target == g.source))
    throw std::invalid_argument("loc_compose: boundary mismatch");
  SmoothNumber l = lcm(f.level, g.level);
  auto fr = raise_to_level(f, l);
  auto gr = raise_to_level(g, l);
  return mor_normalize(LocMorphism<F>{f.source, g.target, l, gr.matrix * fr.matrix});
}

// Direct sum of morphisms, written at the join of their levels; the source
// and target are the corresponding direct sums carried at that join.
template <typename F>
LocMorphism<F> loc_dsum(const LocMorphism<F>& f, const LocMorphism<F>& g) {
  SmoothNumber l = lcm(f.level, g.level);
  auto fr = raise_to_level(f, l);
  auto gr = raise_to_level(g, l);
  auto src = LocObject<F>{f.source.field,
                          fr.matrix.cols() + gr.matrix.cols(), l};
  auto dst = LocObject<F>{f.target.field,
                          fr.matrix.rows() + gr.matrix.rows(), l};
  return {src, dst, l, block_diag(fr.matrix, gr.matrix)};
}

template <typename F>
bool loc_equal(const LocMorphism<F>& f, const LocMorphism<F>& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) return false;
  auto nf = mor_normalize(f), ng = mor_normalize(g);
  return nf.level == ng.level && nf.matrix == ng.matrix;
}

// The canonical equivalence (V,m) ~ (sV, sm), written at level sm where it
// is the identity matrix.
template <typename F>
LocMorphism<F> refinement_iso(const LocObject<F>& x, const SmoothNumber& s) {
  return {x, refine(x, s), s * x.level,
          Matrix<F>::identity(x.field, s.to_int() * x.dim)};
}

// A found isomorphism, recorded by the common level at which the identity
// matrix realizes it; materialize() builds the morphism when its size is
// actually wanted.
template <typename F>
struct IsoWitness {
  LocObject<F> source;
  LocObject<F> target;
  SmoothNumber level;

  LocMorphism<F> materialize() const {
    int n = divides(source.level, level)->to_int() * source.dim;
    return {source, target, level, Matrix<F>::identity(source.field, n)};
  }
};

// Decides isomorphism at desk scale.  Over a field base two objects are
// isomorphic at a common level exactly when their dimensions agree, so the
// search reduces to the least common refinement against the bound.
template <typename F>
std::optional<IsoWitness<F>> find_iso(const LocObject<F>& x, const LocObject<F>& y,
                                      const SmoothNumber& level_bound) {
  if (!(x.field == y.field)) return std::nullopt;
  if (loc_dim(x) != loc_dim(y)) return std::nullopt;
  SmoothNumber l = lcm(x.level, y.level);
  if (l.value() > level_bound.value()) return std::nullopt;
  return IsoWitness<F>{x, y, l};
}

// Dimension of the morphism space presented at the least common refinement
// of the two levels (each morphism counted through its normal form).
template <typename F>
Int loc_hom_dim(const LocObject<F>& x, const LocObject<F>& y) {
  SmoothNumber l = lcm(x.level, y.level);
  Int cx = divides(x.level, l)->value();
  Int cy = divides(y.level, l)->value();
  return cx * x.dim * cy * y.dim;
}

// ---------------------------------------------------------------------------
// Divisible-object presentations: a bounded window of identification
// witnesses between an object's slot and the j-fold sum of a deeper slot,
// with the simplex condition checked by explicit permutation composition.

template <typename F>
struct DivPresentation {
  LocObject<F> object;
  SmoothNumber window;  // witnesses stored for pairs (i, j) with i*j | window
  // witness[(i,j)] : <T/i> -> <j> x <T/(ij)>, T = window
  std::map<std::pair<Int, Int>, std::vector<std::pair<int, int>>> witnesses;

  const std::vector<std::pair<int, int>>& witness(const Int& i, const Int& j) const {
    auto it = witnesses.find({i, j});
    if (it == witnesses.end())
      throw std::invalid_argument("DivPresentation: pair outside window");
    return it->second;
  }
};

// Default witnesses: the interleave a -> (a mod j, a div j).
template <typename F>
DivPresentation<F> make_div_presentation(const LocObject<F>& object,
                                         const SmoothNumber& window) {
  DivPresentation<F> p{object, window, {}};
  int t = window.to_int();
  for (int i = 1; i <= t; ++i) {
    if (t % i != 0) continue;
    for (int j = 1; j <= t / i; ++j) {
      if ((t / i) % j != 0) continue;
      std::vector<std::pair<int, int>> w;
      w.reserve(static_cast<std::size_t>(t / i));
      for (int a = 0; a < t / i; ++a) w.emplace_back(a % j, a / j);
      p.witnesses[{Int(i), Int(j)}] = std::move(w);
    }
  }
  return p;
}

// Deliberately break one witness (falsifiability control for the
// coherence check): swap two table rows.
template <typename F>
void corrupt_witness(DivPresentation<F>& p, const Int& i, const Int& j) {
  auto it = p.witnesses.find({i, j});
  if (it == p.witnesses.end() || it->second.size() < 2)
    throw std::invalid_argument("corrupt_witness: pair outside window or too small");
  std::swap(it->second[0], it->second[1]);
}

// The simplex condition along a chain i_0, i_1, ..., i_n: composing the
// stored pairwise witnesses step by step equals the direct witness with
// its block digit-expanded by the (mod, div) convention.
template <typename F>
bool div_coherence_check(const DivPresentation<F>& p,
                         const std::vector<SmoothNumber>& chain) {
  if (chain.empty()) throw std::invalid_argument("div_coherence_check: empty chain");
  Int product = 1;
  for (const auto& c : chain) product *= c.value();
  if (p.window.value() % product != 0)
    throw std::invalid_argument("div_coherence_check: chain outside window");
  const int n = static_cast<int>(chain.size()) - 1;
  if (n == 0) return true;

  int t0 = p.window.to_int() / chain[0].to_int();
  Int big_j = 1;
  for (int k = 1; k <= n; ++k) big_j *= chain[static_cast<std::size_t>(k)].value();
  const auto& direct = p.witness(chain[0].value(), big_j);

  for (int a = 0; a < t0; ++a) {
    // stepwise composite
    std::vector<int> digits;
    Int prefix = chain[0].value();
    int cur = a;
    for (int k = 1; k <= n; ++k) {
      const auto& w = p.witness(prefix, chain[static_cast<std::size_t>(k)].value());
      auto [b, next] = w[static_cast<std::size_t>(cur)];
      digits.push_back(b);
      cur = next;
      prefix *= chain[static_cast<std::size_t>(k)].value();
    }
    // direct witness, block expanded into digits
    auto [c, tail] = direct[static_cast<std::size_t>(a)];
    int rem = c;
    for (int k = 1; k <= n; ++k) {
      int ik = chain[static_cast<std::size_t>(k)].to_int();
      if (digits[static_cast<std::size_t>(k - 1)] != rem % ik) return false;
      rem /= ik;
    }
    if (cur != tail) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Slot evaluation: the finite truncation of the coset-indexed summands of
// an object's component at a slot, cosets enumerated by increasing
// denominator then numerator.

template <typename F>
struct FormalIndObject {
  std::vector<std::pair<TorsionElement, int>> summands;  // (coset label, stalk dim)
  bool truncated = false;
};

template <typename F>
FormalIndObject<F> evaluate_slot(const PrimeSet& S, const LocObject<F>& x,
                                 const SmoothNumber& slot, std::size_t truncation) {
  FormalIndObject<F> out;
  out.truncated = x.dim > 0;
  for (const auto& coset : enumerate_cosets(S, slot, truncation))
    out.summands.emplace_back(coset, x.dim);
  return out;
}

}  // namespace catdiv
