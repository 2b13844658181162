#pragma once

// Finite-depth presentations of equivariant locally constant sheaves on
// the session Cantor space.  A generator is induced from a stalk at a
// level: the space splits equivariantly into the level block times its
// image under multiplication, the stalk spreads as one summand per coset
// of the level subgroup, and all finiteness lives in coset truncation.
//
// Maps between generators are translation-equivariant kernels: a matrix
// block for every (source coset, target coset, cell block) triple inside
// the window of the common refinement, locally constant at the window
// resolution.  In the transversal trivialization such a kernel is exactly
// a matrix at the window level, with the kernel entry at cell b read off
// by translating both coset indices by b; composition is cellwise
// convolution over the intermediate cosets.  Hom spaces are computed at
// the least window that separates the two inducing levels and carry a
// depth-stabilization certificate.

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "catdiv/clopen.hpp"
#include "catdiv/loccat.hpp"
#include "catdiv/torsion.hpp"

namespace catdiv {

template <typename F>
struct EqSheafGen {
  F field;
  int stalk_dim = 0;
  SmoothNumber level;

  friend bool operator==(const EqSheafGen& a, const EqSheafGen& b) {
    return a.field == b.field && a.stalk_dim == b.stalk_dim && a.level == b.level;
  }
};

// A finite formal sum of induced generators.
template <typename F>
struct EqSheaf {
  std::vector<EqSheafGen<F>> generators;
};

template <typename F>
EqSheaf<F> induce(F field, int stalk_dim, const SmoothNumber& level) {
  if (stalk_dim < 0) throw std::invalid_argument("induce: negative stalk dimension");
  return EqSheaf<F>{{EqSheafGen<F>{std::move(field), stalk_dim, level}}};
}

template <typename F>
SRational sheaf_dim(const EqSheaf<F>& f) {
  SRational d;
  for (const auto& g : f.generators)
    d = d + SRational::reduced(Int(g.stalk_dim), g.level);
  return d;
}

// The comparison functor on objects: (V, m) becomes the generator induced
// from V at level m.
template <typename F>
EqSheaf<F> to_sheaf(const LocObject<F>& x) {
  return induce(x.field, x.dim, x.level);
}

template <typename F>
LocObject<F> gen_object(const EqSheafGen<F>& g) {
  return LocObject<F>{g.field, g.stalk_dim, g.level};
}

// ---------------------------------------------------------------------------
// Equivariant kernels between single generators.

template <typename F>
struct EqSheafMap {
  EqSheafGen<F> source;
  EqSheafGen<F> target;
  SmoothNumber level;  // kernel window; both generator levels divide it
  Matrix<F> mat;       // transversal trivialization at the window

  void validate() const {
    auto cs = divides(source.level, level);
    auto ct = divides(target.level, level);
    if (!cs || !ct)
      throw std::invalid_argument("EqSheafMap: generator levels must divide the window");
    if (mat.rows() != ct->to_int() * target.stalk_dim ||
        mat.cols() != cs->to_int() * source.stalk_dim)
      throw std::invalid_argument("EqSheafMap: matrix shape mismatch");
  }

  // Kernel block from source coset g to target coset h over cell block b,
  // all indexed inside the window.
  void kernel_block(int h, int g, int b, Matrix<F>& out) const {
    int cs = divides(source.level, level)->to_int();
    int ct = divides(target.level, level)->to_int();
    int row0 = (((h - b) % ct) + ct) % ct * target.stalk_dim;
    int col0 = (((g - b) % cs) + cs) % cs * source.stalk_dim;
    for (int w = 0; w < target.stalk_dim; ++w)
      for (int v = 0; v < source.stalk_dim; ++v) out.at(w, v) = mat.at(row0 + w, col0 + v);
  }
};

template <typename F>
LocMorphism<F> to_loc(const EqSheafMap<F>& f) {
  return LocMorphism<F>{gen_object(f.source), gen_object(f.target), f.level, f.mat};
}

// The comparison functor on morphisms: the matrix at the morphism's level
// spread over the window-block decomposition as an equivariant kernel.
template <typename F>
EqSheafMap<F> to_sheaf_map(const LocMorphism<F>& f) {
  EqSheafMap<F> m{EqSheafGen<F>{f.source.field, f.source.dim, f.source.level},
                  EqSheafGen<F>{f.target.field, f.target.dim, f.target.level},
                  f.level, f.matrix};
  m.validate();
  return m;
}

template <typename F>
EqSheafMap<F> sheaf_map_normalize(const EqSheafMap<F>& f) {
  return to_sheaf_map(mor_normalize(to_loc(f)));
}

template <typename F>
bool sheaf_map_equal(const EqSheafMap<F>& f, const EqSheafMap<F>& g) {
  return loc_equal(to_loc(f), to_loc(g));
}

template <typename F>
EqSheafMap<F> sheaf_identity(const EqSheafGen<F>& g) {
  return to_sheaf_map(loc_identity(gen_object(g)));
}

// Cellwise convolution over intermediate cosets.  The kernels are raised
// to the common window, convolved cell by cell, and the results across
// cells are required to assemble into one equivariant kernel again.
template <typename F>
EqSheafMap<F> sheaf_compose(const EqSheafMap<F>& g, const EqSheafMap<F>& f) {
  if (!(f.target == g.source))
    throw std::invalid_argument("sheaf_compose: boundary mismatch");
  SmoothNumber l = lcm(f.level, g.level);
  auto fr = to_sheaf_map(raise_to_level(to_loc(f), l));
  auto gr = to_sheaf_map(raise_to_level(to_loc(g), l));

  const F& field = f.mat.field();
  int li = l.to_int();
  int cs = divides(f.source.level, l)->to_int();
  int cm = divides(f.target.level, l)->to_int();
  int ct = divides(g.target.level, l)->to_int();
  int dv = f.source.stalk_dim, dm = f.target.stalk_dim, dw = g.target.stalk_dim;

  Matrix<F> kf(field, dm, dv), kg(field, dw, dm);
  std::vector<Matrix<F>> at_cell(static_cast<std::size_t>(li),
                                 Matrix<F>(field, ct * dw, cs * dv));
  for (int b = 0; b < li; ++b)
    for (int h = 0; h < ct; ++h)
      for (int gidx = 0; gidx < cs; ++gidx) {
        Matrix<F> acc(field, dw, dv);
        for (int k = 0; k < cm; ++k) {
          fr.kernel_block(k, gidx, b, kf);
          gr.kernel_block(h, k, b, kg);
          acc = acc + kg * kf;
        }
        for (int w = 0; w < dw; ++w)
          for (int v = 0; v < dv; ++v)
            at_cell[static_cast<std::size_t>(b)].at(h * dw + w, gidx * dv + v) =
                acc.at(w, v);
      }

  // assemble from the base cell and check every other cell agrees with the
  // translated reading of the same kernel
  EqSheafMap<F> out{f.source, g.target, l, at_cell[0]};
  Matrix<F> probe(field, dw, dv);
  for (int b = 0; b < li; ++b)
    for (int h = 0; h < ct; ++h)
      for (int gidx = 0; gidx < cs; ++gidx) {
        out.kernel_block(h, gidx, b, probe);
        for (int w = 0; w < dw; ++w)
          for (int v = 0; v < dv; ++v)
            if (!field.eq(probe.at(w, v),
                          at_cell[static_cast<std::size_t>(b)].at(h * dw + w,
                                                                  gidx * dv + v)))
              throw std::logic_error("sheaf_compose: convolution is not equivariant");
      }
  return to_sheaf_map(mor_normalize(to_loc(out)));
}

// Stalkwise invertibility: the assembled kernel matrix over every cell
// block of the window must be invertible.
template <typename F>
bool invertible_on_stalks(const EqSheafMap<F>& f) {
  int li = f.level.to_int();
  int cs = divides(f.source.level, f.level)->to_int();
  int ct = divides(f.target.level, f.level)->to_int();
  int dv = f.source.stalk_dim, dw = f.target.stalk_dim;
  if (cs * dv != ct * dw) return false;
  Matrix<F> block(f.mat.field(), dw, dv);
  for (int b = 0; b < li; ++b) {
    Matrix<F> cell(f.mat.field(), ct * dw, cs * dv);
    for (int h = 0; h < ct; ++h)
      for (int g = 0; g < cs; ++g) {
        f.kernel_block(h, g, b, block);
        for (int w = 0; w < dw; ++w)
          for (int v = 0; v < dv; ++v)
            cell.at(h * dw + w, g * dv + v) = block.at(w, v);
      }
    if (!cell.invertible()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The translation structure of a generator: the automorphism induced by a
// torsion element, as a kernel in the transversal trivialization plus the
// explicit permutation of the window cell blocks.

template <typename F>
struct TranslateIso {
  EqSheafMap<F> map;
  SmoothNumber block_modulus;  // window joining the level and the denominator
  std::vector<int> cell_perm;  // b -> image cell block under the translation
};

template <typename F>
TranslateIso<F> translate_sheaf(const PrimeSet& S, const TorsionElement& t,
                                const EqSheafGen<F>& gen) {
  SmoothNumber den = SmoothNumber::make(S, t.den);
  SmoothNumber l = lcm(gen.level, den);
  int li = l.to_int();
  Int shift_big = t.num * (l.value() / t.den);
  int shift = static_cast<int>(shift_big % li);

  int copies = divides(gen.level, l)->to_int();
  Matrix<F> m(gen.field, copies * gen.stalk_dim, copies * gen.stalk_dim);
  for (int c = 0; c < copies; ++c) {
    int dst = (c + shift) % copies;
    for (int v = 0; v < gen.stalk_dim; ++v)
      m.at(dst * gen.stalk_dim + v, c * gen.stalk_dim + v) = gen.field.one();
  }
  TranslateIso<F> out{EqSheafMap<F>{gen, gen, l, std::move(m)}, l, {}};
  out.cell_perm.resize(static_cast<std::size_t>(li));
  for (int b = 0; b < li; ++b) out.cell_perm[static_cast<std::size_t>(b)] = (b + shift) % li;
  return out;
}

// The digit prefix of a window cell block: per prime, the leading digits
// of the block value, most significant first.
inline Prefix cell_prefix(const PrimeSet& S, int cell, const SmoothNumber& window) {
  TorsionElement t = TorsionElement::reduce(Int(cell), window.value());
  std::vector<Int> block(S.size(), 0);
  for (const auto& c : decompose(S, t)) {
    Int scale = 1;
    for (int k = 0; k < window.exponent(S.at(c.prime_index)) - c.depth; ++k)
      scale *= S.at(c.prime_index);
    block[c.prime_index] = c.numerator * scale;
  }
  Prefix out;
  for (std::size_t i = 0; i < S.size(); ++i) {
    int d = window.exponent(S.at(i));
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(d));
    Int u = block[i];
    for (int k = d - 1; k >= 0; --k) {
      digits[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(u % S.at(i));
      u /= S.at(i);
    }
    out.insert(out.end(), digits.begin(), digits.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sections: the truncated coset components of a sheaf over a clopen, each
// the space of stalk-valued locally constant functions at the requested
// resolution.

template <typename F>
struct SectionDatum {
  Clopen domain;
  int depth = 0;
  struct Component {
    std::size_t generator;
    TorsionElement coset;
    int stalk_dim;
  };
  std::vector<Component> components;
  // The cell partition of the domain at the requested resolution: each
  // component contributes one stalk-valued value per cell.
  std::vector<Prefix> cell_partition;
  bool truncated = false;

  Int cells() const { return Int(cell_partition.size()); }

  Int dimension() const {
    Int d = 0;
    for (const auto& c : components) d += Int(c.stalk_dim) * cells();
    return d;
  }
};

template <typename F>
SectionDatum<F> sections(const PrimeSet& S, const EqSheaf<F>& f, const Clopen& u,
                         std::size_t coset_bound, int depth) {
  SectionDatum<F> out;
  out.domain = u;
  out.depth = depth;
  out.cell_partition = clopen_cells(S, u, depth);
  for (std::size_t gi = 0; gi < f.generators.size(); ++gi) {
    const auto& gen = f.generators[gi];
    for (const auto& coset : enumerate_cosets(S, gen.level, coset_bound))
      out.components.push_back({gi, coset, gen.stalk_dim});
    if (gen.stalk_dim > 0) out.truncated = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces with depth stabilization.

struct SheafHomResult {
  Int dimension = 0;
  bool stabilized = false;
  int depth = 0;
};

namespace detail {

// Dimension of the space of equivariant kernels between two generators at
// the given cell depth: kernels assign a matrix to every (source coset,
// target coset, window block) triple, are invariant under window
// translation, and are locally constant at the window resolution; the
// count is the number of translation orbits times the matrix size.  The
// depth must resolve the window.
template <typename F>
Int hom_dim_at_depth(const PrimeSet&, const EqSheafGen<F>& a, const EqSheafGen<F>& b,
                     int depth) {
  SmoothNumber window = lcm(a.level, b.level);
  for (const auto& [p, e] : window.factors())
    if (e > depth)
      throw std::invalid_argument("sheaf_hom: depth does not separate the levels");
  int r = window.to_int();
  int cs = divides(a.level, window)->to_int();
  int ct = divides(b.level, window)->to_int();
  std::set<std::pair<int, int>> orbit_reps;
  for (int g = 0; g < cs; ++g)
    for (int h = 0; h < ct; ++h)
      for (int beta = 0; beta < r; ++beta) {
        // translate by -beta to the base cell
        int gg = ((g - beta) % cs + cs) % cs;
        int hh = ((h - beta) % ct + ct) % ct;
        orbit_reps.insert({gg, hh});
      }
  return Int(orbit_reps.size()) * a.stalk_dim * b.stalk_dim;
}

}  // namespace detail

template <typename F>
SheafHomResult sheaf_hom(const PrimeSet& S, const EqSheaf<F>& f, const EqSheaf<F>& g,
                         int depth) {
  SheafHomResult out;
  out.depth = depth;
  Int next = 0;
  for (const auto& a : f.generators)
    for (const auto& b : g.generators) {
      out.dimension += detail::hom_dim_at_depth(S, a, b, depth);
      next += detail::hom_dim_at_depth(S, a, b, depth + 1);
    }
  out.stabilized = (next == out.dimension);
  return out;
}

// ---------------------------------------------------------------------------
// The skyscraper misreading, kept as a negative control: the generator is
// read as its total sections over the finite level block, so classes land
// in the integers and morphism spaces collapse to the block overlap.

template <typename F>
Int sky_dim(const EqSheafGen<F>& g) {
  return Int(g.stalk_dim) * g.level.value();
}

template <typename F>
Int sky_hom_dim(const EqSheafGen<F>& a, const EqSheafGen<F>& b) {
  return gcd(a.level, b.level).value() * a.stalk_dim * b.stalk_dim;
}

}  // namespace catdiv
