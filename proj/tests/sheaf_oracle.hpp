#pragma once

// Brute-force enumeration of equivariant kernels, independent of the
// production orbit count: variables for every (source coset, target
// coset, cell) triple at explicit per-prime cell resolution, glued by a
// union-find under the window translations and the locally-constant
// requirement at window resolution.

#include <numeric>
#include <vector>

#include "catdiv/sheaf.hpp"

namespace catdiv::tests {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  int classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }
};

template <typename F>
Int brute_force_sheaf_hom_dim(const PrimeSet& S, const EqSheafGen<F>& a,
                              const EqSheafGen<F>& b, int depth) {
  SmoothNumber window = lcm(a.level, b.level);
  int r = window.to_int();
  int cs = divides(a.level, window)->to_int();
  int ct = divides(b.level, window)->to_int();

  // cells as per-prime block integers at uniform depth
  std::vector<int> prime_pow(S.size(), 1), win_exp(S.size(), 0);
  int cells = 1;
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (int k = 0; k < depth; ++k) prime_pow[i] *= static_cast<int>(S.at(i));
    win_exp[i] = window.exponent(S.at(i));
    cells *= prime_pow[i];
  }
  auto cell_split = [&](int c) {
    std::vector<int> u(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
      u[i] = c % prime_pow[i];
      c /= prime_pow[i];
    }
    return u;
  };
  auto cell_join = [&](const std::vector<int>& u) {
    int c = 0;
    for (std::size_t i = S.size(); i-- > 0;) c = c * prime_pow[i] + u[i];
    return c;
  };

  auto var = [&](int g, int h, int c) { return (c * ct + h) * cs + g; };
  UnionFind uf(cs * ct * cells);

  // translation by every window element
  for (int tau = 0; tau < r; ++tau) {
    TorsionElement t = TorsionElement::reduce(Int(tau), Int(r));
    std::vector<int> add(S.size(), 0);
    for (const auto& comp : decompose(S, t)) {
      int scale = 1;
      for (int k = 0; k < depth - comp.depth; ++k)
        scale *= static_cast<int>(S.at(comp.prime_index));
      add[comp.prime_index] = static_cast<int>(comp.numerator) * scale;
    }
    for (int c = 0; c < cells; ++c) {
      auto u = cell_split(c);
      for (std::size_t i = 0; i < S.size(); ++i) u[i] = (u[i] + add[i]) % prime_pow[i];
      int c2 = cell_join(u);
      for (int g = 0; g < cs; ++g)
        for (int h = 0; h < ct; ++h)
          uf.unite(var(g, h, c), var((g + tau) % cs, (h + tau) % ct, c2));
    }
  }

  // locally constant at window resolution: equate cells with equal leading
  // blocks
  for (int c = 0; c < cells; ++c) {
    auto u = cell_split(c);
    std::vector<int> v = u;
    bool base = true;
    for (std::size_t i = 0; i < S.size(); ++i) {
      int sub = prime_pow[i];
      for (int k = 0; k < win_exp[i]; ++k) sub /= static_cast<int>(S.at(i));
      v[i] = (u[i] / sub) * sub;  // zero the sub-window digits
      if (v[i] != u[i]) base = false;
    }
    if (!base) {
      int c2 = cell_join(v);
      for (int g = 0; g < cs; ++g)
        for (int h = 0; h < ct; ++h) uf.unite(var(g, h, c), var(g, h, c2));
    }
  }

  return Int(uf.classes()) * a.stalk_dim * b.stalk_dim;
}

}  // namespace catdiv::tests
