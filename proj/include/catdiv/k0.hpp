#pragma once

// The Grothendieck-group computer: the truncated presentation with one
// generator per smooth divisor of the bound, the relations identifying a
// generator with the multiple of its refinement, and the class map into
// the localized integers.  The reduction is Smith normal form.

#include <optional>
#include <vector>

#include "catdiv/smooth.hpp"
#include "catdiv/snf.hpp"

namespace catdiv {

struct K0Presentation {
  SmoothNumber bound;                    // M
  std::vector<SmoothNumber> generators;  // smooth divisors of M, ascending
  std::size_t relation_count = 0;
  std::vector<Int> invariant_factors;    // nonzero part of the SNF diagonal
  std::size_t free_rank = 0;
  std::vector<SRational> class_map;       // generator -> 1/m
  std::vector<SRational> reduced_images;  // transformed basis -> localized integers
  std::vector<bool> free_position;        // which transformed basis elements are free

  bool is_infinite_cyclic() const {
    if (free_rank != 1) return false;
    for (const Int& d : invariant_factors)
      if (d != 1) return false;
    return true;
  }

  // Image of the unique free generator, when the group is infinite cyclic.
  std::optional<SRational> free_generator_image() const {
    std::optional<SRational> out;
    for (std::size_t j = 0; j < free_position.size(); ++j)
      if (free_position[j]) {
        if (out) return std::nullopt;
        out = reduced_images[j];
      }
    return out;
  }
};

inline K0Presentation k0_presentation(const PrimeSet& S, const SmoothNumber& bound) {
  K0Presentation p;
  p.bound = bound;

  for (Int d = 1; d <= bound.value(); ++d)
    if (bound.value() % d == 0) p.generators.push_back(SmoothNumber::make(S, d));
  const std::size_t n = p.generators.size();

  IntMatrix relations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto k = divides(p.generators[i], p.generators[j]);
      if (!k) continue;
      std::vector<Int> row(n, 0);
      row[i] = 1;           // g_m
      row[j] = -k->value(); // - k g_{mk}
      relations.push_back(std::move(row));
    }
  p.relation_count = relations.size();

  auto snf = smith_normal_form(std::move(relations), n);
  for (const Int& d : snf.diagonal)
    if (d != 0) p.invariant_factors.push_back(d);
  p.free_rank = snf.torsion_free_rank(n);

  for (const auto& g : p.generators) p.class_map.push_back(SRational::reduced(1, g));

  p.free_position.assign(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    SRational image;
    for (std::size_t i = 0; i < n; ++i)
      image = image + SRational(snf.new_basis[j][i]) * p.class_map[i];
    p.reduced_images.push_back(image);
    p.free_position[j] = j >= snf.diagonal.size() || snf.diagonal[j] == 0;
  }
  return p;
}

}  // namespace catdiv
