#pragma once

// Shared helpers for the unit suites: generators for random values and the
// independent oracles the derived expectations are frozen against.

#include <vector>

#include "catdiv/rng.hpp"
#include "catdiv/smooth.hpp"

namespace catdiv::tests {

using catdiv::Rng;

inline std::vector<SmoothNumber> smooth_numbers_up_to(const PrimeSet& S,
                                                      const Int& bound) {
  std::vector<SmoothNumber> out;
  for (Int n = 1; n <= bound; ++n)
    if (S.is_smooth(n)) out.push_back(SmoothNumber::make(S, n));
  return out;
}

inline SmoothNumber random_smooth(Rng& rng, const PrimeSet& S, const Int& bound) {
  auto all = smooth_numbers_up_to(S, bound);
  return all[rng.below(all.size())];
}

inline SRational random_srational(Rng& rng, const PrimeSet& S) {
  Int num = rng.range(-40, 40);
  auto den = random_smooth(rng, S, 36);
  return SRational::make(S, num, den.value());
}

}  // namespace catdiv::tests
