#pragma once

#include <cstdint>
#include <random>

#include "specker/boolalg.hpp"
#include "specker/flat.hpp"
#include "specker/perp.hpp"

namespace specker {

/// Bounded random verification settings. All randomness is seeded.
struct SampleConfig {
  std::size_t samples = 200;
  long coeff_bound = 10;
  std::uint64_t seed = 0;
};

using Rng = std::mt19937_64;

/// Integer in [−bound, bound]; rational domains also draw halves and thirds.
Scalar random_scalar(Rng& rng, long bound, Domain domain);
Scalar random_positive_scalar(Rng& rng, long bound, Domain domain);
IdElem random_idem(const AlgebraPtr& alg, Rng& rng);
/// Each atom gets an independent value in [−bound, bound].
PerpElem random_perp(const AlgebraPtr& alg, Rng& rng, long bound);
FlatElem random_flat(const AlgebraPtr& alg, Rng& rng, long bound);
/// Values in [0, bound].
FlatElem random_nonneg_flat(const AlgebraPtr& alg, Rng& rng, long bound);

}  // namespace specker
