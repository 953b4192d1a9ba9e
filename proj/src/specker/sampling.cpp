#include "specker/sampling.hpp"

#include <algorithm>

namespace specker {

Scalar random_scalar(Rng& rng, long bound, Domain domain) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  long num = dist(rng);
  if (domain == Domain::rational) {
    long den = std::uniform_int_distribution<long>(1, 3)(rng);
    return Scalar(mpq_class(num, den));
  }
  return Scalar(num);
}

Scalar random_positive_scalar(Rng& rng, long bound, Domain domain) {
  std::uniform_int_distribution<long> dist(1, std::max(1L, bound));
  long num = dist(rng);
  if (domain == Domain::rational) {
    long den = std::uniform_int_distribution<long>(1, 3)(rng);
    return Scalar(mpq_class(num, den));
  }
  return Scalar(num);
}

IdElem random_idem(const AlgebraPtr& alg, Rng& rng) { return IdElem(alg, rng() & alg->full_mask()); }

PerpElem random_perp(const AlgebraPtr& alg, Rng& rng, long bound) {
  std::vector<PerpEntry> entries;
  for (std::size_t i = 0; i < alg->atom_count(); ++i) {
    entries.push_back({random_scalar(rng, bound, alg->domain()), AtomMask{1} << i});
  }
  return perp_normalize_masks(alg, std::move(entries));
}

FlatElem random_flat(const AlgebraPtr& alg, Rng& rng, long bound) { return alpha(random_perp(alg, rng, bound)); }

FlatElem random_nonneg_flat(const AlgebraPtr& alg, Rng& rng, long bound) {
  std::vector<PerpEntry> entries;
  for (std::size_t i = 0; i < alg->atom_count(); ++i) {
    Scalar v = random_scalar(rng, bound, alg->domain());
    entries.push_back({v.sign() < 0 ? -v : v, AtomMask{1} << i});
  }
  return alpha(perp_normalize_masks(alg, std::move(entries)));
}

}  // namespace specker
