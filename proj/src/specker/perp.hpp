#pragma once

#include <span>
#include <utility>
#include <vector>

#include "specker/boolalg.hpp"
#include "specker/scalar.hpp"

namespace specker {

struct PerpEntry {
  Scalar value;
  AtomMask idem;
  friend bool operator==(const PerpEntry&, const PerpEntry&) = default;
};

/**
 * Element of the boolean power D[B]^*: a finitely supported map from
 * scalars to pairwise-disjoint nonzero idempotents joining to 1.
 *
 * Canonical form lists every value class explicitly, sorted by descending
 * value. Equality is equality of canonical maps.
 */
class PerpElem {
 public:
  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<PerpEntry>& entries() const { return entries_; }

  /// f(a): the idempotent on which the element takes value `a` (0 if none).
  IdElem at(const Scalar& a) const;
  /// The constant a·1.
  static PerpElem constant(const AlgebraPtr& alg, const Scalar& a);

  friend bool operator==(const PerpElem& a, const PerpElem& b);

 private:
  friend PerpElem perp_normalize(const AlgebraPtr&, std::span<const std::pair<Scalar, IdElem>>);
  friend PerpElem perp_normalize_masks(const AlgebraPtr&, std::vector<PerpEntry>);
  PerpElem(AlgebraPtr alg, std::vector<PerpEntry> entries)
      : alg_(std::move(alg)), entries_(std::move(entries)) {}

  AlgebraPtr alg_;
  std::vector<PerpEntry> entries_;
};

/// Merges duplicate values, drops zero idempotents, rejects overlapping
/// idempotents on distinct values, and assigns value 0 to whatever the
/// family leaves uncovered.
PerpElem perp_normalize(const AlgebraPtr& alg, std::span<const std::pair<Scalar, IdElem>> entries);
PerpElem perp_normalize(const AlgebraPtr& alg, std::initializer_list<std::pair<Scalar, IdElem>> entries);
PerpElem perp_normalize_masks(const AlgebraPtr& alg, std::vector<PerpEntry> entries);

PerpElem perp_add(const PerpElem& f, const PerpElem& g);
PerpElem perp_mul(const PerpElem& f, const PerpElem& g);
PerpElem perp_scalar_mul(const Scalar& b, const PerpElem& f);
PerpElem perp_neg(const PerpElem& f);
PerpElem perp_sub(const PerpElem& f, const PerpElem& g);

/// e^⊥ = {1 ↦ e, 0 ↦ ¬e}.
PerpElem idem_embed_perp(const IdElem& e);

bool perp_is_nonneg(const PerpElem& f);
bool perp_leq(const PerpElem& f, const PerpElem& g);

/// Meet/join by refining both elements to the common family {e_i ∧ f_j}
/// and taking coefficientwise min/max.
PerpElem perp_meet_refined(const PerpElem& f, const PerpElem& g);
PerpElem perp_join_refined(const PerpElem& f, const PerpElem& g);
/// Meet/join by the join-over-min/max formula, value by value.
PerpElem perp_meet_formula(const PerpElem& f, const PerpElem& g);
PerpElem perp_join_formula(const PerpElem& f, const PerpElem& g);
/// Refinement route, cross-checked against the formula route.
PerpElem perp_meet(const PerpElem& f, const PerpElem& g);
PerpElem perp_join(const PerpElem& f, const PerpElem& g);

/// supp(g) = ⋁{g(a) : a ≠ 0}.
IdElem perp_support(const PerpElem& g);

/// The idempotent generating the annihilator of the ideal generated by
/// `gens`: ¬⋁ supp(g_i). Postconditions are checked before returning.
IdElem annihilator_idempotent(std::span<const PerpElem> gens);

}  // namespace specker
