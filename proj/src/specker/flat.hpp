#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "specker/boolalg.hpp"
#include "specker/perp.hpp"
#include "specker/scalar.hpp"

namespace specker {

struct Step {
  Scalar upto;
  AtomMask idem;
  friend bool operator==(const Step&, const Step&) = default;
};

/**
 * Element of D[B]^♭: a decreasing step function D → B. With steps
 * (a_0, 1), (a_1, e_1), ..., (a_n, e_n) the function is 1 on (−∞, a_0],
 * e_i on (a_{i−1}, a_i] and 0 above a_n. Thresholds strictly increase,
 * idempotents strictly decrease, and e_n ≠ 0.
 */
class FlatElem {
 public:
  /// Validating constructor; the list must already be canonical.
  static FlatElem from_steps(const AlgebraPtr& alg, std::vector<Step> steps);
  /// Accepts a weakly decreasing list with weakly increasing thresholds and
  /// canonicalizes it: equal adjacent idempotents merge into the later
  /// threshold and trailing zeros are dropped. The first idempotent must be 1.
  static FlatElem from_decreasing(const AlgebraPtr& alg, std::vector<Step> steps);

  static FlatElem constant(const AlgebraPtr& alg, const Scalar& a);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Step>& steps() const { return steps_; }
  const Scalar& lowest_threshold() const { return steps_.front().upto; }
  const Scalar& highest_threshold() const { return steps_.back().upto; }

  /// f(a).
  IdElem operator()(const Scalar& a) const;
  AtomMask value_mask(const Scalar& a) const;

  friend bool operator==(const FlatElem& a, const FlatElem& b);

 private:
  FlatElem(AlgebraPtr alg, std::vector<Step> steps) : alg_(std::move(alg)), steps_(std::move(steps)) {}
  AlgebraPtr alg_;
  std::vector<Step> steps_;
};

/// e^♭: 1 on (−∞,0], e on (0,1], 0 above.
FlatElem idem_embed_flat(const IdElem& e);

/// α(f)(a) = ⋁{f(b) : b ≥ a}.
FlatElem alpha(const PerpElem& f);
/// Inverse of α: f(a_0) = ¬e_1, f(a_i) = e_i ∧ ¬e_{i+1}, f(a_n) = e_n.
PerpElem alpha_inv(const FlatElem& g);

/// Builds a step function from a pointwise rule whose breakpoints lie in
/// `candidates`. The rule must be 1 below the smallest candidate and 0 above
/// the largest; both are checked.
FlatElem flat_from_rule(const AlgebraPtr& alg, std::vector<Scalar> candidates,
                        const std::function<AtomMask(const Scalar&)>& rule);

// Direct formulas, evaluated at candidate thresholds only.
FlatElem flat_add_formula(const FlatElem& f, const FlatElem& g);
FlatElem flat_scalar_pos_formula(const Scalar& b, const FlatElem& f);
FlatElem flat_mul_nonneg_formula(const FlatElem& f, const FlatElem& g);
FlatElem flat_neg_formula(const FlatElem& f);

// Direct formulas cross-checked against α-transport of the ⊥ operation.
FlatElem flat_add(const FlatElem& f, const FlatElem& g);
FlatElem flat_scalar_pos(const Scalar& b, const FlatElem& f);
FlatElem flat_mul_nonneg(const FlatElem& f, const FlatElem& g);
FlatElem flat_neg(const FlatElem& f);
FlatElem flat_sub(const FlatElem& f, const FlatElem& g);

/// General product and scalar action, by transport through α. Where the
/// direct formulas apply, the results are checked against them.
FlatElem flat_mul_general(const FlatElem& f, const FlatElem& g);
FlatElem flat_scalar_general(const Scalar& b, const FlatElem& f);

FlatElem flat_meet(const FlatElem& f, const FlatElem& g);
FlatElem flat_join(const FlatElem& f, const FlatElem& g);
bool flat_leq(const FlatElem& f, const FlatElem& g);
bool flat_is_nonneg(const FlatElem& f);

struct DecreasingDecomposition {
  Scalar base;                                 // a_0
  std::vector<std::pair<Scalar, IdElem>> terms;  // (b_i > 0, e_i), strictly decreasing e_i
};

/// f = a_0 + Σ (a_i − a_{i−1}) f(a_i). Reconstruction is checked.
DecreasingDecomposition decreasing_decomposition(const FlatElem& f);
/// Same decomposition computed from the full orthogonal form by upper-tail
/// joins; checked against decreasing_decomposition(alpha(f)).
DecreasingDecomposition orth_to_decreasing(const PerpElem& f);
/// a_0·1 + Σ b_i e_i computed in D[B]^*.
PerpElem reconstruct_perp(const AlgebraPtr& alg, const DecreasingDecomposition& d);
/// a_0 + Σ b_i e_i^♭ computed with ♭ arithmetic.
FlatElem reconstruct_flat(const AlgebraPtr& alg, const Scalar& base,
                          std::span<const std::pair<Scalar, IdElem>> terms);

struct CompatibleDecomposition {
  std::vector<Scalar> grid;   // a_0 < ... < a_n
  std::vector<IdElem> first;  // s(a_i), i = 0..n (first[0] = 1)
  std::vector<IdElem> second; // t(a_i)
};

/// Shared thresholds with a_0 ≤ s, t ≤ a_n; a_0 = 0 when both are
/// nonnegative. Both reconstructions are checked.
CompatibleDecomposition compatible_decreasing(const FlatElem& s, const FlatElem& t);

/// e = 2e ∧ 1, cross-checked against alpha_inv(f)² = alpha_inv(f).
bool is_idempotent_order(const FlatElem& f);

/// Inverse of idem_embed_flat. Throws if f is not idempotent.
IdElem flat_to_idem(const FlatElem& f);

}  // namespace specker
