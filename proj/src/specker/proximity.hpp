#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "specker/boolalg.hpp"
#include "specker/flat.hpp"
#include "specker/report.hpp"
#include "specker/sampling.hpp"

namespace specker {

/// Exhaustive de Vries checking is limited to 2^5-element algebras.
inline constexpr std::size_t exhaustive_atom_bound = 5;
/// enumerate_devries searches every relation on algebras with ≤ 4 elements.
inline constexpr std::uint64_t enumerate_element_bound = 4;

/**
 * A binary relation on a finite boolean algebra, intended as a de Vries
 * proximity. The order relation ≤ has a dedicated representation that works
 * for any size; other relations are tabulated and limited to the exhaustive
 * bound. Whether the relation satisfies D1–D7 is decided at construction.
 */
class ProxRel {
 public:
  static ProxRel leq(AlgebraPtr alg);
  static ProxRel from_pairs(AlgebraPtr alg, std::span<const std::pair<IdElem, IdElem>> pairs);
  /// rows[e] has bit f set iff e ≺ f.
  static ProxRel from_rows(AlgebraPtr alg, std::vector<std::uint64_t> rows);

  const AlgebraPtr& algebra() const { return alg_; }
  bool is_leq_kind() const { return leq_; }
  bool is_devries() const { return devries_; }

  bool related(AtomMask e, AtomMask f) const;
  bool related(const IdElem& e, const IdElem& f) const;

  /// All related pairs in (e, f) mask order. Requires a tabulable algebra.
  std::vector<std::pair<AtomMask, AtomMask>> pairs() const;

  friend bool operator==(const ProxRel& a, const ProxRel& b);

 private:
  ProxRel(AlgebraPtr alg, std::vector<std::uint64_t> rows, bool leq);
  AlgebraPtr alg_;
  std::vector<std::uint64_t> rows_;
  bool leq_ = false;
  bool devries_ = false;
};

ProxRel leq_proximity(const AlgebraPtr& alg);

/// Exhaustive D1–D7 check.
ProxReport check_devries(const ProxRel& rel);

/// Every relation on the algebra that passes check_devries.
std::vector<ProxRel> enumerate_devries(const AlgebraPtr& alg);

/// Raw witness search for e ≺ g ≺ f; smallest g first, then lexicographic.
std::optional<IdElem> find_interpolant(const ProxRel& rel, const IdElem& e, const IdElem& f);
/// Interpolant for a de Vries proximity. Errors: not_devries, invalid_argument
/// when e ⊀ f, no_witness when the search fails.
IdElem interpolant(const ProxRel& rel, const IdElem& e, const IdElem& f);
/// Smallest nonzero f with f ≺ e (the D7 witness).
std::optional<IdElem> find_nonzero_below(const ProxRel& rel, const IdElem& e);

/// f ≺^♭ g: f(b) ≺ g(b) at every merged threshold and beyond both ends.
bool lift_check(const ProxRel& rel, const FlatElem& s, const FlatElem& t);

/// {(e, f) : e^♭ ≺^♭ f^♭}, checked equal to `rel`.
ProxRel restrict_lift(const ProxRel& rel);

/// Random s together with a t such that s ≺^♭ t, built step by step from
/// successors of the step idempotents.
std::pair<FlatElem, FlatElem> random_related_pair(const ProxRel& rel, Rng& rng, long bound, bool nonneg = false);
/// A random t with s ≺^♭ t.
FlatElem random_successor(const ProxRel& rel, const FlatElem& s, Rng& rng, long bound);

/// r with s ≺^♭ r ≺^♭ t from interpolants on a compatible decomposition.
FlatElem p9_witness(const ProxRel& rel, const FlatElem& s, const FlatElem& t);
/// 0 < t ≺^♭ s for s > 0, from a D7 witness below the last step of s.
FlatElem p10_witness(const ProxRel& rel, const FlatElem& s);

/// Sampled P1–P10 for the lift of a de Vries proximity.
ProxReport prox_axiom_sample(const ProxRel& rel, const SampleConfig& config);

}  // namespace specker
