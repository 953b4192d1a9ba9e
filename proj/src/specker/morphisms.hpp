#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "specker/boolalg.hpp"
#include "specker/flat.hpp"
#include "specker/proximity.hpp"
#include "specker/report.hpp"
#include "specker/sampling.hpp"

namespace specker {

/// Morphism tables cover every source element; keep them small.
inline constexpr std::size_t table_atom_bound = 16;

/**
 * A map between finite boolean algebras equipped with proximities, stored as
 * a full element table. Nothing about homomorphism structure is assumed;
 * check_dv_morphism decides M1–M4.
 */
class DVMorphism {
 public:
  static DVMorphism from_table(ProxRel source, ProxRel target, std::vector<AtomMask> table);
  static DVMorphism identity(const ProxRel& rel);

  const ProxRel& source() const { return source_; }
  const ProxRel& target() const { return target_; }
  const std::vector<AtomMask>& table() const { return table_; }

  AtomMask apply(AtomMask e) const { return table_[e]; }
  IdElem operator()(const IdElem& e) const;

  friend bool operator==(const DVMorphism& a, const DVMorphism& b);

 private:
  DVMorphism(ProxRel source, ProxRel target, std::vector<AtomMask> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}
  ProxRel source_;
  ProxRel target_;
  std::vector<AtomMask> table_;
};

/// Exhaustive M1–M4 on the element tables.
ProxReport check_dv_morphism(const DVMorphism& m);

/// Every unital boolean homomorphism a → b, wrapped with ≤ on both sides.
/// One per map atoms(b) → atoms(a), in lexicographic order of that map.
std::vector<DVMorphism> enumerate_boolean_homs(const AlgebraPtr& a, const AlgebraPtr& b);

/// (D[B]^♭, ≺^♭) for a de Vries proximity ≺ on B.
struct DeVriesPower {
  ProxRel base;
  const AlgebraPtr& algebra() const { return base.algebra(); }
  bool related(const FlatElem& s, const FlatElem& t) const { return lift_check(base, s, t); }
};

using FlatAction = std::function<FlatElem(const FlatElem&)>;

/// A map between de Vries powers given by its action on elements. Lifted
/// morphisms remember the table they came from.
struct ProxMorphism {
  DeVriesPower source;
  DeVriesPower target;
  FlatAction action;
  std::optional<DVMorphism> base;
};

/// σ^♭(f) = σ ∘ f. Throws invalid_argument unless check_dv_morphism passes.
ProxMorphism lift_morphism(const DVMorphism& m);

/// a_0 + Σ b_i σ(e_i)^♭ over the decreasing decomposition of f.
FlatElem apply_via_decomposition(const DVMorphism& m, const FlatElem& f);

/// Applies the action; for lifted morphisms the decomposition route is
/// computed as well and must agree.
FlatElem apply_prox_morphism(const ProxMorphism& pm, const FlatElem& f);

/// e ↦ the idempotent of α(e^♭).
DVMorphism restrict_morphism(const ProxMorphism& pm);

/// Sampled M1–M7. Exceptions thrown by the action count as failures of the
/// axiom being checked.
ProxReport check_prox_morphism_sample(const ProxMorphism& pm, const SampleConfig& config);

/// (σ₂ ⋆ σ₁)(e) = ⋁{σ₂σ₁(f) : f ≺ e}.
DVMorphism star_compose_dv(const DVMorphism& m2, const DVMorphism& m1);
/// Lift of the ⋆-composite of the restrictions. Both inputs must be lifted.
ProxMorphism star_compose_prox(const ProxMorphism& p2, const ProxMorphism& p1);

/// Sp: the de Vries power of a de Vries proximity.
DeVriesPower functor_Sp(const ProxRel& rel);
/// Id: the idempotents of a de Vries power with the restricted proximity,
/// realized on a fresh algebra with the same atoms (identified through τ).
ProxRel functor_Id(const DeVriesPower& s);
/// Sp on morphisms is lift_morphism; Id on morphisms is restrict_morphism.

/// τ_B(e) = e^♭ and its inverse.
FlatElem tau(const IdElem& e);
IdElem tau_inverse(const FlatElem& f);

/// η_S : S → Sp(Id(S)); the identity on step data.
ProxMorphism eta(const DeVriesPower& s);

/// τ is a bijection B → Id(Sp(B)) preserving the boolean operations and
/// preserving and reflecting ≺ (exhaustive).
ProxReport tau_iso_check(const ProxRel& rel);
/// η is a bijection preserving the ring and lattice operations and
/// preserving and reflecting ◁ (sampled).
ProxReport eta_iso_check(const DeVriesPower& s, const SampleConfig& config);

/// σ^♭ ∘ τ_A = τ_B ∘ σ over every element of A, and
/// Sp(Id(σ^♭)) ∘ η = η ∘ σ^♭ on sampled elements.
ProxReport naturality_check(const DVMorphism& m, const SampleConfig& config);

/// Id∘Sp and Sp∘Id round trips for one de Vries algebra, plus the identity
/// laws of both functors.
ProxReport equivalence_check(const ProxRel& rel, const SampleConfig& config);

}  // namespace specker
