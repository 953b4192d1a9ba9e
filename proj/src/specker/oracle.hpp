#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specker/boolalg.hpp"
#include "specker/flat.hpp"
#include "specker/perp.hpp"
#include "specker/scalar.hpp"

namespace specker {

/// An element seen pointwise: one scalar per atom.
struct PointFn {
  AlgebraPtr alg;
  std::vector<Scalar> values;  // indexed by atom
  friend bool operator==(const PointFn& a, const PointFn& b);
  /// `{p↦2, q↦0}`.
  std::string to_string() const;
};

PointFn stone_eval(const PerpElem& f);
PointFn stone_eval(const FlatElem& f);
/// Groups atoms by value. Inverse of stone_eval on ⊥ elements.
PerpElem from_point_fn(const PointFn& f);

/// Pointwise `add`, `mul`, `sub`, `neg`, `scalar`, `min`, `max`.
PointFn oracle_apply(std::string_view op, const std::vector<PointFn>& args,
                     const std::optional<Scalar>& scalar = std::nullopt);

/// The operations under test, replaceable for fault injection.
struct OperationTable {
  std::function<PerpElem(const PerpElem&, const PerpElem&)> perp_add = specker::perp_add;
  std::function<PerpElem(const PerpElem&, const PerpElem&)> perp_mul = specker::perp_mul;
  std::function<PerpElem(const PerpElem&, const PerpElem&)> perp_sub = specker::perp_sub;
  std::function<PerpElem(const Scalar&, const PerpElem&)> perp_scalar_mul = specker::perp_scalar_mul;
  std::function<PerpElem(const PerpElem&)> perp_neg = specker::perp_neg;
  std::function<PerpElem(const PerpElem&, const PerpElem&)> perp_meet = specker::perp_meet;
  std::function<PerpElem(const PerpElem&, const PerpElem&)> perp_join = specker::perp_join;
  std::function<bool(const PerpElem&, const PerpElem&)> perp_leq = specker::perp_leq;
  std::function<FlatElem(const PerpElem&)> alpha = specker::alpha;
  std::function<PerpElem(const FlatElem&)> alpha_inv = specker::alpha_inv;
  std::function<FlatElem(const FlatElem&, const FlatElem&)> flat_add = specker::flat_add;
  std::function<FlatElem(const FlatElem&, const FlatElem&)> flat_sub = specker::flat_sub;
  std::function<FlatElem(const Scalar&, const FlatElem&)> flat_scalar_pos = specker::flat_scalar_pos;
  std::function<FlatElem(const Scalar&, const FlatElem&)> flat_scalar_general = specker::flat_scalar_general;
  std::function<FlatElem(const FlatElem&, const FlatElem&)> flat_mul_nonneg = specker::flat_mul_nonneg;
  std::function<FlatElem(const FlatElem&, const FlatElem&)> flat_mul_general = specker::flat_mul_general;
  std::function<FlatElem(const FlatElem&)> flat_neg = specker::flat_neg;
  std::function<FlatElem(const FlatElem&, const FlatElem&)> flat_meet = specker::flat_meet;
  std::function<FlatElem(const FlatElem&, const FlatElem&)> flat_join = specker::flat_join;
  std::function<bool(const FlatElem&, const FlatElem&)> flat_leq = specker::flat_leq;
};

struct OracleRecord {
  std::string op;
  std::uint64_t seed = 0;
  std::size_t case_index = 0;
  bool ok = true;
  std::string witness;  // empty when ok
};

struct OracleReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<OracleRecord> records;  // one per (operation, case)

  bool passed() const;
  const OracleRecord* first_mismatch() const;
  /// One JSON object per record.
  std::string to_jsonl() const;
};

/// Runs every perp and flat operation on `samples` random cases and compares
/// with the pointwise model. Deterministic in `seed`.
OracleReport oracle_diff(const AlgebraPtr& alg, std::uint64_t seed, std::size_t samples, long coeff_bound,
                         const OperationTable& ops = {});

}  // namespace specker
