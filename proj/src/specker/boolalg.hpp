#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specker/scalar.hpp"

namespace specker {

/// Bit i set means atom i belongs to the subset.
using AtomMask = std::uint64_t;

inline constexpr std::size_t max_atoms = 64;
inline constexpr int default_free_bound = 4;
inline constexpr int max_free_generators = 6;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/**
 * A finite powerset boolean algebra over an ordered list of named atoms.
 * Free algebras on n generators are realized as the powerset of the 2^n
 * minterms, with generator g_i the set of minterms where variable i is true.
 */
class Algebra {
 public:
  static AlgebraPtr make(std::vector<std::string> atoms, Domain domain = Domain::integer);
  static AlgebraPtr make_free(int generators, int bound = default_free_bound,
                              Domain domain = Domain::integer);

  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<std::pair<std::string, AtomMask>>& generators() const { return generators_; }
  Domain domain() const { return domain_; }

  AtomMask full_mask() const;
  /// Number of elements, 2^k. Only meaningful for k < 64.
  std::uint64_t element_count() const { return std::uint64_t{1} << atoms_.size(); }
  std::optional<std::size_t> atom_index(std::string_view name) const;

  /// Same atom list and domain.
  bool same_as(const Algebra& other) const;

 private:
  Algebra() = default;
  std::vector<std::string> atoms_;
  std::vector<std::pair<std::string, AtomMask>> generators_;
  Domain domain_ = Domain::integer;
};

/// Throws Error{algebra_mismatch} unless the algebras coincide.
void require_same(const Algebra& a, const Algebra& b);
inline void require_same(const AlgebraPtr& a, const AlgebraPtr& b) { require_same(*a, *b); }

/// An element of a finite boolean algebra: a subset of its atoms.
class IdElem {
 public:
  IdElem(AlgebraPtr alg, AtomMask bits);

  static IdElem zero(AlgebraPtr alg) { return IdElem(std::move(alg), 0); }
  static IdElem one(AlgebraPtr alg);
  static IdElem atom(AlgebraPtr alg, std::string_view name);
  static IdElem of_atoms(AlgebraPtr alg, std::span<const std::string> names);

  const AlgebraPtr& algebra() const { return alg_; }
  AtomMask bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == alg_->full_mask(); }
  int size() const;

  IdElem operator~() const;
  friend IdElem operator&(const IdElem& a, const IdElem& b);
  friend IdElem operator|(const IdElem& a, const IdElem& b);
  /// Order of the algebra (subset inclusion).
  bool leq(const IdElem& other) const;

  friend bool operator==(const IdElem& a, const IdElem& b);

  /// `0`, `1`, or `[a,b]`.
  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  AtomMask bits_;
};

enum class Connective { not_, meet, join, big_join, big_meet };

/// Applies a connective; big_join([]) = 0 and big_meet([]) = 1. The empty
/// big_join/big_meet needs the algebra, hence the explicit parameter.
IdElem ba_apply(const AlgebraPtr& alg, Connective c, std::span<const IdElem> operands);

/// Every element of the algebra in mask order. Requires k <= 20.
std::vector<IdElem> all_elements(const AlgebraPtr& alg);

/// Ordering used for deterministic witness search: smaller subsets first,
/// then lexicographic on sorted atom indices.
bool witness_order_less(AtomMask a, AtomMask b);

}  // namespace specker
