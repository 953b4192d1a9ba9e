#include "specker/boolalg.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "specker/error.hpp"

namespace specker {

AlgebraPtr Algebra::make(std::vector<std::string> atoms, Domain domain) {
  if (atoms.empty()) fail(ErrorCode::invalid_argument, "an algebra needs at least one atom");
  if (atoms.size() > max_atoms) {
    fail(ErrorCode::too_large, "at most " + std::to_string(max_atoms) + " atoms are supported");
  }
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    if (a.empty()) fail(ErrorCode::invalid_argument, "atom names must be nonempty");
    // "0" and "1" are reserved element literals.
    if (a == "0" || a == "1") fail(ErrorCode::invalid_argument, "atom name '" + a + "' is reserved");
    if (!seen.insert(a).second) fail(ErrorCode::invalid_argument, "duplicate atom name '" + a + "'");
  }
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->atoms_ = std::move(atoms);
  alg->domain_ = domain;
  return alg;
}

AlgebraPtr Algebra::make_free(int generators, int bound, Domain domain) {
  bound = std::min(bound, max_free_generators);
  if (generators < 1 || generators > bound) {
    fail(ErrorCode::invalid_argument,
         "free generator count must be in [1," + std::to_string(bound) + "]");
  }
  const std::size_t k = std::size_t{1} << generators;
  std::vector<std::string> atoms;
  atoms.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::string name = "m";
    for (int i = 0; i < generators; ++i) name += ((j >> i) & 1) ? '1' : '0';
    atoms.push_back(std::move(name));
  }
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->atoms_ = std::move(atoms);
  alg->domain_ = domain;
  for (int i = 0; i < generators; ++i) {
    AtomMask g = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((j >> i) & 1) g |= AtomMask{1} << j;
    }
    alg->generators_.emplace_back("g_" + std::to_string(i), g);
  }
  return alg;
}

AtomMask Algebra::full_mask() const {
  return atoms_.size() == 64 ? ~AtomMask{0} : ((AtomMask{1} << atoms_.size()) - 1);
}

std::optional<std::size_t> Algebra::atom_index(std::string_view name) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

bool Algebra::same_as(const Algebra& other) const {
  return this == &other || (atoms_ == other.atoms_ && domain_ == other.domain_);
}

void require_same(const Algebra& a, const Algebra& b) {
  if (!a.same_as(b)) fail(ErrorCode::algebra_mismatch, "operands belong to different algebras");
}

IdElem::IdElem(AlgebraPtr alg, AtomMask bits) : alg_(std::move(alg)), bits_(bits) {
  if (!alg_) fail(ErrorCode::invalid_argument, "null algebra");
  if ((bits_ & ~alg_->full_mask()) != 0) {
    fail(ErrorCode::invalid_argument, "subset mentions atoms outside the algebra");
  }
}

IdElem IdElem::one(AlgebraPtr alg) {
  AtomMask full = alg->full_mask();
  return IdElem(std::move(alg), full);
}

IdElem IdElem::atom(AlgebraPtr alg, std::string_view name) {
  auto idx = alg->atom_index(name);
  if (!idx) fail(ErrorCode::unbound_name, "unknown atom '" + std::string(name) + "'");
  return IdElem(std::move(alg), AtomMask{1} << *idx);
}

IdElem IdElem::of_atoms(AlgebraPtr alg, std::span<const std::string> names) {
  AtomMask bits = 0;
  for (const auto& n : names) {
    auto idx = alg->atom_index(n);
    if (!idx) fail(ErrorCode::unbound_name, "unknown atom '" + n + "'");
    bits |= AtomMask{1} << *idx;
  }
  return IdElem(std::move(alg), bits);
}

int IdElem::size() const { return std::popcount(bits_); }

IdElem IdElem::operator~() const { return IdElem(alg_, ~bits_ & alg_->full_mask()); }

IdElem operator&(const IdElem& a, const IdElem& b) {
  require_same(a.alg_, b.alg_);
  return IdElem(a.alg_, a.bits_ & b.bits_);
}

IdElem operator|(const IdElem& a, const IdElem& b) {
  require_same(a.alg_, b.alg_);
  return IdElem(a.alg_, a.bits_ | b.bits_);
}

bool IdElem::leq(const IdElem& other) const {
  require_same(alg_, other.alg_);
  return (bits_ & ~other.bits_) == 0;
}

bool operator==(const IdElem& a, const IdElem& b) {
  return a.bits_ == b.bits_ && a.alg_->same_as(*b.alg_);
}

std::string IdElem::to_string() const {
  if (bits_ == 0) return "0";
  if (is_one()) return "1";
  std::string out = "[";
  bool first = true;
  for (std::size_t i = 0; i < alg_->atom_count(); ++i) {
    if ((bits_ >> i) & 1) {
      if (!first) out += ',';
      out += alg_->atoms()[i];
      first = false;
    }
  }
  return out + "]";
}

IdElem ba_apply(const AlgebraPtr& alg, Connective c, std::span<const IdElem> operands) {
  for (const auto& op : operands) require_same(*alg, *op.algebra());
  auto arity = [&](std::size_t n) {
    if (operands.size() != n) {
      fail(ErrorCode::invalid_argument, "connective expects " + std::to_string(n) + " operands, got " +
                                            std::to_string(operands.size()));
    }
  };
  switch (c) {
    case Connective::not_:
      arity(1);
      return ~operands[0];
    case Connective::meet:
      arity(2);
      return IdElem(alg, operands[0].bits() & operands[1].bits());
    case Connective::join:
      arity(2);
      return IdElem(alg, operands[0].bits() | operands[1].bits());
    case Connective::big_join: {
      AtomMask m = 0;
      for (const auto& op : operands) m |= op.bits();
      return IdElem(alg, m);
    }
    case Connective::big_meet: {
      AtomMask m = alg->full_mask();
      for (const auto& op : operands) m &= op.bits();
      return IdElem(alg, m);
    }
  }
  fail(ErrorCode::invalid_argument, "unknown connective");
}

std::vector<IdElem> all_elements(const AlgebraPtr& alg) {
  if (alg->atom_count() > 20) fail(ErrorCode::too_large, "algebra too large to enumerate");
  std::vector<IdElem> out;
  out.reserve(alg->element_count());
  for (AtomMask m = 0; m < alg->element_count(); ++m) out.emplace_back(alg, m);
  return out;
}

bool witness_order_less(AtomMask a, AtomMask b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on ascending atom index lists: the first differing bit
  // decides, and the set containing the lower atom comes first.
  AtomMask diff = a ^ b;
  if (diff == 0) return false;
  AtomMask low = diff & (~diff + 1);
  return (a & low) != 0;
}

}  // namespace specker
