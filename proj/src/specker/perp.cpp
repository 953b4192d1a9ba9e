#include "specker/perp.hpp"

#include <algorithm>
#include <map>

#include "specker/error.hpp"

namespace specker {

namespace {

std::string mask_text(const AlgebraPtr& alg, AtomMask m) { return IdElem(alg, m).to_string(); }

void require_same_elem(const PerpElem& f, const PerpElem& g) { require_same(f.algebra(), g.algebra()); }

// Collects (value, idempotent) contributions, joining idempotents that land on
// the same value. Contributions from the operation formulas are disjoint
// across distinct values by construction; perp_normalize_masks verifies it.
class ValueJoin {
 public:
  void add(const Scalar& v, AtomMask m) {
    if (m != 0) acc_[v] |= m;
  }
  std::vector<PerpEntry> take() {
    std::vector<PerpEntry> out;
    out.reserve(acc_.size());
    for (auto& [v, m] : acc_) out.push_back({v, m});
    return out;
  }

 private:
  std::map<Scalar, AtomMask> acc_;
};

}  // namespace

IdElem PerpElem::at(const Scalar& a) const {
  for (const auto& e : entries_) {
    if (e.value == a) return IdElem(alg_, e.idem);
  }
  return IdElem::zero(alg_);
}

PerpElem PerpElem::constant(const AlgebraPtr& alg, const Scalar& a) {
  return perp_normalize_masks(alg, {{a, alg->full_mask()}});
}

bool operator==(const PerpElem& a, const PerpElem& b) {
  return a.alg_->same_as(*b.alg_) && a.entries_ == b.entries_;
}

PerpElem perp_normalize_masks(const AlgebraPtr& alg, std::vector<PerpEntry> entries) {
  const AtomMask full = alg->full_mask();
  std::map<Scalar, AtomMask, std::greater<>> merged;
  for (auto& e : entries) {
    require_in_domain(e.value, alg->domain());
    if ((e.idem & ~full) != 0) fail(ErrorCode::invalid_argument, "idempotent outside the algebra");
    if (e.idem == 0) continue;
    merged[e.value] |= e.idem;
  }
  AtomMask covered = 0;
  for (const auto& [v, m] : merged) {
    if ((covered & m) != 0) {
      fail(ErrorCode::invalid_argument,
           "not an orthogonal family: idempotent " + mask_text(alg, m) + " at value " + v.to_string() +
               " overlaps another value class");
    }
    covered |= m;
  }
  if (covered != full) merged[Scalar(0)] |= full & ~covered;

  std::vector<PerpEntry> out;
  out.reserve(merged.size());
  for (auto& [v, m] : merged) out.push_back({v, m});
  return PerpElem(alg, std::move(out));
}

PerpElem perp_normalize(const AlgebraPtr& alg, std::span<const std::pair<Scalar, IdElem>> entries) {
  std::vector<PerpEntry> raw;
  raw.reserve(entries.size());
  for (const auto& [v, e] : entries) {
    require_same(*alg, *e.algebra());
    raw.push_back({v, e.bits()});
  }
  return perp_normalize_masks(alg, std::move(raw));
}

PerpElem perp_normalize(const AlgebraPtr& alg, std::initializer_list<std::pair<Scalar, IdElem>> entries) {
  return perp_normalize(alg, std::span<const std::pair<Scalar, IdElem>>(entries.begin(), entries.size()));
}

PerpElem perp_add(const PerpElem& f, const PerpElem& g) {
  require_same_elem(f, g);
  // (f + g)(a) = ⋁ {f(b) ∧ g(c) : b + c = a}
  ValueJoin acc;
  for (const auto& x : f.entries()) {
    for (const auto& y : g.entries()) acc.add(x.value + y.value, x.idem & y.idem);
  }
  return perp_normalize_masks(f.algebra(), acc.take());
}

PerpElem perp_mul(const PerpElem& f, const PerpElem& g) {
  require_same_elem(f, g);
  // (fg)(a) = ⋁ {f(b) ∧ g(c) : bc = a}
  ValueJoin acc;
  for (const auto& x : f.entries()) {
    for (const auto& y : g.entries()) acc.add(x.value * y.value, x.idem & y.idem);
  }
  return perp_normalize_masks(f.algebra(), acc.take());
}

PerpElem perp_scalar_mul(const Scalar& b, const PerpElem& f) {
  require_in_domain(b, f.algebra()->domain());
  // (bf)(a) = ⋁ {f(c) : bc = a}
  ValueJoin acc;
  for (const auto& x : f.entries()) acc.add(b * x.value, x.idem);
  return perp_normalize_masks(f.algebra(), acc.take());
}

PerpElem perp_neg(const PerpElem& f) { return perp_scalar_mul(Scalar(-1), f); }

PerpElem perp_sub(const PerpElem& f, const PerpElem& g) { return perp_add(f, perp_neg(g)); }

PerpElem idem_embed_perp(const IdElem& e) {
  return perp_normalize_masks(e.algebra(), {{Scalar(1), e.bits()}, {Scalar(0), (~e).bits()}});
}

bool perp_is_nonneg(const PerpElem& f) {
  return std::all_of(f.entries().begin(), f.entries().end(),
                     [](const PerpEntry& e) { return e.value.sign() >= 0; });
}

bool perp_leq(const PerpElem& f, const PerpElem& g) {
  require_same_elem(f, g);
  return perp_is_nonneg(perp_sub(g, f));
}

namespace {

template <class Pick>
PerpElem refined(const PerpElem& f, const PerpElem& g, Pick pick) {
  require_same_elem(f, g);
  std::vector<PerpEntry> cells;
  for (const auto& x : f.entries()) {
    for (const auto& y : g.entries()) {
      AtomMask cell = x.idem & y.idem;
      if (cell != 0) cells.push_back({pick(x.value, y.value), cell});
    }
  }
  return perp_normalize_masks(f.algebra(), std::move(cells));
}

template <class Pick>
PerpElem by_formula(const PerpElem& f, const PerpElem& g, Pick pick) {
  require_same_elem(f, g);
  // (f ∘ g)(a) = ⋁ {f(b) ∧ g(c) : pick(b, c) = a}, for each candidate value a.
  std::vector<Scalar> candidates;
  for (const auto& x : f.entries()) candidates.push_back(x.value);
  for (const auto& y : g.entries()) candidates.push_back(y.value);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<PerpEntry> out;
  for (const auto& a : candidates) {
    AtomMask m = 0;
    for (const auto& x : f.entries()) {
      for (const auto& y : g.entries()) {
        if (pick(x.value, y.value) == a) m |= x.idem & y.idem;
      }
    }
    out.push_back({a, m});
  }
  return perp_normalize_masks(f.algebra(), std::move(out));
}

Scalar pick_min(const Scalar& a, const Scalar& b) { return min(a, b); }
Scalar pick_max(const Scalar& a, const Scalar& b) { return max(a, b); }

}  // namespace

PerpElem perp_meet_refined(const PerpElem& f, const PerpElem& g) { return refined(f, g, pick_min); }
PerpElem perp_join_refined(const PerpElem& f, const PerpElem& g) { return refined(f, g, pick_max); }
PerpElem perp_meet_formula(const PerpElem& f, const PerpElem& g) { return by_formula(f, g, pick_min); }
PerpElem perp_join_formula(const PerpElem& f, const PerpElem& g) { return by_formula(f, g, pick_max); }

PerpElem perp_meet(const PerpElem& f, const PerpElem& g) {
  PerpElem r = perp_meet_refined(f, g);
  check_internal(r == perp_meet_formula(f, g), "perp meet: refinement and formula disagree");
  return r;
}

PerpElem perp_join(const PerpElem& f, const PerpElem& g) {
  PerpElem r = perp_join_refined(f, g);
  check_internal(r == perp_join_formula(f, g), "perp join: refinement and formula disagree");
  return r;
}

IdElem perp_support(const PerpElem& g) {
  AtomMask m = 0;
  for (const auto& e : g.entries()) {
    if (e.value.sign() != 0) m |= e.idem;
  }
  return IdElem(g.algebra(), m);
}

IdElem annihilator_idempotent(std::span<const PerpElem> gens) {
  if (gens.empty()) fail(ErrorCode::invalid_argument, "annihilator of an empty generator list");
  const AlgebraPtr& alg = gens.front().algebra();
  AtomMask supp = 0;
  for (const auto& g : gens) {
    require_same(alg, g.algebra());
    supp |= perp_support(g).bits();
  }
  IdElem e(alg, ~supp & alg->full_mask());

  // e·g_i = 0 for every generator.
  const PerpElem e_perp = idem_embed_perp(e);
  const PerpElem zero = PerpElem::constant(alg, Scalar(0));
  for (const auto& g : gens) check_internal(perp_mul(e_perp, g) == zero, "annihilator does not kill a generator");
  // Maximality: any atom outside e fails to annihilate some generator, so any h
  // with h·g_i = 0 has supp(h) ≤ e and therefore h = e·h.
  for (std::size_t i = 0; i < alg->atom_count(); ++i) {
    const AtomMask x = AtomMask{1} << i;
    if ((e.bits() & x) != 0) continue;
    const PerpElem x_perp = idem_embed_perp(IdElem(alg, x));
    bool kills_all = std::all_of(gens.begin(), gens.end(),
                                 [&](const PerpElem& g) { return perp_mul(x_perp, g) == zero; });
    check_internal(!kills_all, "annihilator idempotent is not maximal");
  }
  return e;
}

}  // namespace specker
