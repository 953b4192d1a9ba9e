#include "specker/flat.hpp"

#include <algorithm>

#include "specker/error.hpp"

namespace specker {

namespace {

bool is_subset(AtomMask a, AtomMask b) { return (a & ~b) == 0; }

void sort_unique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Scalar> merged_thresholds(const FlatElem& f, const FlatElem& g) {
  std::vector<Scalar> grid;
  for (const auto& s : f.steps()) grid.push_back(s.upto);
  for (const auto& s : g.steps()) grid.push_back(s.upto);
  sort_unique(grid);
  return grid;
}

}  // namespace

FlatElem FlatElem::from_steps(const AlgebraPtr& alg, std::vector<Step> steps) {
  if (steps.empty()) fail(ErrorCode::invalid_argument, "a step function needs at least one step");
  if (steps.front().idem != alg->full_mask()) {
    fail(ErrorCode::invalid_argument, "the first step of a decreasing function must be 1");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    require_in_domain(steps[i].upto, alg->domain());
    if ((steps[i].idem & ~alg->full_mask()) != 0) fail(ErrorCode::invalid_argument, "idempotent outside the algebra");
    if (steps[i].idem == 0) fail(ErrorCode::invalid_argument, "step idempotents must be nonzero");
    if (i > 0) {
      if (!(steps[i - 1].upto < steps[i].upto)) {
        fail(ErrorCode::invalid_argument, "step thresholds must strictly increase");
      }
      if (steps[i].idem == steps[i - 1].idem || !is_subset(steps[i].idem, steps[i - 1].idem)) {
        fail(ErrorCode::invalid_argument, "step idempotents must strictly decrease");
      }
    }
  }
  return FlatElem(alg, std::move(steps));
}

FlatElem FlatElem::from_decreasing(const AlgebraPtr& alg, std::vector<Step> steps) {
  if (steps.empty()) fail(ErrorCode::invalid_argument, "a step function needs at least one step");
  if (steps.front().idem != alg->full_mask()) {
    fail(ErrorCode::invalid_argument, "the first step of a decreasing function must be 1");
  }
  std::vector<Step> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) {
      if (!(steps[i - 1].upto < steps[i].upto)) fail(ErrorCode::invalid_argument, "step thresholds must strictly increase");
      if (!is_subset(steps[i].idem, steps[i - 1].idem)) fail(ErrorCode::invalid_argument, "step idempotents must decrease");
    }
    if (steps[i].idem == 0) break;
    if (!out.empty() && out.back().idem == steps[i].idem) {
      out.back().upto = steps[i].upto;
    } else {
      out.push_back(steps[i]);
    }
  }
  return from_steps(alg, std::move(out));
}

FlatElem FlatElem::constant(const AlgebraPtr& alg, const Scalar& a) {
  return from_steps(alg, {{a, alg->full_mask()}});
}

AtomMask FlatElem::value_mask(const Scalar& a) const {
  for (const auto& s : steps_) {
    if (a <= s.upto) return s.idem;
  }
  return 0;
}

IdElem FlatElem::operator()(const Scalar& a) const { return IdElem(alg_, value_mask(a)); }

bool operator==(const FlatElem& a, const FlatElem& b) {
  return a.alg_->same_as(*b.alg_) && a.steps_ == b.steps_;
}

FlatElem idem_embed_flat(const IdElem& e) {
  const AlgebraPtr& alg = e.algebra();
  return FlatElem::from_decreasing(alg, {{Scalar(0), alg->full_mask()}, {Scalar(1), e.bits()}});
}

FlatElem alpha(const PerpElem& f) {
  // Entries are stored by descending value; the upper-tail join accumulates
  // from the top value down.
  const auto& entries = f.entries();
  std::vector<Step> steps(entries.size());
  AtomMask tail = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    tail |= entries[k].idem;
    steps[entries.size() - 1 - k] = {entries[k].value, tail};
  }
  return FlatElem::from_steps(f.algebra(), std::move(steps));
}

PerpElem alpha_inv(const FlatElem& g) {
  const auto& steps = g.steps();
  std::vector<PerpEntry> entries;
  entries.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    AtomMask next = i + 1 < steps.size() ? steps[i + 1].idem : 0;
    entries.push_back({steps[i].upto, steps[i].idem & ~next});
  }
  return perp_normalize_masks(g.algebra(), std::move(entries));
}

FlatElem flat_from_rule(const AlgebraPtr& alg, std::vector<Scalar> candidates,
                        const std::function<AtomMask(const Scalar&)>& rule) {
  if (candidates.empty()) fail(ErrorCode::invalid_argument, "no candidate thresholds");
  sort_unique(candidates);
  check_internal(rule(candidates.front() - Scalar(1)) == alg->full_mask(),
                 "step rule is not 1 below its candidate thresholds");
  check_internal(rule(candidates.back() + Scalar(1)) == 0, "step rule is not 0 above its candidate thresholds");
  check_internal(rule(candidates.front()) == alg->full_mask(),
                 "step rule has a breakpoint below its smallest candidate");
  std::vector<Step> steps;
  steps.reserve(candidates.size());
  for (const auto& c : candidates) steps.push_back({c, rule(c)});
  return FlatElem::from_decreasing(alg, std::move(steps));
}

FlatElem flat_add_formula(const FlatElem& f, const FlatElem& g) {
  require_same(f.algebra(), g.algebra());
  // (f + g)(a) = ⋁ {f(b1) ∧ g(b2) : b1 + b2 ≥ a}; b1, b2 range over the
  // thresholds since each value class is represented by its largest point.
  std::vector<Scalar> candidates;
  for (const auto& x : f.steps()) {
    for (const auto& y : g.steps()) candidates.push_back(x.upto + y.upto);
  }
  return flat_from_rule(f.algebra(), std::move(candidates), [&](const Scalar& a) {
    AtomMask m = 0;
    for (const auto& x : f.steps()) {
      for (const auto& y : g.steps()) {
        if (x.upto + y.upto >= a) m |= x.idem & y.idem;
      }
    }
    return m;
  });
}

FlatElem flat_scalar_pos_formula(const Scalar& b, const FlatElem& f) {
  if (b.sign() <= 0) fail(ErrorCode::invalid_argument, "flat_scalar_pos needs a positive scalar");
  require_in_domain(b, f.algebra()->domain());
  // (bf)(a) = ⋁ {f(c) : bc ≥ a}
  std::vector<Scalar> candidates;
  for (const auto& x : f.steps()) candidates.push_back(b * x.upto);
  return flat_from_rule(f.algebra(), std::move(candidates), [&](const Scalar& a) {
    AtomMask m = 0;
    for (const auto& x : f.steps()) {
      if (b * x.upto >= a) m |= x.idem;
    }
    return m;
  });
}

FlatElem flat_mul_nonneg_formula(const FlatElem& f, const FlatElem& g) {
  require_same(f.algebra(), g.algebra());
  if (!flat_is_nonneg(f) || !flat_is_nonneg(g)) {
    fail(ErrorCode::invalid_argument, "flat_mul_nonneg needs nonnegative arguments");
  }
  // (fg)(a) = ⋁ {f(b1) ∧ g(b2) : b1, b2 ≥ 0, b1·b2 ≥ a}. Nonnegative
  // elements have all thresholds ≥ 0.
  std::vector<Scalar> candidates{Scalar(0)};
  for (const auto& x : f.steps()) {
    for (const auto& y : g.steps()) candidates.push_back(x.upto * y.upto);
  }
  return flat_from_rule(f.algebra(), std::move(candidates), [&](const Scalar& a) {
    AtomMask m = 0;
    for (const auto& x : f.steps()) {
      for (const auto& y : g.steps()) {
        if (x.upto * y.upto >= a) m |= x.idem & y.idem;
      }
    }
    return m;
  });
}

FlatElem flat_neg_formula(const FlatElem& f) {
  const AtomMask full = f.algebra()->full_mask();
  // (−f)(a) = ⋀ {¬f(b) : b > −a}
  std::vector<Scalar> candidates;
  for (const auto& x : f.steps()) candidates.push_back(-x.upto);
  return flat_from_rule(f.algebra(), std::move(candidates), [&](const Scalar& a) {
    AtomMask m = full;
    for (const auto& x : f.steps()) {
      if (x.upto > -a) m &= ~x.idem & full;
    }
    return m;
  });
}

FlatElem flat_add(const FlatElem& f, const FlatElem& g) {
  FlatElem r = flat_add_formula(f, g);
  check_internal(r == alpha(perp_add(alpha_inv(f), alpha_inv(g))), "flat_add disagrees with transport");
  return r;
}

FlatElem flat_scalar_pos(const Scalar& b, const FlatElem& f) {
  FlatElem r = flat_scalar_pos_formula(b, f);
  check_internal(r == alpha(perp_scalar_mul(b, alpha_inv(f))), "flat_scalar_pos disagrees with transport");
  return r;
}

FlatElem flat_mul_nonneg(const FlatElem& f, const FlatElem& g) {
  FlatElem r = flat_mul_nonneg_formula(f, g);
  check_internal(r == alpha(perp_mul(alpha_inv(f), alpha_inv(g))), "flat_mul_nonneg disagrees with transport");
  return r;
}

FlatElem flat_neg(const FlatElem& f) {
  FlatElem r = flat_neg_formula(f);
  check_internal(r == alpha(perp_neg(alpha_inv(f))), "flat_neg disagrees with transport");
  return r;
}

FlatElem flat_sub(const FlatElem& f, const FlatElem& g) { return flat_add(f, flat_neg(g)); }

FlatElem flat_mul_general(const FlatElem& f, const FlatElem& g) {
  require_same(f.algebra(), g.algebra());
  FlatElem r = alpha(perp_mul(alpha_inv(f), alpha_inv(g)));
  if (flat_is_nonneg(f) && flat_is_nonneg(g)) {
    check_internal(r == flat_mul_nonneg_formula(f, g), "general product disagrees with the nonnegative formula");
  }
  return r;
}

FlatElem flat_scalar_general(const Scalar& b, const FlatElem& f) {
  FlatElem r = alpha(perp_scalar_mul(b, alpha_inv(f)));
  if (b.sign() > 0) {
    check_internal(r == flat_scalar_pos_formula(b, f), "general scalar action disagrees with the positive formula");
  } else if (b == Scalar(-1)) {
    check_internal(r == flat_neg_formula(f), "scalar −1 disagrees with negation");
  }
  return r;
}

FlatElem flat_meet(const FlatElem& f, const FlatElem& g) {
  require_same(f.algebra(), g.algebra());
  return flat_from_rule(f.algebra(), merged_thresholds(f, g),
                        [&](const Scalar& a) { return f.value_mask(a) & g.value_mask(a); });
}

FlatElem flat_join(const FlatElem& f, const FlatElem& g) {
  require_same(f.algebra(), g.algebra());
  return flat_from_rule(f.algebra(), merged_thresholds(f, g),
                        [&](const Scalar& a) { return f.value_mask(a) | g.value_mask(a); });
}

bool flat_leq(const FlatElem& f, const FlatElem& g) {
  require_same(f.algebra(), g.algebra());
  for (const auto& a : merged_thresholds(f, g)) {
    if (!is_subset(f.value_mask(a), g.value_mask(a))) return false;
  }
  return true;
}

bool flat_is_nonneg(const FlatElem& f) { return flat_leq(FlatElem::constant(f.algebra(), Scalar(0)), f); }

namespace {

bool same_decomposition(const DecreasingDecomposition& a, const DecreasingDecomposition& b) {
  return a.base == b.base && a.terms == b.terms;
}

}  // namespace

PerpElem reconstruct_perp(const AlgebraPtr& alg, const DecreasingDecomposition& d) {
  PerpElem acc = PerpElem::constant(alg, d.base);
  for (const auto& [b, e] : d.terms) acc = perp_add(acc, perp_scalar_mul(b, idem_embed_perp(e)));
  return acc;
}

FlatElem reconstruct_flat(const AlgebraPtr& alg, const Scalar& base,
                          std::span<const std::pair<Scalar, IdElem>> terms) {
  FlatElem acc = FlatElem::constant(alg, base);
  for (const auto& [b, e] : terms) acc = flat_add(acc, flat_scalar_pos(b, idem_embed_flat(e)));
  return acc;
}

DecreasingDecomposition decreasing_decomposition(const FlatElem& f) {
  const auto& steps = f.steps();
  DecreasingDecomposition d{steps.front().upto, {}};
  for (std::size_t i = 1; i < steps.size(); ++i) {
    d.terms.emplace_back(steps[i].upto - steps[i - 1].upto, IdElem(f.algebra(), steps[i].idem));
  }
  check_internal(alpha(reconstruct_perp(f.algebra(), d)) == f, "decreasing decomposition does not reconstruct");
  return d;
}

DecreasingDecomposition orth_to_decreasing(const PerpElem& f) {
  // Ascending values a_0 < ... < a_n with orthogonal idempotents f_0..f_n.
  std::vector<PerpEntry> asc(f.entries().rbegin(), f.entries().rend());
  std::vector<AtomMask> tail(asc.size());
  AtomMask acc = 0;
  for (std::size_t i = asc.size(); i-- > 0;) {
    acc |= asc[i].idem;
    tail[i] = acc;
  }
  DecreasingDecomposition d{asc.front().value, {}};
  for (std::size_t i = 1; i < asc.size(); ++i) {
    d.terms.emplace_back(asc[i].value - asc[i - 1].value, IdElem(f.algebra(), tail[i]));
  }
  check_internal(same_decomposition(d, decreasing_decomposition(alpha(f))),
                 "orthogonal-to-decreasing conversion disagrees with α");
  return d;
}

CompatibleDecomposition compatible_decreasing(const FlatElem& s, const FlatElem& t) {
  require_same(s.algebra(), t.algebra());
  const AlgebraPtr& alg = s.algebra();
  CompatibleDecomposition out;
  out.grid = merged_thresholds(s, t);
  if (flat_is_nonneg(s) && flat_is_nonneg(t) && out.grid.front() != Scalar(0)) {
    out.grid.insert(out.grid.begin(), Scalar(0));
  }
  for (const auto& a : out.grid) {
    out.first.push_back(s(a));
    out.second.push_back(t(a));
  }

  const FlatElem lo = FlatElem::constant(alg, out.grid.front());
  const FlatElem hi = FlatElem::constant(alg, out.grid.back());
  check_internal(flat_leq(lo, s) && flat_leq(lo, t) && flat_leq(s, hi) && flat_leq(t, hi),
                 "compatible grid does not bound both elements");
  auto rebuild = [&](const std::vector<IdElem>& values) {
    std::vector<std::pair<Scalar, IdElem>> terms;
    for (std::size_t i = 1; i < out.grid.size(); ++i) terms.emplace_back(out.grid[i] - out.grid[i - 1], values[i]);
    return reconstruct_flat(alg, out.grid.front(), terms);
  };
  check_internal(rebuild(out.first) == s, "compatible decomposition does not reconstruct the first element");
  check_internal(rebuild(out.second) == t, "compatible decomposition does not reconstruct the second element");
  return out;
}

bool is_idempotent_order(const FlatElem& f) {
  const AlgebraPtr& alg = f.algebra();
  bool by_order = flat_meet(flat_scalar_pos(Scalar(2), f), FlatElem::constant(alg, Scalar(1))) == f;
  PerpElem p = alpha_inv(f);
  check_internal(by_order == (perp_mul(p, p) == p), "order-theoretic idempotent test disagrees with squaring");
  return by_order;
}

IdElem flat_to_idem(const FlatElem& f) {
  if (!is_idempotent_order(f)) fail(ErrorCode::invalid_argument, "element is not idempotent");
  IdElem e = f(Scalar(1));
  check_internal(idem_embed_flat(e) == f, "idempotent does not match its embedding");
  return e;
}

}  // namespace specker
