#include "specker/morphisms.hpp"

#include <algorithm>

#include "specker/error.hpp"
#include "specker/text.hpp"

namespace specker {

namespace {

std::string show(const AlgebraPtr& alg, AtomMask m) { return IdElem(alg, m).to_string(); }

void require_table_size(const AlgebraPtr& alg) {
  if (alg->atom_count() > table_atom_bound) {
    fail(ErrorCode::too_large, "morphism tables are limited to " + std::to_string(table_atom_bound) + " atoms");
  }
}

void require_exhaustive(const AlgebraPtr& alg) {
  if (alg->atom_count() > exhaustive_atom_bound) {
    fail(ErrorCode::too_large, "exhaustive morphism checks are limited to " +
                                   std::to_string(exhaustive_atom_bound) + " atoms");
  }
}

// Elements f with f ≺ e. Under ≤ these are the subsets of e.
std::vector<AtomMask> below(const ProxRel& rel, AtomMask e) {
  std::vector<AtomMask> out;
  if (rel.is_leq_kind()) {
    for (AtomMask f = e;; f = (f - 1) & e) {
      out.push_back(f);
      if (f == 0) break;
    }
    return out;
  }
  for (AtomMask f = 0; f < rel.algebra()->element_count(); ++f) {
    if (rel.related(f, e)) out.push_back(f);
  }
  return out;
}

FlatElem relabel(const FlatElem& f, const AlgebraPtr& alg) {
  require_same(f.algebra(), alg);
  return FlatElem::from_steps(alg, f.steps());
}

}  // namespace

DVMorphism DVMorphism::from_table(ProxRel source, ProxRel target, std::vector<AtomMask> table) {
  require_table_size(source.algebra());
  if (table.size() != source.algebra()->element_count()) {
    fail(ErrorCode::invalid_argument, "morphism table must cover every source element");
  }
  const AtomMask full = target.algebra()->full_mask();
  for (AtomMask m : table) {
    if ((m & ~full) != 0) fail(ErrorCode::invalid_argument, "morphism table value outside the target algebra");
  }
  return DVMorphism(std::move(source), std::move(target), std::move(table));
}

DVMorphism DVMorphism::identity(const ProxRel& rel) {
  require_table_size(rel.algebra());
  std::vector<AtomMask> table(rel.algebra()->element_count());
  for (AtomMask e = 0; e < table.size(); ++e) table[e] = e;
  return DVMorphism(rel, rel, std::move(table));
}

IdElem DVMorphism::operator()(const IdElem& e) const {
  require_same(source_.algebra(), e.algebra());
  return IdElem(target_.algebra(), table_[e.bits()]);
}

bool operator==(const DVMorphism& a, const DVMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
}

ProxReport check_dv_morphism(const DVMorphism& m) {
  const AlgebraPtr& a = m.source().algebra();
  const AlgebraPtr& b = m.target().algebra();
  require_exhaustive(a);
  require_exhaustive(b);
  const AtomMask n = a->element_count();
  const AtomMask fa = a->full_mask();
  const AtomMask fb = b->full_mask();
  ProxReport report;
  report.subject = "de Vries morphism";

  auto& m1 = report.add("M1");
  m1.checked = 1;
  if (m.apply(0) != 0) m1.fail_with("σ(0) = " + show(b, m.apply(0)), {0});

  auto& m2 = report.add("M2");
  for (AtomMask e = 0; e < n && m2.passed; ++e) {
    for (AtomMask f = 0; f < n; ++f) {
      ++m2.checked;
      if (m.apply(e & f) != (m.apply(e) & m.apply(f))) {
        m2.fail_with("σ(" + show(a, e) + " ∧ " + show(a, f) + ") = " + show(b, m.apply(e & f)) + " but σ(" +
                         show(a, e) + ") ∧ σ(" + show(a, f) + ") = " + show(b, m.apply(e) & m.apply(f)),
                     {e, f});
        break;
      }
    }
  }

  auto& m3 = report.add("M3");
  for (AtomMask e = 0; e < n && m3.passed; ++e) {
    for (AtomMask f = 0; f < n; ++f) {
      if (!m.source().related(e, f)) continue;
      ++m3.checked;
      AtomMask lhs = ~m.apply(~e & fa) & fb;
      if (!m.target().related(lhs, m.apply(f))) {
        m3.fail_with(show(a, e) + " ≺ " + show(a, f) + " but ¬σ(¬" + show(a, e) + ") = " + show(b, lhs) + " ⊀ σ(" +
                         show(a, f) + ") = " + show(b, m.apply(f)),
                     {e, f});
        break;
      }
    }
  }

  auto& m4 = report.add("M4");
  for (AtomMask f = 0; f < n; ++f) {
    ++m4.checked;
    AtomMask join = 0;
    for (AtomMask e : below(m.source(), f)) join |= m.apply(e);
    if (join != m.apply(f)) {
      m4.fail_with("σ(" + show(a, f) + ") = " + show(b, m.apply(f)) + " but ⋁{σ(e) : e ≺ " + show(a, f) + "} = " +
                       show(b, join),
                   {f});
      break;
    }
  }
  return report;
}

std::vector<DVMorphism> enumerate_boolean_homs(const AlgebraPtr& a, const AlgebraPtr& b) {
  require_table_size(a);
  const std::size_t ka = a->atom_count();
  const std::size_t kb = b->atom_count();
  // Dual maps atoms(b) → atoms(a), counted in base ka.
  std::vector<std::size_t> dual(kb, 0);
  std::vector<DVMorphism> out;
  const ProxRel src = ProxRel::leq(a);
  const ProxRel dst = ProxRel::leq(b);
  for (;;) {
    std::vector<AtomMask> table(a->element_count(), 0);
    for (AtomMask e = 0; e < table.size(); ++e) {
      for (std::size_t y = 0; y < kb; ++y) {
        if ((e >> dual[y]) & 1) table[e] |= AtomMask{1} << y;
      }
    }
    out.push_back(DVMorphism::from_table(src, dst, std::move(table)));
    std::size_t i = kb;
    while (i > 0 && ++dual[i - 1] == ka) dual[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

ProxMorphism lift_morphism(const DVMorphism& m) {
  ProxReport r = check_dv_morphism(m);
  if (!r.passed()) fail(ErrorCode::invalid_argument, "cannot lift: " + r.summary());
  const AlgebraPtr target = m.target().algebra();
  FlatAction action = [m, target](const FlatElem& f) {
    require_same(f.algebra(), m.source().algebra());
    std::vector<Step> steps;
    steps.reserve(f.steps().size());
    for (const auto& s : f.steps()) steps.push_back({s.upto, m.apply(s.idem)});
    return FlatElem::from_decreasing(target, std::move(steps));
  };
  return ProxMorphism{DeVriesPower{m.source()}, DeVriesPower{m.target()}, std::move(action), m};
}

FlatElem apply_via_decomposition(const DVMorphism& m, const FlatElem& f) {
  require_same(f.algebra(), m.source().algebra());
  DecreasingDecomposition d = decreasing_decomposition(f);
  std::vector<std::pair<Scalar, IdElem>> terms;
  terms.reserve(d.terms.size());
  for (const auto& [b, e] : d.terms) terms.emplace_back(b, m(e));
  return reconstruct_flat(m.target().algebra(), d.base, terms);
}

FlatElem apply_prox_morphism(const ProxMorphism& pm, const FlatElem& f) {
  require_same(f.algebra(), pm.source.algebra());
  FlatElem r = pm.action(f);
  require_same(r.algebra(), pm.target.algebra());
  if (pm.base) {
    check_internal(r == apply_via_decomposition(*pm.base, f), "lifted action disagrees with the decomposition route");
  }
  return r;
}

DVMorphism restrict_morphism(const ProxMorphism& pm) {
  const AlgebraPtr& a = pm.source.algebra();
  require_table_size(a);
  std::vector<AtomMask> table(a->element_count());
  for (AtomMask e = 0; e < table.size(); ++e) {
    table[e] = flat_to_idem(apply_prox_morphism(pm, idem_embed_flat(IdElem(a, e)))).bits();
  }
  return DVMorphism::from_table(pm.source.base, pm.target.base, std::move(table));
}

ProxReport check_prox_morphism_sample(const ProxMorphism& pm, const SampleConfig& config) {
  const AlgebraPtr& a = pm.source.algebra();
  const AlgebraPtr& b = pm.target.algebra();
  const long k = config.coeff_bound;
  Rng rng(config.seed);
  ProxReport report;
  report.subject = "proximity morphism";
  report.samples = config.samples;
  report.seed = config.seed;
  auto apply = [&](const FlatElem& f) { return apply_prox_morphism(pm, f); };
  // Runs one check; an exception from the action is a failure with the inputs as witness.
  auto guarded = [](AxiomOutcome& o, const std::string& witness, auto&& body) {
    ++o.checked;
    try {
      if (!body()) o.fail_with(witness);
    } catch (const Error& e) {
      o.fail_with(witness + " (" + e.what() + ")");
    }
  };

  auto& m1 = report.add("M1");
  guarded(m1, "s = 0", [&] { return apply(FlatElem::constant(a, Scalar(0))) == FlatElem::constant(b, Scalar(0)); });

  auto& m2 = report.add("M2");
  auto& m3 = report.add("M3");
  auto& m4 = report.add("M4");
  auto& m5 = report.add("M5");
  auto& m6 = report.add("M6");
  auto& m7 = report.add("M7");

  // M4 targets: the idempotents e^♭ of the source and their lower sets.
  const bool m4_exact = a->atom_count() <= exhaustive_atom_bound;

  for (std::size_t i = 0; i < config.samples; ++i) {
    FlatElem s = random_flat(a, rng, k);
    FlatElem t = random_flat(a, rng, k);
    const std::string st = "s=" + to_text(s) + " t=" + to_text(t);

    guarded(m2, st, [&] { return apply(flat_meet(s, t)) == flat_meet(apply(s), apply(t)); });

    FlatElem succ = random_successor(pm.source.base, s, rng, k);
    guarded(m3, "s=" + to_text(s) + " t=" + to_text(succ),
            [&] { return pm.target.related(flat_neg(apply(flat_neg(s))), apply(succ)); });

    // Upper bound half of M4: s ◁ t ⟹ α(s) ≤ α(t).
    guarded(m4, "s=" + to_text(s) + " t=" + to_text(succ), [&] { return flat_leq(apply(s), apply(succ)); });
    // Join half: α(t) = a_0 + Σ b_i ⋁{α(e^♭) : e ≺ e_i} over the decreasing decomposition of t.
    if (m4_exact) {
      guarded(m4, "t=" + to_text(t), [&] {
        DecreasingDecomposition d = decreasing_decomposition(t);
        FlatElem rhs = FlatElem::constant(b, d.base);
        for (const auto& [coef, e] : d.terms) {
          FlatElem join = FlatElem::constant(b, Scalar(0));
          for (AtomMask f : below(pm.source.base, e.bits())) {
            join = flat_join(join, apply(idem_embed_flat(IdElem(a, f))));
          }
          rhs = flat_add(rhs, flat_scalar_pos(coef, join));
        }
        return apply(t) == rhs;
      });
    }

    Scalar c = random_scalar(rng, k, a->domain());
    const std::string sc = "s=" + to_text(s) + " a=" + c.to_string();
    guarded(m5, sc, [&] {
      return apply(flat_add(s, FlatElem::constant(a, c))) == flat_add(apply(s), FlatElem::constant(b, c));
    });
    Scalar pos = c.sign() < 0 ? -c : c;
    guarded(m6, "s=" + to_text(s) + " a=" + pos.to_string(),
            [&] { return apply(flat_scalar_general(pos, s)) == flat_scalar_general(pos, apply(s)); });
    guarded(m7, sc, [&] {
      return apply(flat_join(s, FlatElem::constant(a, c))) == flat_join(apply(s), FlatElem::constant(b, c));
    });
  }
  return report;
}

DVMorphism star_compose_dv(const DVMorphism& m2, const DVMorphism& m1) {
  if (!m1.target().algebra()->same_as(*m2.source().algebra())) {
    fail(ErrorCode::algebra_mismatch, "⋆: target algebra of the first morphism differs from the source of the second");
  }
  if (!(m1.target() == m2.source())) fail(ErrorCode::invalid_argument, "⋆: the middle proximities differ");
  const AlgebraPtr& a = m1.source().algebra();
  std::vector<AtomMask> table(a->element_count());
  for (AtomMask e = 0; e < table.size(); ++e) {
    AtomMask join = 0;
    for (AtomMask f : below(m1.source(), e)) join |= m2.apply(m1.apply(f));
    table[e] = join;
  }
  return DVMorphism::from_table(m1.source(), m2.target(), std::move(table));
}

ProxMorphism star_compose_prox(const ProxMorphism& p2, const ProxMorphism& p1) {
  if (!p1.base || !p2.base) fail(ErrorCode::invalid_argument, "⋆ on elements needs lifted morphisms");
  return lift_morphism(star_compose_dv(*p2.base, *p1.base));
}

DeVriesPower functor_Sp(const ProxRel& rel) {
  if (!rel.is_devries()) fail(ErrorCode::not_devries, "Sp needs a de Vries proximity");
  return DeVriesPower{rel};
}

ProxRel functor_Id(const DeVriesPower& s) {
  const AlgebraPtr& alg = s.algebra();
  AlgebraPtr idem = Algebra::make(alg->atoms(), alg->domain());
  if (s.base.is_leq_kind()) {
    // ≤ lifts to the pointwise order, whose restriction is again ≤.
    return ProxRel::leq(idem);
  }
  ProxRel restricted = restrict_lift(s.base);
  std::vector<std::uint64_t> rows(alg->element_count(), 0);
  for (const auto& [e, f] : restricted.pairs()) rows[e] |= std::uint64_t{1} << f;
  return ProxRel::from_rows(idem, std::move(rows));
}

FlatElem tau(const IdElem& e) { return idem_embed_flat(e); }

IdElem tau_inverse(const FlatElem& f) { return flat_to_idem(f); }

ProxMorphism eta(const DeVriesPower& s) {
  DeVriesPower target = functor_Sp(functor_Id(s));
  AlgebraPtr alg = target.algebra();
  FlatAction action = [alg](const FlatElem& f) { return relabel(f, alg); };
  return ProxMorphism{s, std::move(target), std::move(action), std::nullopt};
}

ProxReport tau_iso_check(const ProxRel& rel) {
  const AlgebraPtr& alg = rel.algebra();
  require_exhaustive(alg);
  const AtomMask n = alg->element_count();
  ProxReport report;
  report.subject = "τ";
  std::vector<FlatElem> image;
  for (AtomMask e = 0; e < n; ++e) image.push_back(tau(IdElem(alg, e)));

  auto& bij = report.add("bijective");
  for (AtomMask e = 0; e < n; ++e) {
    ++bij.checked;
    if (!is_idempotent_order(image[e]) || tau_inverse(image[e]).bits() != e) {
      bij.fail_with("e=" + show(alg, e), {e});
    }
    for (AtomMask f = 0; f < e; ++f) {
      if (image[e] == image[f]) bij.fail_with("τ(" + show(alg, e) + ") = τ(" + show(alg, f) + ")", {e, f});
    }
  }

  auto& ops = report.add("operations");
  const FlatElem one = FlatElem::constant(alg, Scalar(1));
  for (AtomMask e = 0; e < n; ++e) {
    ++ops.checked;
    if (!(flat_sub(one, image[e]) == image[~e & alg->full_mask()])) ops.fail_with("¬" + show(alg, e), {e});
    for (AtomMask f = 0; f < n; ++f) {
      ops.checked += 3;
      if (!(flat_meet(image[e], image[f]) == image[e & f]) || !(flat_join(image[e], image[f]) == image[e | f]) ||
          !(flat_mul_nonneg(image[e], image[f]) == image[e & f])) {
        ops.fail_with("e=" + show(alg, e) + " f=" + show(alg, f), {e, f});
      }
    }
  }

  auto& prox = report.add("proximity");
  for (AtomMask e = 0; e < n; ++e) {
    for (AtomMask f = 0; f < n; ++f) {
      ++prox.checked;
      if (rel.related(e, f) != lift_check(rel, image[e], image[f])) {
        prox.fail_with("e=" + show(alg, e) + " f=" + show(alg, f), {e, f});
      }
    }
  }
  return report;
}

ProxReport eta_iso_check(const DeVriesPower& s, const SampleConfig& config) {
  const AlgebraPtr& alg = s.algebra();
  const long k = config.coeff_bound;
  Rng rng(config.seed);
  ProxMorphism e = eta(s);
  ProxReport report;
  report.subject = "η";
  report.samples = config.samples;
  report.seed = config.seed;
  auto& bij = report.add("bijective");
  auto& ops = report.add("operations");
  auto& prox = report.add("proximity");
  auto map = [&](const FlatElem& f) { return apply_prox_morphism(e, f); };
  auto back = [&](const FlatElem& f) { return relabel(f, alg); };
  for (std::size_t i = 0; i < config.samples; ++i) {
    auto [x, y] = random_related_pair(s.base, rng, k);
    FlatElem z = random_flat(alg, rng, k);
    const std::string xs = "s=" + to_text(x) + " t=" + to_text(z);
    ++bij.checked;
    if (!(back(map(x)) == x) || (map(x) == map(z)) != (x == z)) bij.fail_with(xs);
    Scalar c = random_scalar(rng, k, alg->domain());
    ops.checked += 5;
    if (!(map(flat_add(x, z)) == flat_add(map(x), map(z))) ||
        !(map(flat_mul_general(x, z)) == flat_mul_general(map(x), map(z))) ||
        !(map(flat_scalar_general(c, x)) == flat_scalar_general(c, map(x))) ||
        !(map(flat_meet(x, z)) == flat_meet(map(x), map(z))) ||
        !(map(flat_join(x, z)) == flat_join(map(x), map(z)))) {
      ops.fail_with(xs + " a=" + c.to_string());
    }
    prox.checked += 2;
    if (!e.target.related(map(x), map(y))) prox.fail_with("s=" + to_text(x) + " t=" + to_text(y));
    if (s.related(x, z) != e.target.related(map(x), map(z))) prox.fail_with(xs);
  }
  return report;
}

ProxReport naturality_check(const DVMorphism& m, const SampleConfig& config) {
  const AlgebraPtr& a = m.source().algebra();
  ProxMorphism lifted = lift_morphism(m);
  ProxReport report;
  report.subject = "naturality";
  report.samples = config.samples;
  report.seed = config.seed;

  auto& tau_sq = report.add("τ-square");
  for (AtomMask e = 0; e < a->element_count(); ++e) {
    ++tau_sq.checked;
    IdElem x(a, e);
    if (!(apply_prox_morphism(lifted, tau(x)) == tau(m(x)))) tau_sq.fail_with("e=" + x.to_string(), {e});
  }

  // Sp(Id(α)) ∘ η_S = η_T ∘ α with α = σ^♭.
  auto& eta_sq = report.add("η-square");
  ProxMorphism eta_s = eta(lifted.source);
  ProxMorphism eta_t = eta(lifted.target);
  DVMorphism id_alpha = restrict_morphism(lifted);
  DVMorphism moved = DVMorphism::from_table(eta_s.target.base, eta_t.target.base, id_alpha.table());
  ProxMorphism sp_id_alpha = lift_morphism(moved);
  Rng rng(config.seed);
  for (std::size_t i = 0; i < config.samples; ++i) {
    FlatElem s = random_flat(a, rng, config.coeff_bound);
    ++eta_sq.checked;
    FlatElem left = apply_prox_morphism(sp_id_alpha, apply_prox_morphism(eta_s, s));
    FlatElem right = apply_prox_morphism(eta_t, apply_prox_morphism(lifted, s));
    if (!(left == right)) eta_sq.fail_with("s=" + to_text(s));
  }
  return report;
}

ProxReport equivalence_check(const ProxRel& rel, const SampleConfig& config) {
  const AlgebraPtr& alg = rel.algebra();
  ProxReport report;
  report.subject = "equivalence";
  report.samples = config.samples;
  report.seed = config.seed;
  auto merge = [&report](const std::string& prefix, const ProxReport& sub) {
    for (const auto& o : sub.axioms) {
      AxiomOutcome& dst = report.add(prefix + " " + o.axiom);
      dst.checked = o.checked;
      if (!o.passed) dst.fail_with(o.witness, o.witness_masks);
    }
  };

  DeVriesPower sp = functor_Sp(rel);
  auto& idsp = report.add("Id∘Sp");
  idsp.checked = 1;
  if (!(functor_Id(sp) == rel)) idsp.fail_with("Id(Sp(B)) differs from B under τ");
  merge("τ", tau_iso_check(rel));
  merge("η", eta_iso_check(sp, config));

  auto& spid = report.add("Sp∘Id");
  spid.checked = 1;
  if (!(functor_Sp(functor_Id(sp)).base == sp.base)) spid.fail_with("Sp(Id(S)) differs from S under η");

  DVMorphism id = DVMorphism::identity(rel);
  auto& id_laws = report.add("identity laws");
  ProxMorphism lifted = lift_morphism(id);
  ++id_laws.checked;
  if (!(restrict_morphism(lifted) == id)) id_laws.fail_with("Id(Sp(id)) ≠ id");
  Rng rng(config.seed);
  for (std::size_t i = 0; i < config.samples; ++i) {
    FlatElem s = random_flat(alg, rng, config.coeff_bound);
    ++id_laws.checked;
    if (!(apply_prox_morphism(lifted, s) == s)) id_laws.fail_with("Sp(id)(s) ≠ s for s=" + to_text(s));
  }
  return report;
}

}  // namespace specker
