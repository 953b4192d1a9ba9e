#include "specker/proximity.hpp"

#include <algorithm>

#include "specker/error.hpp"

namespace specker {

namespace {

bool subset(AtomMask a, AtomMask b) { return (a & ~b) == 0; }

std::string show(const AlgebraPtr& alg, AtomMask m) { return IdElem(alg, m).to_string(); }

// Exhaustive D1–D7 scan over a tabulated relation. With report == nullptr it
// stops at the first failure.
template <class Related>
bool scan_devries(const AlgebraPtr& alg, Related related, ProxReport* report) {
  const AtomMask n = alg->element_count();
  const AtomMask full = alg->full_mask();
  AxiomOutcome scratch;
  auto outcome = [&](const char* name) -> AxiomOutcome& {
    if (report) return report->add(name);
    scratch = AxiomOutcome{};
    scratch.axiom = name;
    return scratch;
  };
  auto done = [&](const AxiomOutcome& o) { return !report && !o.passed; };

  {
    auto& o = outcome("D1");
    o.checked = 2;
    if (!related(0, 0)) o.fail_with("0 ⊀ 0", {0, 0});
    else if (!related(full, full)) o.fail_with("1 ⊀ 1", {full, full});
    if (done(o)) return false;
  }
  {
    auto& o = outcome("D2");
    for (AtomMask e = 0; e < n && o.passed; ++e) {
      for (AtomMask f = 0; f < n; ++f) {
        if (!related(e, f)) continue;
        ++o.checked;
        if (!subset(e, f)) {
          o.fail_with(show(alg, e) + " ≺ " + show(alg, f) + " but " + show(alg, e) + " ≰ " + show(alg, f), {e, f});
          break;
        }
      }
    }
    if (done(o)) return false;
  }
  {
    auto& o = outcome("D3");
    // e ≤ f ≺ g ≤ h ⟹ e ≺ h. Related pairs are visited from the top down.
    for (AtomMask f = n; f-- > 0 && o.passed;) {
      for (AtomMask g = n; g-- > 0 && o.passed;) {
        if (!related(f, g)) continue;
        for (AtomMask e = 0; e < n && o.passed; ++e) {
          if (!subset(e, f)) continue;
          for (AtomMask h = 0; h < n; ++h) {
            if (!subset(g, h)) continue;
            ++o.checked;
            if (!related(e, h)) {
              o.fail_with(show(alg, e) + " ≤ " + show(alg, f) + " ≺ " + show(alg, g) + " ≤ " + show(alg, h) +
                              " but " + show(alg, e) + " ⊀ " + show(alg, h),
                          {e, f, g, h});
              break;
            }
          }
        }
      }
    }
    if (done(o)) return false;
  }
  {
    auto& o = outcome("D4");
    for (AtomMask e = 0; e < n && o.passed; ++e) {
      for (AtomMask f = 0; f < n && o.passed; ++f) {
        if (!related(e, f)) continue;
        for (AtomMask g = 0; g < n; ++g) {
          if (!related(e, g)) continue;
          ++o.checked;
          if (!related(e, f & g)) {
            o.fail_with(show(alg, e) + " ≺ " + show(alg, f) + ", " + show(alg, g) + " but " + show(alg, e) + " ⊀ " +
                            show(alg, f & g),
                        {e, f, g});
            break;
          }
        }
      }
    }
    if (done(o)) return false;
  }
  {
    auto& o = outcome("D5");
    for (AtomMask e = 0; e < n && o.passed; ++e) {
      for (AtomMask f = 0; f < n; ++f) {
        if (!related(e, f)) continue;
        ++o.checked;
        if (!related(~f & full, ~e & full)) {
          o.fail_with(show(alg, e) + " ≺ " + show(alg, f) + " but ¬" + show(alg, f) + " ⊀ ¬" + show(alg, e), {e, f});
          break;
        }
      }
    }
    if (done(o)) return false;
  }
  {
    auto& o = outcome("D6");
    for (AtomMask e = 0; e < n && o.passed; ++e) {
      for (AtomMask f = 0; f < n; ++f) {
        if (!related(e, f)) continue;
        ++o.checked;
        bool found = false;
        for (AtomMask g = 0; g < n && !found; ++g) found = related(e, g) && related(g, f);
        if (!found) {
          o.fail_with(show(alg, e) + " ≺ " + show(alg, f) + " has no interpolant", {e, f});
          break;
        }
      }
    }
    if (done(o)) return false;
  }
  {
    auto& o = outcome("D7");
    for (AtomMask e = 1; e < n; ++e) {
      ++o.checked;
      bool found = false;
      for (AtomMask f = 1; f < n && !found; ++f) found = related(f, e);
      if (!found) {
        o.fail_with("no nonzero element is ≺ " + show(alg, e), {e});
        break;
      }
    }
    if (done(o)) return false;
  }
  return report ? report->passed() : true;
}

void require_tabulable(const AlgebraPtr& alg) {
  if (alg->atom_count() > exhaustive_atom_bound) {
    fail(ErrorCode::too_large, "algebra has more than 2^" + std::to_string(exhaustive_atom_bound) +
                                   " elements; exhaustive proximity mode is unavailable");
  }
}

void require_devries(const ProxRel& rel) {
  if (!rel.is_devries()) fail(ErrorCode::not_devries, "relation is not a de Vries proximity");
}

}  // namespace

ProxRel::ProxRel(AlgebraPtr alg, std::vector<std::uint64_t> rows, bool leq)
    : alg_(std::move(alg)), rows_(std::move(rows)), leq_(leq) {
  if (leq_) {
    devries_ = true;
  } else {
    const auto& r = rows_;
    devries_ = scan_devries(alg_, [&r](AtomMask e, AtomMask f) { return ((r[e] >> f) & 1) != 0; }, nullptr);
  }
}

ProxRel ProxRel::leq(AlgebraPtr alg) { return ProxRel(std::move(alg), {}, true); }

ProxRel ProxRel::from_rows(AlgebraPtr alg, std::vector<std::uint64_t> rows) {
  require_tabulable(alg);
  if (rows.size() != alg->element_count()) fail(ErrorCode::invalid_argument, "relation table has the wrong size");
  return ProxRel(std::move(alg), std::move(rows), false);
}

ProxRel ProxRel::from_pairs(AlgebraPtr alg, std::span<const std::pair<IdElem, IdElem>> pairs) {
  require_tabulable(alg);
  std::vector<std::uint64_t> rows(alg->element_count(), 0);
  for (const auto& [e, f] : pairs) {
    require_same(*alg, *e.algebra());
    require_same(*alg, *f.algebra());
    rows[e.bits()] |= std::uint64_t{1} << f.bits();
  }
  return ProxRel(std::move(alg), std::move(rows), false);
}

bool ProxRel::related(AtomMask e, AtomMask f) const {
  if (leq_) return subset(e, f);
  return ((rows_[e] >> f) & 1) != 0;
}

bool ProxRel::related(const IdElem& e, const IdElem& f) const {
  require_same(*alg_, *e.algebra());
  require_same(*alg_, *f.algebra());
  return related(e.bits(), f.bits());
}

std::vector<std::pair<AtomMask, AtomMask>> ProxRel::pairs() const {
  if (alg_->atom_count() > 6) fail(ErrorCode::too_large, "relation too large to list");
  std::vector<std::pair<AtomMask, AtomMask>> out;
  for (AtomMask e = 0; e < alg_->element_count(); ++e) {
    for (AtomMask f = 0; f < alg_->element_count(); ++f) {
      if (related(e, f)) out.emplace_back(e, f);
    }
  }
  return out;
}

bool operator==(const ProxRel& a, const ProxRel& b) {
  if (!a.alg_->same_as(*b.alg_)) return false;
  if (a.leq_ && b.leq_) return true;
  return a.pairs() == b.pairs();
}

ProxRel leq_proximity(const AlgebraPtr& alg) { return ProxRel::leq(alg); }

ProxReport check_devries(const ProxRel& rel) {
  require_tabulable(rel.algebra());
  ProxReport report;
  report.subject = "de Vries axioms";
  scan_devries(rel.algebra(), [&rel](AtomMask e, AtomMask f) { return rel.related(e, f); }, &report);
  return report;
}

std::vector<ProxRel> enumerate_devries(const AlgebraPtr& alg) {
  const std::uint64_t n = alg->element_count();
  if (n > enumerate_element_bound) {
    fail(ErrorCode::too_large, "enumerate_devries is limited to algebras with at most 4 elements");
  }
  const std::uint64_t bits = n * n;
  std::vector<ProxRel> out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << bits); ++r) {
    std::vector<std::uint64_t> rows(n, 0);
    for (std::uint64_t e = 0; e < n; ++e) rows[e] = (r >> (e * n)) & ((std::uint64_t{1} << n) - 1);
    ProxRel rel = ProxRel::from_rows(alg, std::move(rows));
    if (rel.is_devries()) out.push_back(std::move(rel));
  }
  return out;
}

std::optional<IdElem> find_interpolant(const ProxRel& rel, const IdElem& e, const IdElem& f) {
  const AlgebraPtr& alg = rel.algebra();
  if (rel.is_leq_kind()) {
    if (rel.related(e, e) && rel.related(e, f)) return e;  // e is the least candidate
    return std::nullopt;
  }
  std::vector<AtomMask> order;
  for (AtomMask g = 0; g < alg->element_count(); ++g) order.push_back(g);
  std::sort(order.begin(), order.end(), witness_order_less);
  for (AtomMask g : order) {
    if (rel.related(e.bits(), g) && rel.related(g, f.bits())) return IdElem(alg, g);
  }
  return std::nullopt;
}

IdElem interpolant(const ProxRel& rel, const IdElem& e, const IdElem& f) {
  require_devries(rel);
  if (!rel.related(e, f)) fail(ErrorCode::invalid_argument, e.to_string() + " ⊀ " + f.to_string());
  auto g = find_interpolant(rel, e, f);
  if (!g) fail(ErrorCode::no_witness, "no interpolant between " + e.to_string() + " and " + f.to_string());
  return *g;
}

std::optional<IdElem> find_nonzero_below(const ProxRel& rel, const IdElem& e) {
  const AlgebraPtr& alg = rel.algebra();
  if (rel.is_leq_kind()) {
    if (e.is_zero()) return std::nullopt;
    return IdElem(alg, e.bits() & (~e.bits() + 1));  // lowest atom of e
  }
  std::vector<AtomMask> order;
  for (AtomMask g = 1; g < alg->element_count(); ++g) order.push_back(g);
  std::sort(order.begin(), order.end(), witness_order_less);
  for (AtomMask g : order) {
    if (rel.related(g, e.bits())) return IdElem(alg, g);
  }
  return std::nullopt;
}

bool lift_check(const ProxRel& rel, const FlatElem& s, const FlatElem& t) {
  require_devries(rel);
  require_same(*rel.algebra(), *s.algebra());
  require_same(s.algebra(), t.algebra());
  std::vector<Scalar> points;
  for (const auto& x : s.steps()) points.push_back(x.upto);
  for (const auto& x : t.steps()) points.push_back(x.upto);
  std::sort(points.begin(), points.end());
  points.push_back(points.back() + Scalar(1));
  points.push_back(points.front() - Scalar(1));
  return std::all_of(points.begin(), points.end(),
                     [&](const Scalar& b) { return rel.related(s.value_mask(b), t.value_mask(b)); });
}

ProxRel restrict_lift(const ProxRel& rel) {
  require_devries(rel);
  const AlgebraPtr& alg = rel.algebra();
  require_tabulable(alg);
  std::vector<FlatElem> flats;
  for (AtomMask e = 0; e < alg->element_count(); ++e) flats.push_back(idem_embed_flat(IdElem(alg, e)));
  std::vector<std::uint64_t> rows(alg->element_count(), 0);
  for (AtomMask e = 0; e < alg->element_count(); ++e) {
    for (AtomMask f = 0; f < alg->element_count(); ++f) {
      if (lift_check(rel, flats[e], flats[f])) rows[e] |= std::uint64_t{1} << f;
    }
  }
  ProxRel restricted = ProxRel::from_rows(alg, std::move(rows));
  check_internal(restricted == rel, "restriction of the lifted proximity differs from the original");
  return restricted;
}

namespace {

IdElem random_successor_idem(const ProxRel& rel, const IdElem& e, Rng& rng) {
  const AlgebraPtr& alg = rel.algebra();
  if (rel.is_leq_kind()) return IdElem(alg, e.bits() | (rng() & alg->full_mask()));
  std::vector<AtomMask> succ;
  for (AtomMask f = 0; f < alg->element_count(); ++f) {
    if (rel.related(e.bits(), f)) succ.push_back(f);
  }
  check_internal(!succ.empty(), "element has no successor under a de Vries proximity");
  return IdElem(alg, succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)]);
}

}  // namespace

FlatElem random_successor(const ProxRel& rel, const FlatElem& s, Rng& rng, long bound) {
  require_devries(rel);
  const AlgebraPtr& alg = s.algebra();
  // Grid: the thresholds of s plus one point above, where s is 0.
  std::vector<Step> grid = s.steps();
  Scalar above = s.highest_threshold() + random_positive_scalar(rng, std::max(1L, bound), alg->domain());
  grid.push_back({above, 0});
  std::vector<Step> steps;
  AtomMask prev = alg->full_mask();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // 1 ≺ f forces f = 1 on the first step.
    AtomMask f = i == 0 ? alg->full_mask() : random_successor_idem(rel, IdElem(alg, grid[i].idem), rng).bits();
    f &= prev;  // keeps the sequence decreasing; D3 and D4 preserve the relation
    steps.push_back({grid[i].upto, f});
    prev = f;
  }
  return FlatElem::from_decreasing(alg, std::move(steps));
}

std::pair<FlatElem, FlatElem> random_related_pair(const ProxRel& rel, Rng& rng, long bound, bool nonneg) {
  const AlgebraPtr& alg = rel.algebra();
  FlatElem s = nonneg ? random_nonneg_flat(alg, rng, bound) : random_flat(alg, rng, bound);
  FlatElem t = random_successor(rel, s, rng, bound);
  return {std::move(s), std::move(t)};
}

FlatElem p9_witness(const ProxRel& rel, const FlatElem& s, const FlatElem& t) {
  require_devries(rel);
  const AlgebraPtr& alg = s.algebra();
  CompatibleDecomposition cd = compatible_decreasing(s, t);
  std::vector<Step> steps;
  AtomMask prev = alg->full_mask();
  for (std::size_t i = 0; i < cd.grid.size(); ++i) {
    AtomMask g = interpolant(rel, cd.first[i], cd.second[i]).bits() & prev;
    steps.push_back({cd.grid[i], g});
    prev = g;
  }
  return FlatElem::from_decreasing(alg, std::move(steps));
}

FlatElem p10_witness(const ProxRel& rel, const FlatElem& s) {
  require_devries(rel);
  const AlgebraPtr& alg = s.algebra();
  const FlatElem zero = FlatElem::constant(alg, Scalar(0));
  if (!flat_is_nonneg(s) || s == zero) fail(ErrorCode::invalid_argument, "p10_witness needs s > 0");
  // s ≥ 0 puts every threshold at or above 0; the top step is s(a_n) = f_n > 0.
  const IdElem last(alg, s.steps().back().idem);
  const Scalar& top = s.highest_threshold();
  auto e = find_nonzero_below(rel, last);
  if (!e) fail(ErrorCode::no_witness, "no nonzero element below " + last.to_string());
  return FlatElem::from_decreasing(alg, {{Scalar(0), alg->full_mask()}, {top, e->bits()}});
}

ProxReport prox_axiom_sample(const ProxRel& rel, const SampleConfig& config) {
  require_devries(rel);
  const AlgebraPtr& alg = rel.algebra();
  const long k = config.coeff_bound;
  Rng rng(config.seed);
  ProxReport report;
  report.subject = "lifted proximity";
  report.samples = config.samples;
  report.seed = config.seed;
  auto lift = [&](const FlatElem& s, const FlatElem& t) { return lift_check(rel, s, t); };
  auto txt = [](const FlatElem& f) {
    std::string out;
    for (const auto& st : f.steps()) out += "(" + st.upto.to_string() + "," + std::to_string(st.idem) + ")";
    return out;
  };
  const FlatElem zero = FlatElem::constant(alg, Scalar(0));
  const FlatElem one = FlatElem::constant(alg, Scalar(1));

  auto& p1 = report.add("P1");
  p1.checked = 2;
  if (!lift(zero, zero)) p1.fail_with("0 ⊀ 0");
  if (!lift(one, one)) p1.fail_with("1 ⊀ 1");

  auto& p2 = report.add("P2");
  auto& p3 = report.add("P3");
  auto& p4 = report.add("P4");
  auto& p5 = report.add("P5");
  auto& p6 = report.add("P6");
  auto& p7 = report.add("P7");
  auto& p8 = report.add("P8");
  auto& p9 = report.add("P9");
  auto& p10 = report.add("P10");

  for (std::size_t i = 0; i < config.samples; ++i) {
    auto [s, t] = random_related_pair(rel, rng, k);
    auto [r, u] = random_related_pair(rel, rng, k);
    const std::string st = "s=" + txt(s) + " t=" + txt(t);

    ++p2.checked;
    if (!flat_leq(s, t)) p2.fail_with(st);
    FlatElem x = random_flat(alg, rng, k), y = random_flat(alg, rng, k);
    ++p2.checked;
    if (lift(x, y) && !flat_leq(x, y)) p2.fail_with("s=" + txt(x) + " t=" + txt(y));

    ++p3.checked;
    FlatElem below = flat_meet(s, random_flat(alg, rng, k));
    FlatElem above = flat_join(t, random_flat(alg, rng, k));
    if (!lift(below, above)) p3.fail_with(st + " lower=" + txt(below) + " upper=" + txt(above));

    ++p4.checked;
    FlatElem t2 = random_successor(rel, s, rng, k);
    if (!lift(s, flat_meet(t, t2))) p4.fail_with(st + " t'=" + txt(t2));

    ++p5.checked;
    if (!lift(flat_neg(t), flat_neg(s))) p5.fail_with(st);

    ++p6.checked;
    if (!lift(flat_add(s, r), flat_add(t, u))) p6.fail_with(st + " r=" + txt(r) + " u=" + txt(u));

    Scalar a = random_positive_scalar(rng, k, alg->domain());
    p7.checked += 2;
    if (!lift(flat_scalar_pos(a, s), flat_scalar_pos(a, t))) p7.fail_with(st + " a=" + a.to_string());
    if (lift(flat_scalar_pos(a, x), flat_scalar_pos(a, y)) != lift(x, y)) {
      p7.fail_with("s=" + txt(x) + " t=" + txt(y) + " a=" + a.to_string());
    }

    ++p8.checked;
    auto [s8, t8] = random_related_pair(rel, rng, k, true);
    auto [r8, u8] = random_related_pair(rel, rng, k, true);
    if (!lift(flat_mul_nonneg(s8, r8), flat_mul_nonneg(t8, u8))) {
      p8.fail_with("s=" + txt(s8) + " t=" + txt(t8) + " r=" + txt(r8) + " u=" + txt(u8));
    }

    ++p9.checked;
    try {
      FlatElem w = p9_witness(rel, s, t);
      if (!lift(s, w) || !lift(w, t)) p9.fail_with(st + " r=" + txt(w));
    } catch (const Error& e) {
      p9.fail_with(st + " (" + e.what() + ")");
    }

    ++p10.checked;
    FlatElem pos = random_nonneg_flat(alg, rng, k);
    if (pos == zero) pos = one;
    try {
      FlatElem w = p10_witness(rel, pos);
      if (!flat_is_nonneg(w) || w == zero || !lift(w, pos)) p10.fail_with("s=" + txt(pos) + " t=" + txt(w));
    } catch (const Error& e) {
      p10.fail_with("s=" + txt(pos) + " (" + e.what() + ")");
    }
  }
  return report;
}

}  // namespace specker
