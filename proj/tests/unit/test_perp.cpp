#include <doctest.h>

#include "fixtures.hpp"
#include "specker/error.hpp"
#include "specker/oracle.hpp"
#include "specker/sampling.hpp"

using namespace specker;
using fixture::p;
using fixture::q;

namespace {

PerpElem perp(const AlgebraPtr& alg, std::initializer_list<std::pair<Scalar, IdElem>> entries) {
  return perp_normalize(alg, entries);
}

}  // namespace

TEST_CASE("perp_normalize") {
  auto alg = fixture::b4();
  auto s = fixture::s(alg);
  REQUIRE(s.entries().size() == 2);
  CHECK(s.entries()[0] == PerpEntry{2, 1});
  CHECK(s.entries()[1] == PerpEntry{0, 2});
  CHECK(perp(alg, {{2, p(alg)}}) == s);
  auto merged = perp(alg, {{1, p(alg)}, {1, q(alg)}});
  REQUIRE(merged.entries().size() == 1);
  CHECK(merged.entries()[0] == PerpEntry{1, 3});
  CHECK(perp(alg, {{5, IdElem::zero(alg)}}) == PerpElem::constant(alg, 0));
  CHECK_THROWS_AS(perp(alg, {{1, p(alg)}, {2, IdElem::one(alg)}}), Error);
}

TEST_CASE("perp ring operations on the fixture") {
  auto alg = fixture::b4();
  auto s = fixture::s(alg), t = fixture::t(alg);
  auto zero = PerpElem::constant(alg, 0), one = PerpElem::constant(alg, 1);
  CHECK(perp_add(s, t) == perp(alg, {{5, p(alg)}, {1, q(alg)}}));
  CHECK(perp_add(s, zero) == s);
  CHECK(perp_add(s, perp_neg(s)) == zero);
  CHECK(perp_mul(s, t) == perp(alg, {{6, p(alg)}, {0, q(alg)}}));
  CHECK(perp_mul(s, one) == s);
  CHECK(perp_mul(s, zero) == zero);
  CHECK(perp_scalar_mul(3, s) == perp(alg, {{6, p(alg)}, {0, q(alg)}}));
  CHECK(perp_scalar_mul(0, t) == zero);
  CHECK(perp_scalar_mul(-1, s) == perp(alg, {{-2, p(alg)}, {0, q(alg)}}));
}

TEST_CASE("idempotent embedding") {
  auto alg = fixture::b4();
  CHECK(idem_embed_perp(p(alg)) == perp(alg, {{1, p(alg)}, {0, q(alg)}}));
  CHECK(idem_embed_perp(IdElem::one(alg)) == PerpElem::constant(alg, 1));
  CHECK(idem_embed_perp(IdElem::zero(alg)) == PerpElem::constant(alg, 0));
}

TEST_CASE("perp order") {
  auto alg = fixture::b4();
  auto s = fixture::s(alg), t = fixture::t(alg);
  CHECK(perp_is_nonneg(s));
  CHECK_FALSE(perp_is_nonneg(perp_scalar_mul(-1, s)));
  CHECK(perp_is_nonneg(PerpElem::constant(alg, 0)));
  CHECK(perp_leq(s, t));
  CHECK_FALSE(perp_leq(t, s));
  CHECK(perp_leq(s, s));
}

TEST_CASE("perp meet and join") {
  auto alg = fixture::b4();
  auto s = fixture::s(alg), t = fixture::t(alg);
  CHECK(perp_meet(s, t) == s);
  CHECK(perp_join(s, t) == t);
  CHECK(perp_meet(s, s) == s);
}

TEST_CASE("annihilator idempotent") {
  auto alg = fixture::b4();
  std::vector<PerpElem> gens{fixture::s(alg)};
  CHECK(annihilator_idempotent(gens) == q(alg));
  gens = {PerpElem::constant(alg, 1)};
  CHECK(annihilator_idempotent(gens).is_zero());
  gens = {PerpElem::constant(alg, 0)};
  CHECK(annihilator_idempotent(gens).is_one());
  CHECK_THROWS_AS(annihilator_idempotent({}), Error);
}

TEST_CASE("mixed algebras are rejected") {
  auto a = fixture::b4();
  auto b = Algebra::make({"r", "s"});
  try {
    (void)perp_add(fixture::s(a), PerpElem::constant(b, 1));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::algebra_mismatch);
  }
}

TEST_CASE("ring and lattice laws on random samples") {
  Rng rng(7);
  for (auto alg : {fixture::b4(), fixture::b8()}) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_perp(alg, rng, 10), g = random_perp(alg, rng, 10), h = random_perp(alg, rng, 10);
      CHECK(perp_add(perp_add(f, g), h) == perp_add(f, perp_add(g, h)));
      CHECK(perp_mul(perp_mul(f, g), h) == perp_mul(f, perp_mul(g, h)));
      CHECK(perp_mul(f, perp_add(g, h)) == perp_add(perp_mul(f, g), perp_mul(f, h)));
      CHECK(perp_mul(f, g) == perp_mul(g, f));
      CHECK(perp_meet_refined(f, g) == perp_meet_formula(f, g));
      CHECK(perp_join_refined(f, g) == perp_join_formula(f, g));
      CHECK(perp_leq(perp_meet(f, g), f));
      CHECK(perp_leq(f, perp_join(f, g)));
      if (perp_leq(f, g)) CHECK(perp_leq(perp_add(f, h), perp_add(g, h)));
      if (perp_is_nonneg(f) && perp_is_nonneg(g)) {
        CHECK(perp_is_nonneg(perp_add(f, g)));
        CHECK(perp_is_nonneg(perp_mul(f, g)));
      }
      if (perp_is_nonneg(f) && perp_is_nonneg(perp_neg(f))) CHECK(f == PerpElem::constant(alg, 0));
    }
  }
}

TEST_CASE("f-ring law on disjoint supports") {
  Rng rng(11);
  auto alg = fixture::b8();
  for (int i = 0; i < 100; ++i) {
    IdElem e = random_idem(alg, rng);
    // f lives on e, g on ¬e, both nonnegative, so f ∧ g = 0.
    auto f = perp_mul(perp_meet(random_perp(alg, rng, 10), PerpElem::constant(alg, 0)), PerpElem::constant(alg, -1));
    f = perp_mul(f, idem_embed_perp(e));
    auto g = perp_mul(perp_join(random_perp(alg, rng, 10), PerpElem::constant(alg, 0)), idem_embed_perp(~e));
    REQUIRE(perp_meet(f, g) == PerpElem::constant(alg, 0));
    auto h = perp_join(random_perp(alg, rng, 10), PerpElem::constant(alg, 0));
    CHECK(perp_meet(perp_mul(h, f), g) == PerpElem::constant(alg, 0));
  }
}

TEST_CASE("annihilators of small ideals over B4") {
  auto alg = fixture::b4();
  std::vector<PerpElem> elems;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) elems.push_back(perp(alg, {{a, p(alg)}, {b, q(alg)}}));
  }
  for (const auto& g1 : elems) {
    for (const auto& g2 : elems) {
      std::vector<PerpElem> gens{g1, g2};
      IdElem e = annihilator_idempotent(gens);
      auto E = idem_embed_perp(e);
      CHECK(perp_mul(E, E) == E);
      CHECK(perp_mul(E, g1) == PerpElem::constant(alg, 0));
      CHECK(perp_mul(E, g2) == PerpElem::constant(alg, 0));
      for (const auto& h : elems) {
        if (perp_mul(h, g1) == PerpElem::constant(alg, 0) && perp_mul(h, g2) == PerpElem::constant(alg, 0)) {
          CHECK(perp_mul(E, h) == h);
        }
      }
    }
  }
}

TEST_CASE("random perp agrees with the pointwise model") {
  Rng rng(3);
  auto alg = fixture::b8();
  for (int i = 0; i < 100; ++i) {
    auto f = random_perp(alg, rng, 10), g = random_perp(alg, rng, 10);
    CHECK(stone_eval(perp_add(f, g)) == oracle_apply("add", {stone_eval(f), stone_eval(g)}));
    CHECK(stone_eval(perp_mul(f, g)) == oracle_apply("mul", {stone_eval(f), stone_eval(g)}));
    CHECK(perp_leq(f, g) == perp_is_nonneg(perp_sub(g, f)));
  }
}
