#include <doctest.h>

#include "fixtures.hpp"
#include "specker/error.hpp"
#include "specker/oracle.hpp"
#include "specker/sampling.hpp"

using namespace specker;
using fixture::flat;

TEST_CASE("alpha and its inverse on the fixture") {
  auto alg = fixture::b4();
  auto s = fixture::s(alg), t = fixture::t(alg);
  auto sf = fixture::s_flat(alg), tf = fixture::t_flat(alg);
  CHECK(alpha(s) == sf);
  CHECK(alpha(t) == tf);
  CHECK(alpha(PerpElem::constant(alg, 0)) == FlatElem::constant(alg, 0));
  CHECK(FlatElem::constant(alg, 0) == flat(alg, {{0, 3}}));
  CHECK(alpha(idem_embed_perp(fixture::p(alg))) == flat(alg, {{0, 3}, {1, 1}}));
  CHECK(alpha_inv(sf) == s);
  CHECK(alpha_inv(tf) == t);
  CHECK(alpha_inv(FlatElem::constant(alg, 0)) == PerpElem::constant(alg, 0));
}

TEST_CASE("from_steps rejects non-canonical lists") {
  auto alg = fixture::b4();
  CHECK_THROWS_AS(flat(alg, {{0, 1}}), Error);          // first step must be 1
  CHECK_THROWS_AS(flat(alg, {{0, 3}, {0, 1}}), Error);  // thresholds increase
  CHECK_THROWS_AS(flat(alg, {{0, 3}, {1, 3}}), Error);  // idempotents strictly decrease
  CHECK_THROWS_AS(flat(alg, {{0, 3}, {1, 0}}), Error);  // no zero step
  CHECK(FlatElem::from_decreasing(alg, {{0, 3}, {1, 3}, {2, 1}, {3, 0}}) == flat(alg, {{1, 3}, {2, 1}}));
}

TEST_CASE("flat arithmetic on the fixture") {
  auto alg = fixture::b4();
  auto sf = fixture::s_flat(alg), tf = fixture::t_flat(alg);
  auto zero = FlatElem::constant(alg, 0), one = FlatElem::constant(alg, 1);
  CHECK(flat_add(sf, tf) == flat(alg, {{1, 3}, {5, 1}}));
  CHECK(flat_add(tf, zero) == tf);
  CHECK(flat_add(sf, flat_neg(sf)) == zero);
  CHECK(flat_scalar_pos(3, sf) == flat(alg, {{0, 3}, {6, 1}}));
  CHECK(flat_scalar_pos(1, tf) == tf);
  CHECK(flat_scalar_pos(2, tf) == flat(alg, {{2, 3}, {6, 1}}));
  CHECK_THROWS_AS(flat_scalar_pos(0, tf), Error);
  CHECK(flat_mul_nonneg(sf, tf) == flat(alg, {{0, 3}, {6, 1}}));
  CHECK(flat_mul_nonneg(sf, one) == sf);
  CHECK(flat_mul_nonneg(sf, zero) == zero);
  CHECK_THROWS_AS(flat_mul_nonneg(flat_neg(sf), tf), Error);
  CHECK(flat_neg(sf) == flat(alg, {{-2, 3}, {0, 2}}));
  CHECK(flat_neg(zero) == zero);
  CHECK(flat_neg(flat_neg(tf)) == tf);
  CHECK(flat_scalar_general(-1, sf) == flat_neg(sf));
  CHECK(flat_mul_general(sf, tf) == flat_mul_nonneg(sf, tf));
  CHECK(flat_scalar_general(-2, one) == flat(alg, {{-2, 3}}));
}

TEST_CASE("flat order and lattice on the fixture") {
  auto alg = fixture::b4();
  auto sf = fixture::s_flat(alg), tf = fixture::t_flat(alg);
  CHECK(flat_meet(sf, tf) == sf);
  CHECK(flat_join(sf, tf) == tf);
  CHECK(flat_leq(sf, tf));
  CHECK_FALSE(flat_leq(tf, sf));
}

TEST_CASE("decompositions") {
  auto alg = fixture::b4();
  auto sf = fixture::s_flat(alg), tf = fixture::t_flat(alg);
  auto d = decreasing_decomposition(sf);
  CHECK(d.base == Scalar(0));
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].first == Scalar(2));
  CHECK(d.terms[0].second == fixture::p(alg));
  d = decreasing_decomposition(tf);
  CHECK(d.base == Scalar(1));
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].first == Scalar(2));
  d = decreasing_decomposition(FlatElem::constant(alg, 0));
  CHECK(d.base == Scalar(0));
  CHECK(d.terms.empty());

  d = orth_to_decreasing(fixture::s(alg));
  CHECK(d.base == Scalar(0));
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].second == fixture::p(alg));
  d = orth_to_decreasing(fixture::t(alg));
  CHECK(d.base == Scalar(1));
  d = orth_to_decreasing(PerpElem::constant(alg, 5));
  CHECK(d.base == Scalar(5));
  CHECK(d.terms.empty());
}

TEST_CASE("compatible decompositions") {
  auto alg = fixture::b4();
  auto sf = fixture::s_flat(alg), tf = fixture::t_flat(alg);
  auto cd = compatible_decreasing(sf, tf);
  CHECK(cd.grid == std::vector<Scalar>{0, 1, 2, 3});
  std::vector<AtomMask> first, second;
  for (const auto& e : cd.first) first.push_back(e.bits());
  for (const auto& e : cd.second) second.push_back(e.bits());
  CHECK(first == std::vector<AtomMask>{3, 1, 1, 0});
  CHECK(second == std::vector<AtomMask>{3, 3, 1, 1});

  cd = compatible_decreasing(sf, sf);
  CHECK(cd.grid == std::vector<Scalar>{0, 2});
  cd = compatible_decreasing(FlatElem::constant(alg, 0), FlatElem::constant(alg, 1));
  CHECK(cd.grid == std::vector<Scalar>{0, 1});
}

TEST_CASE("idempotents by the order test") {
  auto alg = fixture::b4();
  CHECK(is_idempotent_order(idem_embed_flat(fixture::p(alg))));
  CHECK_FALSE(is_idempotent_order(fixture::s_flat(alg)));
  CHECK(is_idempotent_order(FlatElem::constant(alg, 1)));
  for (const auto& e : all_elements(alg)) {
    CHECK(is_idempotent_order(idem_embed_flat(e)));
    CHECK(flat_to_idem(idem_embed_flat(e)) == e);
  }
  Rng rng(5);
  int non_idempotent = 0;
  while (non_idempotent < 100) {
    auto f = random_flat(alg, rng, 10);
    auto g = alpha_inv(f);
    bool squares = perp_mul(g, g) == g;
    CHECK(is_idempotent_order(f) == squares);
    if (!squares) ++non_idempotent;
  }
  CHECK_THROWS_AS(flat_to_idem(fixture::s_flat(alg)), Error);
}

TEST_CASE("random flat elements match the pointwise model") {
  Rng rng(9);
  auto alg = fixture::b8();
  for (int i = 0; i < 200; ++i) {
    auto f = random_flat(alg, rng, 10), g = random_flat(alg, rng, 10);
    CHECK(alpha(alpha_inv(f)) == f);
    CHECK(stone_eval(alpha_inv(f)) == stone_eval(f));
    CHECK(flat_leq(f, g) == perp_leq(alpha_inv(f), alpha_inv(g)));
    CHECK(flat_add_formula(f, g) == alpha(perp_add(alpha_inv(f), alpha_inv(g))));
    CHECK(flat_neg_formula(f) == alpha(perp_neg(alpha_inv(f))));
  }
}

TEST_CASE("rational domain thresholds") {
  auto alg = Algebra::make({"p", "q"}, Domain::rational);
  auto f = flat(alg, {{Scalar(mpq_class(1, 2)), 3}, {Scalar(mpq_class(5, 3)), 1}});
  auto g = flat_scalar_pos(Scalar(mpq_class(3, 2)), f);
  CHECK(g == flat(alg, {{Scalar(mpq_class(3, 4)), 3}, {Scalar(mpq_class(5, 2)), 1}}));
  CHECK(alpha(alpha_inv(g)) == g);
  auto integer = fixture::b4();
  CHECK_THROWS_AS(flat(integer, {{Scalar(mpq_class(1, 2)), 3}}), Error);
}
