#include <doctest.h>

#include "fixtures.hpp"
#include "specker/error.hpp"

using namespace specker;

TEST_CASE("make_algebra sizes") {
  CHECK(fixture::b4()->element_count() == 4);
  CHECK(fixture::b2()->element_count() == 2);
  CHECK(fixture::b8()->element_count() == 8);
}

TEST_CASE("make_algebra rejects bad atom lists") {
  CHECK_THROWS_AS(Algebra::make({}), Error);
  CHECK_THROWS_AS(Algebra::make({"p", "p"}), Error);
  CHECK_THROWS_AS(Algebra::make({""}), Error);
  CHECK_THROWS_AS(Algebra::make({"1"}), Error);
}

TEST_CASE("free algebras") {
  auto one = Algebra::make_free(1);
  CHECK(one->element_count() == 4);
  REQUIRE(one->generators().size() == 1);
  CHECK(std::popcount(one->generators()[0].second) == 1);

  auto two = Algebra::make_free(2);
  CHECK(two->element_count() == 16);
  CHECK(std::popcount(two->generators()[0].second) == 2);

  CHECK_THROWS_AS(Algebra::make_free(0), Error);
  CHECK_THROWS_AS(Algebra::make_free(5), Error);
}

TEST_CASE("ba_apply connectives") {
  auto alg = fixture::b4();
  IdElem p = fixture::p(alg), q = fixture::q(alg);
  std::vector<IdElem> pq{p, q};
  CHECK(ba_apply(alg, Connective::meet, pq).is_zero());
  CHECK(ba_apply(alg, Connective::join, pq).is_one());
  CHECK(ba_apply(alg, Connective::big_join, {}).is_zero());
  CHECK(ba_apply(alg, Connective::big_meet, {}).is_one());
  std::vector<IdElem> just_p{p};
  CHECK(ba_apply(alg, Connective::not_, just_p) == q);
  CHECK_THROWS_AS(ba_apply(alg, Connective::not_, pq), Error);

  auto other = Algebra::make({"r", "s"});
  std::vector<IdElem> mixed{p, IdElem::atom(other, "r")};
  try {
    (void)ba_apply(alg, Connective::meet, mixed);
    FAIL("mixed algebras accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::algebra_mismatch);
  }
}

TEST_CASE("boolean algebra laws exhaustively") {
  for (auto alg : {fixture::b2(), fixture::b4(), fixture::b8(), Algebra::make({"a", "b", "c", "d"})}) {
    auto all = all_elements(alg);
    for (const auto& e : all) {
      CHECK((e & ~e).is_zero());
      CHECK((e | ~e).is_one());
      CHECK(~~e == e);
      for (const auto& f : all) {
        CHECK(~(e | f) == (~e & ~f));
        CHECK(~(e & f) == (~e | ~f));
        CHECK((e | (e & f)) == e);
        CHECK(e.leq(f) == ((e & f) == e));
        for (const auto& g : all) CHECK((e & (f | g)) == ((e & f) | (e & g)));
      }
    }
  }
}

TEST_CASE("witness order puts smaller subsets first") {
  CHECK(witness_order_less(0b100, 0b011));
  CHECK(witness_order_less(0b001, 0b010));
  CHECK(witness_order_less(0b011, 0b101));
  CHECK_FALSE(witness_order_less(0b011, 0b011));
}
