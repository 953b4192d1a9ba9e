#include <doctest.h>

#include "fixtures.hpp"
#include "specker/error.hpp"
#include "specker/serialize.hpp"
#include "specker/text.hpp"

using namespace specker;

TEST_CASE("algebra JSON") {
  auto alg = algebra_from_json(Json::parse(R"({"atoms":["p","q"]})"));
  CHECK(alg->same_as(*fixture::b4()));
  auto free = algebra_from_json(Json::parse(R"({"free_generators":2})"));
  CHECK(free->element_count() == 16);
  CHECK(algebra_from_json(Json::parse(R"({"atoms":["p"],"domain":"rational"})"))->domain() == Domain::rational);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"atoms":"p"})")), Error);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({})")), Error);
  CHECK(algebra_from_json(algebra_to_json(*alg))->same_as(*alg));
}

TEST_CASE("element literals") {
  auto alg = fixture::b4();
  CHECK(idem_from_json(alg, "0").is_zero());
  CHECK(idem_from_json(alg, "1").is_one());
  CHECK(idem_from_json(alg, Json::parse(R"(["p"])")) == fixture::p(alg));
  CHECK(idem_from_json(alg, "[p,q]").is_one());
  CHECK(idem_from_json(alg, "q") == fixture::q(alg));
  CHECK_THROWS_AS(idem_from_json(alg, "[r]"), Error);
}

TEST_CASE("element JSON and text") {
  auto alg = fixture::b4();
  auto s = std::get<PerpElem>(element_from_json(
      alg, Json::parse(R"({"rep":"perp","entries":[{"value":"2","idem":["p"]},{"value":"0","idem":["q"]}]})")));
  CHECK(s == fixture::s(alg));
  CHECK(to_text(s) == "2·[p] + 0·[q]");
  auto sf = std::get<FlatElem>(
      element_from_json(alg, Json::parse(R"({"rep":"flat","steps":[{"upto":"0","idem":"1"},{"upto":"2","idem":["p"]}]})")));
  CHECK(sf == fixture::s_flat(alg));
  CHECK(to_text(sf) == "[1 | 0] [p | 2]");
  CHECK(to_text(PerpElem::constant(alg, 3)) == "3·1");
  auto e = element_from_json(alg, Json::parse(R"({"expr":"x_p*x_p + 3*x_q - x_p"})"));
  CHECK(to_text(std::get<PerpElem>(e)) == "3·[q] + 0·[p]");

  CHECK(std::get<PerpElem>(element_from_json(alg, element_to_json(s))) == s);
  CHECK(std::get<FlatElem>(element_from_json(alg, element_to_json(sf))) == sf);
  CHECK_THROWS_AS(element_from_json(alg, Json::parse(R"({"rep":"flat","steps":[]})")), Error);
  CHECK_THROWS_AS(element_from_json(alg, Json::parse(R"({"rep":"dense"})")), Error);
  CHECK_THROWS_AS(element_from_json(alg, Json::parse(R"({"rep":"perp","entries":[{"value":"1/2","idem":"1"}]})")),
                  Error);
}

TEST_CASE("proximity JSON") {
  auto alg = fixture::b2();
  auto leq = proximity_from_json(alg, Json::parse(R"({"proximity":"leq"})"));
  CHECK(leq.is_leq_kind());
  auto pairs = proximity_from_json(alg, Json::parse(R"({"proximity":{"pairs":[["0","0"],["0","1"],["1","1"]]}})"));
  CHECK(pairs == leq);
  CHECK(proximity_from_json(alg, proximity_to_json(pairs)) == pairs);
}

TEST_CASE("morphism JSON") {
  auto j = Json::parse(R"({"source":{"atoms":["p","q"]},"target":{"atoms":["x"]},
                           "map":{"0":"0","[p]":"1","[q]":"0","1":"1"}})");
  auto m = morphism_from_json(j);
  CHECK(m.table() == std::vector<AtomMask>{0, 1, 0, 1});
  CHECK(morphism_from_json(morphism_to_json(m)) == m);
  j["map"].erase("[q]");
  CHECK_THROWS_AS(morphism_from_json(j), Error);
}
