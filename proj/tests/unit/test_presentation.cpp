#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "specker/error.hpp"
#include "specker/oracle.hpp"
#include "specker/presentation.hpp"
#include "specker/sampling.hpp"
#include "support/random_terms.hpp"

using namespace specker;

namespace {

PerpElem norm(const std::string& text, const AlgebraPtr& alg) { return normalize_term(*parse_term(text), alg); }

}  // namespace

TEST_CASE("parse_term shapes") {
  CHECK(parse_term("x_p * x_p + 3*x_q - x_p")->to_sexpr() == "(- (+ (* x_p x_p) (* 3 x_q)) x_p)");
  CHECK(parse_term("meet(x_p, 2)")->to_sexpr() == "(meet x_p 2)");
  CHECK(parse_term("-x_p^2")->to_sexpr() == "(^ (neg x_p) 2)");
  CHECK(parse_term("2*x_p^3")->to_sexpr() == "(* 2 (^ x_p 3))");
  CHECK(parse_term("1/2 - -x_q")->to_sexpr() == "(- 1/2 (neg x_q))");
}

TEST_CASE("parse_term errors carry a position") {
  try {
    (void)parse_term("x_p ^");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    REQUIRE(e.position().has_value());
    CHECK(*e.position() == 5);
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_term("(x_p"), Error);
  CHECK_THROWS_AS(parse_term("x_p +"), Error);
  CHECK_THROWS_AS(parse_term("foo(x_p)"), Error);
  CHECK_THROWS_AS(parse_term("x_p $ 2"), Error);
}

TEST_CASE("normalize_term examples") {
  auto alg = fixture::b4();
  auto p = fixture::p(alg), q = fixture::q(alg);
  CHECK(norm("x_p * x_q", alg) == PerpElem::constant(alg, 0));
  CHECK(norm("x_p * x_p + 3*x_q - x_p", alg) == perp_normalize(alg, {{3, q}, {0, p}}));
  CHECK(norm("1 - x_p", alg) == perp_normalize(alg, {{1, q}, {0, p}}));
  try {
    (void)norm("x_r + 1", alg);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unbound_name);
  }
}

TEST_CASE("relators vanish on B4") {
  auto alg = fixture::b4();
  Binding binding;
  auto all = all_elements(alg);
  for (const auto& e : all) binding.emplace("x_e" + std::to_string(e.bits()), e);
  auto name = [](const IdElem& e) { return "x_e" + std::to_string(e.bits()); };
  auto zero = PerpElem::constant(alg, 0);
  auto eval = [&](const std::string& text) { return normalize_term(*parse_term(text), alg, binding); };
  CHECK(eval(name(IdElem::zero(alg))) == zero);
  for (const auto& e : all) {
    CHECK(eval(name(~e) + " - (1 - " + name(e) + ")") == zero);
    for (const auto& f : all) {
      CHECK(eval(name(e & f) + " - " + name(e) + "*" + name(f)) == zero);
      CHECK(eval(name(e | f) + " - (" + name(e) + " + " + name(f) + " - " + name(e) + "*" + name(f) + ")") == zero);
    }
  }
}

TEST_CASE("random terms agree with the pointwise model") {
  auto alg = fixture::b4();
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    auto g = test_support::random_term(alg, rng, 5);
    CAPTURE(g.text);
    CHECK(stone_eval(norm(g.text, alg)) == g.value);
  }
}

TEST_CASE("equal semantics give identical normal forms") {
  auto alg = fixture::b4();
  CHECK(norm("(x_p + x_q)^3", alg) == norm("1", alg));
  CHECK(norm("x_p*x_p*2 + x_q", alg) == norm("join(2*x_p, x_q)", alg));
  CHECK(norm("-(x_p - 1)", alg) == norm("x_q", alg));
}
