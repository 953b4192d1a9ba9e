#include <doctest.h>

#include "fixtures.hpp"
#include "specker/oracle.hpp"

using namespace specker;

namespace {

PointFn point(const AlgebraPtr& alg, std::vector<Scalar> values) { return PointFn{alg, std::move(values)}; }

}  // namespace

TEST_CASE("stone_eval read-off") {
  auto alg = fixture::b4();
  CHECK(stone_eval(fixture::s(alg)) == point(alg, {2, 0}));
  CHECK(stone_eval(FlatElem::constant(alg, 1)) == point(alg, {1, 1}));
  CHECK(stone_eval(fixture::t_flat(alg)) == point(alg, {3, 1}));
  CHECK(stone_eval(fixture::s(alg)).to_string() == "{p↦2, q↦0}");
}

TEST_CASE("oracle_apply is pointwise") {
  auto alg = fixture::b4();
  auto s = point(alg, {2, 0}), t = point(alg, {3, 1});
  CHECK(oracle_apply("add", {s, t}) == point(alg, {5, 1}));
  CHECK(oracle_apply("min", {s, t}) == point(alg, {2, 0}));
  CHECK(oracle_apply("scalar", {s}, Scalar(3)) == point(alg, {6, 0}));
  CHECK_THROWS(oracle_apply("add", {s}));
  CHECK_THROWS(oracle_apply("pow", {s, t}));
}

TEST_CASE("stone_eval is a bijection on B4 with values in [-3,3]") {
  auto alg = fixture::b4();
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      auto f = point(alg, {a, b});
      auto elem = from_point_fn(f);
      CHECK(stone_eval(elem) == f);
      CHECK(stone_eval(alpha(elem)) == f);
      CHECK(from_point_fn(stone_eval(elem)) == elem);
    }
  }
}

TEST_CASE("oracle_diff") {
  auto alg = fixture::b4();
  auto clean = oracle_diff(alg, 1, 200, 10);
  CHECK(clean.passed());
  CHECK(clean.records.size() == 200 * 20);

  auto empty = oracle_diff(alg, 1, 0, 10);
  CHECK(empty.passed());
  CHECK(empty.records.empty());

  OperationTable broken;
  broken.flat_add = [](const FlatElem& f, const FlatElem& g) {
    FlatElem sum = specker::flat_add(f, g);
    std::vector<Step> steps = sum.steps();
    steps.back().upto += Scalar(1);  // off by one at the top threshold
    return FlatElem::from_steps(sum.algebra(), std::move(steps));
  };
  auto report = oracle_diff(alg, 1, 20, 10, broken);
  REQUIRE_FALSE(report.passed());
  CHECK(report.first_mismatch()->op == "flat_add");
  CHECK(report.first_mismatch()->witness.find("expected") != std::string::npos);
  auto jsonl = report.to_jsonl();
  CHECK(jsonl.find("\"status\":\"fail\"") != std::string::npos);
  CHECK(jsonl.find("\"witness\"") != std::string::npos);

  CHECK(oracle_diff(alg, 5, 10, 10).to_jsonl() == oracle_diff(alg, 5, 10, 10).to_jsonl());
}
