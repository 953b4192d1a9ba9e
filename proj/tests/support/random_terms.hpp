#pragma once

#include <random>
#include <string>

#include "specker/oracle.hpp"
#include "specker/perp.hpp"
#include "specker/sampling.hpp"

namespace test_support {

using namespace specker;

// Random term text together with its pointwise value.
struct Generated {
  std::string text;
  PointFn value;
};

inline Generated random_term(const AlgebraPtr& alg, Rng& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
  auto leaf_literal = [&] {
    long v = std::uniform_int_distribution<long>(0, 5)(rng);
    return Generated{std::to_string(v), stone_eval(PerpElem::constant(alg, v))};
  };
  auto leaf_gen = [&] {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, alg->atom_count() - 1)(rng);
    return Generated{"x_" + alg->atoms()[i], stone_eval(idem_embed_perp(IdElem(alg, AtomMask{1} << i)))};
  };
  switch (pick(rng)) {
    case 0: return leaf_literal();
    case 1: return leaf_gen();
    case 2: {
      auto a = random_term(alg, rng, depth - 1), b = random_term(alg, rng, depth - 1);
      return {"(" + a.text + " + " + b.text + ")", oracle_apply("add", {a.value, b.value})};
    }
    case 3: {
      auto a = random_term(alg, rng, depth - 1), b = random_term(alg, rng, depth - 1);
      return {"(" + a.text + " - " + b.text + ")", oracle_apply("sub", {a.value, b.value})};
    }
    case 4: {
      auto a = random_term(alg, rng, depth - 1), b = random_term(alg, rng, depth - 1);
      return {a.text + " * " + b.text, oracle_apply("mul", {a.value, b.value})};
    }
    case 5: {
      auto a = random_term(alg, rng, depth - 1);
      return {"-(" + a.text + ")", oracle_apply("neg", {a.value})};
    }
    case 6: {
      auto a = random_term(alg, rng, depth - 1), b = random_term(alg, rng, depth - 1);
      return {"meet(" + a.text + ", " + b.text + ")", oracle_apply("min", {a.value, b.value})};
    }
    case 7: {
      auto a = random_term(alg, rng, depth - 1), b = random_term(alg, rng, depth - 1);
      return {"join(" + a.text + ", " + b.text + ")", oracle_apply("max", {a.value, b.value})};
    }
    default: {
      auto a = random_term(alg, rng, depth - 1);
      return {"(" + a.text + ")^2", oracle_apply("mul", {a.value, a.value})};
    }
  }
}

}  // namespace test_support
