#pragma once

#include "specker/boolalg.hpp"
#include "specker/flat.hpp"
#include "specker/perp.hpp"

namespace fixture {

using namespace specker;

inline AlgebraPtr b2() { return Algebra::make({"x"}); }
inline AlgebraPtr b4() { return Algebra::make({"p", "q"}); }
inline AlgebraPtr b8() { return Algebra::make({"a", "b", "c"}); }

inline IdElem p(const AlgebraPtr& alg) { return IdElem::atom(alg, "p"); }
inline IdElem q(const AlgebraPtr& alg) { return IdElem::atom(alg, "q"); }

// s = {2↦p, 0↦q}, t = {3↦p, 1↦q}
inline PerpElem s(const AlgebraPtr& alg) { return perp_normalize(alg, {{2, p(alg)}, {0, q(alg)}}); }
inline PerpElem t(const AlgebraPtr& alg) { return perp_normalize(alg, {{3, p(alg)}, {1, q(alg)}}); }

inline FlatElem flat(const AlgebraPtr& alg, std::vector<Step> steps) {
  return FlatElem::from_steps(alg, std::move(steps));
}
inline FlatElem s_flat(const AlgebraPtr& alg) { return flat(alg, {{0, 3}, {2, 1}}); }
inline FlatElem t_flat(const AlgebraPtr& alg) { return flat(alg, {{1, 3}, {3, 1}}); }

}  // namespace fixture
