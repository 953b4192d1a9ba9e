#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "specker/boolalg.hpp"

namespace specker {

/// Outcome of one axiom or identity in a verification run. A failing outcome
/// carries the first counterexample found.
struct AxiomOutcome {
  std::string axiom;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;
  std::vector<AtomMask> witness_masks;  // for exhaustive boolean-level checks

  void fail_with(std::string text, std::vector<AtomMask> masks = {}) {
    if (!passed) return;  // keep the first counterexample
    passed = false;
    witness = std::move(text);
    witness_masks = std::move(masks);
  }
};

struct ProxReport {
  std::string subject;
  std::deque<AxiomOutcome> axioms;  // add() keeps earlier references valid
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  bool passed() const;
  const AxiomOutcome* first_failure() const;
  const AxiomOutcome* find(const std::string& axiom) const;
  AxiomOutcome& add(std::string axiom);
  /// `PASS (n axioms)` or `FAIL <axiom>: <witness>`.
  std::string summary() const;
};

}  // namespace specker
