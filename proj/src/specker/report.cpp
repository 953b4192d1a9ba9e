#include "specker/report.hpp"

namespace specker {

bool ProxReport::passed() const { return first_failure() == nullptr; }

const AxiomOutcome* ProxReport::first_failure() const {
  for (const auto& a : axioms) {
    if (!a.passed) return &a;
  }
  return nullptr;
}

const AxiomOutcome* ProxReport::find(const std::string& axiom) const {
  for (const auto& a : axioms) {
    if (a.axiom == axiom) return &a;
  }
  return nullptr;
}

AxiomOutcome& ProxReport::add(std::string axiom) {
  AxiomOutcome o;
  o.axiom = std::move(axiom);
  axioms.push_back(std::move(o));
  return axioms.back();
}

std::string ProxReport::summary() const {
  if (const auto* f = first_failure()) return "FAIL " + f->axiom + ": " + f->witness;
  return "PASS (" + std::to_string(axioms.size()) + " axioms)";
}

}  // namespace specker
