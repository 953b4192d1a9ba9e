#include "specker/text.hpp"

namespace specker {

namespace {

std::string bare(const IdElem& e) {
  if (e.is_zero()) return "0";
  if (e.is_one()) return "1";
  std::string out;
  const auto& atoms = e.algebra()->atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if ((e.bits() >> i) & 1) {
      if (!out.empty()) out += ',';
      out += atoms[i];
    }
  }
  return out;
}

}  // namespace

std::string to_text(const PerpElem& f) {
  std::string out;
  for (const auto& entry : f.entries()) {
    if (!out.empty()) out += " + ";
    out += entry.value.to_string() + "·" + IdElem(f.algebra(), entry.idem).to_string();
  }
  return out;
}

std::string to_text(const FlatElem& f) {
  std::string out;
  for (const auto& step : f.steps()) {
    if (!out.empty()) out += ' ';
    out += "[" + bare(IdElem(f.algebra(), step.idem)) + " | " + step.upto.to_string() + "]";
  }
  return out;
}

}  // namespace specker
