#pragma once

#include <string>

#include "specker/flat.hpp"
#include "specker/perp.hpp"

namespace specker {

/// `2·[p] + 0·[q]`, descending values; a single class covering 1 prints `a·1`.
std::string to_text(const PerpElem& f);
/// `[1 | 0] [p | 2]`: one `[idempotent | threshold]` group per step.
std::string to_text(const FlatElem& f);

}  // namespace specker
