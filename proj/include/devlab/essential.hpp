#pragma once

#include <vector>

#include "devlab/term.hpp"

namespace devlab {

// Whether the marked redex at `path` is essential: every complete development
// of `term` contracts it or one of its residuals. A redex escapes contraction
// only by sitting inside an argument some development erases, so essentiality
// reduces to a walk down the path: each time it enters a redex's argument the
// surrounding binder must be needed (min_copies > 0).
//
// Throws Error(InvalidPath) unless `path` addresses a Red node.
bool is_essential(const Term& term, const Path& path);

// All essential redex positions, leftmost-outermost (same order as
// redex_positions). Its size always equals shortest_dev_length(term).
std::vector<Path> essential_set(const Term& term);

}  // namespace devlab
