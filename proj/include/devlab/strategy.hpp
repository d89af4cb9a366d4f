#pragma once

#include "devlab/reduction.hpp"
#include "devlab/term.hpp"

namespace devlab {

// One strategy step: which redex was contracted and the resulting term.
struct StepChoice {
  Path redex;
  Term result;
};

// One step of the shortest-development strategy. On a marked redex
// (\*y. P) Q it develops Q first when at least one copy of Q must be reduced
// anyway (min_copies(y, P) >= 1) and Q is not yet normal; otherwise it
// contracts the head, erasing Q's work if nothing needs it. Applications are
// stepped in their leftmost non-normal component.
//
// Throws Error(AlreadyNormal) if the term has no redex. Guarantees
// shortest_dev_length drops by exactly one.
StepChoice shortest_step(const Term& term);

// Dual one-step strategy: develops the argument first when at most one copy
// of it survives a longest development (max_copies(y, P) <= 1), and contracts
// the head first when the argument would be duplicated. longest_dev_length
// drops by exactly one.
StepChoice longest_step(const Term& term);

// Iterates shortest_step/longest_step from `start` to normal form, recording
// every step. The trace lengths are exactly shortest_dev_length(start) resp.
// longest_dev_length(start); an already-normal start yields an empty trace.
Trace shortest_trace(const Term& start);
Trace longest_trace(const Term& start);

}  // namespace devlab
