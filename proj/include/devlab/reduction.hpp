#pragma once

#include <cstddef>
#include <vector>

#include "devlab/term.hpp"

namespace devlab {

// Paths of all marked redexes, in leftmost-outermost (pre-order) order.
// Empty exactly when the term is a normal form.
std::vector<Path> redex_positions(const Term& term);

// Contracts the marked redex at `path`: (\*y. P) Q becomes P[y:=Q]. Throws
// Error(InvalidPath) unless the path addresses a Red node.
Term contract(const Term& term, const Path& path);

struct Reduct {
  Path redex;
  Term result;
};

// Every one-step reduct, one per redex position, in position order.
std::vector<Reduct> one_step_all(const Term& term);

struct TraceStep {
  Path redex;
  Term result;
};

// A development: the start term and the sequence of contraction steps.
struct Trace {
  Term start;
  std::vector<TraceStep> steps;

  std::size_t length() const { return steps.size(); }
  const Term& final_term() const { return steps.empty() ? start : steps.back().result; }
};

// Checks every step: the path addresses a redex of the preceding term and the
// recorded result is alpha-equal to its contraction.
bool validate_trace(const Trace& trace);

// True iff the trace ends in a normal form.
bool is_complete(const Trace& trace);

}  // namespace devlab
