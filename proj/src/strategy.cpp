#include "devlab/strategy.hpp"

#include <utility>

#include "devlab/error.hpp"
#include "devlab/metrics.hpp"

namespace devlab {

namespace {

// Whether the strategy, standing on a marked redex, should step inside the
// argument before contracting the head.
bool wants_arg_first(const Term& red, bool minimal) {
  if (is_nf(red.arg())) return false;
  if (minimal) {
    // Some copy of the argument survives every development, so its redexes
    // must be dealt with; do it once, before any duplication.
    return !min_copies(red.name(), red.body()).is_zero();
  }
  // At most one copy survives even the most duplicating development, so the
  // argument's redexes must be contracted now lest they be erased.
  return max_copies(red.name(), red.body()) <= Count(1);
}

Term step_rec(const Term& t, bool minimal, Path& here, Path& redex_out) {
  switch (t.kind()) {
    case Kind::Var:
      break;  // fall through to the internal error: Var has no redex
    case Kind::Lam:
      here.steps.push_back(Step::LamBody);
      {
        Term body = step_rec(t.body(), minimal, here, redex_out);
        here.steps.pop_back();
        return Term::lam(t.name(), std::move(body));
      }
    case Kind::App:
      if (!is_nf(t.fun())) {
        here.steps.push_back(Step::AppFun);
        Term fun = step_rec(t.fun(), minimal, here, redex_out);
        here.steps.pop_back();
        return Term::app(std::move(fun), t.arg());
      } else {
        here.steps.push_back(Step::AppArg);
        Term arg = step_rec(t.arg(), minimal, here, redex_out);
        here.steps.pop_back();
        return Term::app(t.fun(), std::move(arg));
      }
    case Kind::Red:
      if (wants_arg_first(t, minimal)) {
        here.steps.push_back(Step::RedArg);
        Term arg = step_rec(t.arg(), minimal, here, redex_out);
        here.steps.pop_back();
        return Term::red(t.name(), t.body(), std::move(arg));
      }
      redex_out = here;
      return subst(t.body(), t.name(), t.arg());
  }
  throw Error(ErrorCode::Internal, "strategy descended into a normal form");
}

StepChoice step(const Term& term, bool minimal) {
  if (is_nf(term))
    throw Error(ErrorCode::AlreadyNormal, "term is already in normal form");
  Path here;
  Path redex;
  Term result = step_rec(term, minimal, here, redex);
  return StepChoice{std::move(redex), std::move(result)};
}

Trace trace(const Term& start, bool minimal) {
  Trace out{start, {}};
  Term cur = start;
  while (!is_nf(cur)) {
    StepChoice next = step(cur, minimal);
    cur = next.result;
    out.steps.push_back(TraceStep{std::move(next.redex), std::move(next.result)});
  }
  return out;
}

}  // namespace

StepChoice shortest_step(const Term& term) { return step(term, /*minimal=*/true); }

StepChoice longest_step(const Term& term) { return step(term, /*minimal=*/false); }

Trace shortest_trace(const Term& start) { return trace(start, /*minimal=*/true); }

Trace longest_trace(const Term& start) { return trace(start, /*minimal=*/false); }

}  // namespace devlab
