#include "devlab/reduction.hpp"

#include <utility>

#include "devlab/error.hpp"

namespace devlab {

namespace {

void collect_redexes(const Term& t, Path& here, std::vector<Path>& out) {
  switch (t.kind()) {
    case Kind::Var:
      return;
    case Kind::Lam:
      here.steps.push_back(Step::LamBody);
      collect_redexes(t.body(), here, out);
      here.steps.pop_back();
      return;
    case Kind::App:
      here.steps.push_back(Step::AppFun);
      collect_redexes(t.fun(), here, out);
      here.steps.back() = Step::AppArg;
      collect_redexes(t.arg(), here, out);
      here.steps.pop_back();
      return;
    case Kind::Red:
      out.push_back(here);
      here.steps.push_back(Step::RedBody);
      collect_redexes(t.body(), here, out);
      here.steps.back() = Step::RedArg;
      collect_redexes(t.arg(), here, out);
      here.steps.pop_back();
      return;
  }
}

// Rebuilds the term with the redex at steps[i..] contracted.
Term contract_rec(const Term& t, const Path& path, std::size_t i) {
  if (i == path.steps.size()) {
    if (t.kind() != Kind::Red)
      throw Error(ErrorCode::InvalidPath, "path does not address a marked redex");
    return subst(t.body(), t.name(), t.arg());
  }
  const Step step = path.steps[i];
  switch (t.kind()) {
    case Kind::Lam:
      if (step == Step::LamBody)
        return Term::lam(t.name(), contract_rec(t.body(), path, i + 1));
      break;
    case Kind::App:
      if (step == Step::AppFun)
        return Term::app(contract_rec(t.fun(), path, i + 1), t.arg());
      if (step == Step::AppArg)
        return Term::app(t.fun(), contract_rec(t.arg(), path, i + 1));
      break;
    case Kind::Red:
      if (step == Step::RedBody)
        return Term::red(t.name(), contract_rec(t.body(), path, i + 1), t.arg());
      if (step == Step::RedArg)
        return Term::red(t.name(), t.body(), contract_rec(t.arg(), path, i + 1));
      break;
    case Kind::Var:
      break;
  }
  throw Error(ErrorCode::InvalidPath, "path step does not match term shape");
}

}  // namespace

std::vector<Path> redex_positions(const Term& term) {
  std::vector<Path> out;
  Path here;
  collect_redexes(term, here, out);
  return out;
}

Term contract(const Term& term, const Path& path) {
  return contract_rec(term, path, 0);
}

std::vector<Reduct> one_step_all(const Term& term) {
  std::vector<Reduct> out;
  for (Path& p : redex_positions(term)) {
    Term r = contract(term, p);
    out.push_back(Reduct{std::move(p), std::move(r)});
  }
  return out;
}

bool validate_trace(const Trace& trace) {
  const Term* cur = &trace.start;
  for (const TraceStep& step : trace.steps) {
    try {
      if (!alpha_eq(contract(*cur, step.redex), step.result)) return false;
    } catch (const Error&) {
      return false;
    }
    cur = &step.result;
  }
  return true;
}

bool is_complete(const Trace& trace) {
  return is_nf(trace.final_term());
}

}  // namespace devlab
