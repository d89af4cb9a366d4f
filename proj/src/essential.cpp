#include "devlab/essential.hpp"

#include "devlab/error.hpp"
#include "devlab/metrics.hpp"

namespace devlab {

namespace {

Term child(const Term& t, Step s) {
  switch (s) {
    case Step::LamBody:
      if (t.kind() == Kind::Lam) return t.body();
      break;
    case Step::AppFun:
      if (t.kind() == Kind::App) return t.fun();
      break;
    case Step::AppArg:
      if (t.kind() == Kind::App) return t.arg();
      break;
    case Step::RedBody:
      if (t.kind() == Kind::Red) return t.body();
      break;
    case Step::RedArg:
      if (t.kind() == Kind::Red) return t.arg();
      break;
  }
  throw Error(ErrorCode::InvalidPath, "path step does not match term shape");
}

bool binder_needed(const Term& red) {
  return !min_copies(red.name(), red.body()).is_zero();
}

void collect_essential(const Term& t, Path& here, std::vector<Path>& out) {
  switch (t.kind()) {
    case Kind::Var:
      return;
    case Kind::Lam:
      here.steps.push_back(Step::LamBody);
      collect_essential(t.body(), here, out);
      here.steps.pop_back();
      return;
    case Kind::App:
      here.steps.push_back(Step::AppFun);
      collect_essential(t.fun(), here, out);
      here.steps.back() = Step::AppArg;
      collect_essential(t.arg(), here, out);
      here.steps.pop_back();
      return;
    case Kind::Red:
      out.push_back(here);
      here.steps.push_back(Step::RedBody);
      collect_essential(t.body(), here, out);
      // Redexes inside the argument are essential only if some copy of the
      // argument survives every development; otherwise the whole subtree is
      // inessential and can be skipped.
      if (binder_needed(t)) {
        here.steps.back() = Step::RedArg;
        collect_essential(t.arg(), here, out);
      }
      here.steps.pop_back();
      return;
  }
}

}  // namespace

bool is_essential(const Term& term, const Path& path) {
  if (subterm_at(term, path).kind() != Kind::Red)
    throw Error(ErrorCode::InvalidPath, "path does not address a marked redex");
  Term cur = term;
  for (Step s : path.steps) {
    if (cur.kind() == Kind::Red && s == Step::RedArg && !binder_needed(cur))
      return false;
    cur = child(cur, s);
  }
  return true;
}

std::vector<Path> essential_set(const Term& term) {
  std::vector<Path> out;
  Path here;
  collect_essential(term, here, out);
  return out;
}

}  // namespace devlab
