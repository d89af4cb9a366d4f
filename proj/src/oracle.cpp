#include "devlab/oracle.hpp"

#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "devlab/error.hpp"
#include "devlab/reduction.hpp"

namespace devlab {

// --- dev_stats ---------------------------------------------------------

namespace {

// One in-progress node of the graph search: its canonical key, its one-step
// reducts still to be solved, and the best lengths over solved ones.
struct SearchFrame {
  std::string key;
  std::vector<Term> children;
  std::size_t next = 0;
  bool any_child_done = false;
  Count best_short;
  Count best_long;
};

}  // namespace

DevStats dev_stats(const Term& term, std::uint64_t state_limit) {
  if (state_limit == 0)
    throw Error(ErrorCode::BadArgument, "state limit must be positive");

  // Lengths from each fully solved state, keyed by alpha-canonical form.
  std::unordered_map<std::string, std::pair<Count, Count>> memo;
  std::unordered_set<std::string> on_path;
  std::vector<SearchFrame> stack;
  std::uint64_t seen = 0;

  const auto push_state = [&](const Term& t, std::string key) -> bool {
    if (seen == state_limit) return false;
    ++seen;
    on_path.insert(key);
    SearchFrame frame;
    frame.key = std::move(key);
    for (Reduct& r : one_step_all(t)) frame.children.push_back(std::move(r.result));
    stack.push_back(std::move(frame));
    return true;
  };

  const std::string root_key = canonical_key(term);
  DevStats stats;
  if (!push_state(term, root_key)) {
    stats.states = seen;
    return stats;
  }

  while (!stack.empty()) {
    SearchFrame& top = stack.back();
    if (top.next < top.children.size()) {
      const Term& child = top.children[top.next];
      std::string child_key = canonical_key(child);
      if (const auto it = memo.find(child_key); it != memo.end()) {
        const auto& [s, l] = it->second;
        if (!top.any_child_done) {
          top.best_short = s;
          top.best_long = l;
          top.any_child_done = true;
        } else {
          top.best_short = count_min(top.best_short, s);
          top.best_long = count_max(top.best_long, l);
        }
        ++top.next;
        continue;
      }
      if (on_path.count(child_key))
        throw Error(ErrorCode::Cycle,
                    "development graph contains a cycle; the reducer is broken");
      if (!push_state(child, std::move(child_key))) {
        stats.states = seen;
        return stats;  // limit hit: complete stays false, lengths unset
      }
      continue;
    }
    // All reducts solved (none for a normal form): record and pop.
    const bool normal = top.children.empty();
    memo.emplace(top.key,
                 normal ? std::make_pair(Count(0), Count(0))
                        : std::make_pair(top.best_short + Count(1), top.best_long + Count(1)));
    on_path.erase(top.key);
    stack.pop_back();
  }

  const auto& [s, l] = memo.at(root_key);
  stats.shortest = s;
  stats.longest = l;
  stats.states = seen;
  stats.complete = true;
  return stats;
}

// --- labeled terms ------------------------------------------------------

struct LabeledTerm::Node {
  Kind kind;
  VarName name;
  std::uint64_t label;  // Red only
  NodePtr a;            // Lam/Red body, App fun
  NodePtr b;            // App/Red arg
};

LabeledTerm LabeledTerm::var(VarName name) {
  return LabeledTerm(std::make_shared<Node>(Node{Kind::Var, std::move(name), 0, nullptr, nullptr}));
}

LabeledTerm LabeledTerm::lam(VarName binder, LabeledTerm body) {
  return LabeledTerm(
      std::make_shared<Node>(Node{Kind::Lam, std::move(binder), 0, std::move(body.node_), nullptr}));
}

LabeledTerm LabeledTerm::app(LabeledTerm fun, LabeledTerm arg) {
  return LabeledTerm(std::make_shared<Node>(
      Node{Kind::App, VarName{}, 0, std::move(fun.node_), std::move(arg.node_)}));
}

LabeledTerm LabeledTerm::red(std::uint64_t label, VarName binder, LabeledTerm body,
                             LabeledTerm arg) {
  return LabeledTerm(std::make_shared<Node>(
      Node{Kind::Red, std::move(binder), label, std::move(body.node_), std::move(arg.node_)}));
}

Kind LabeledTerm::kind() const { return node_->kind; }
const VarName& LabeledTerm::name() const { return node_->name; }
std::uint64_t LabeledTerm::label() const { return node_->label; }
LabeledTerm LabeledTerm::body() const { return LabeledTerm(node_->a); }
LabeledTerm LabeledTerm::fun() const { return LabeledTerm(node_->a); }
LabeledTerm LabeledTerm::arg() const { return LabeledTerm(node_->b); }

namespace {

LabeledTerm label_rec(const Term& t, std::uint64_t& next) {
  switch (t.kind()) {
    case Kind::Var:
      return LabeledTerm::var(t.name());
    case Kind::Lam:
      return LabeledTerm::lam(t.name(), label_rec(t.body(), next));
    case Kind::App: {
      LabeledTerm fun = label_rec(t.fun(), next);
      LabeledTerm arg = label_rec(t.arg(), next);
      return LabeledTerm::app(std::move(fun), std::move(arg));
    }
    case Kind::Red: {
      const std::uint64_t id = next++;
      LabeledTerm body = label_rec(t.body(), next);
      LabeledTerm arg = label_rec(t.arg(), next);
      return LabeledTerm::red(id, t.name(), std::move(body), std::move(arg));
    }
  }
  throw Error(ErrorCode::Internal, "corrupt term node");
}

void lcollect_free(const LabeledTerm& t, std::vector<VarName>& bound, std::set<VarName>& out) {
  switch (t.kind()) {
    case Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      return;
    case Kind::Lam:
      bound.push_back(t.name());
      lcollect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case Kind::App:
      lcollect_free(t.fun(), bound, out);
      lcollect_free(t.arg(), bound, out);
      return;
    case Kind::Red:
      bound.push_back(t.name());
      lcollect_free(t.body(), bound, out);
      bound.pop_back();
      lcollect_free(t.arg(), bound, out);
      return;
  }
}

std::set<VarName> lfree_vars(const LabeledTerm& t) {
  std::set<VarName> out;
  std::vector<VarName> bound;
  lcollect_free(t, bound, out);
  return out;
}

bool loccurs_free(const LabeledTerm& t, const VarName& x) {
  switch (t.kind()) {
    case Kind::Var: return t.name() == x;
    case Kind::Lam: return t.name() != x && loccurs_free(t.body(), x);
    case Kind::App: return loccurs_free(t.fun(), x) || loccurs_free(t.arg(), x);
    case Kind::Red:
      return (t.name() != x && loccurs_free(t.body(), x)) || loccurs_free(t.arg(), x);
  }
  return false;
}

LabeledTerm lsubst_rec(const LabeledTerm& t, const VarName& x, const LabeledTerm& n,
                       const std::set<VarName>& fv_n);

// Mirror of the unlabeled substitution's binder handling; labels never affect
// binding, only ride along.
std::pair<VarName, LabeledTerm> lsubst_under_binder(const VarName& binder,
                                                    const LabeledTerm& body, const VarName& x,
                                                    const LabeledTerm& n,
                                                    const std::set<VarName>& fv_n) {
  if (binder == x || !loccurs_free(body, x)) return {binder, body};
  if (fv_n.count(binder)) {
    std::set<VarName> avoid = fv_n;
    auto body_free = lfree_vars(body);
    avoid.insert(body_free.begin(), body_free.end());
    avoid.insert(x);
    const VarName renamed = fresh_name(binder, avoid);
    const LabeledTerm renamed_body =
        lsubst_rec(body, binder, LabeledTerm::var(renamed), {renamed});
    return {renamed, lsubst_rec(renamed_body, x, n, fv_n)};
  }
  return {binder, lsubst_rec(body, x, n, fv_n)};
}

LabeledTerm lsubst_rec(const LabeledTerm& t, const VarName& x, const LabeledTerm& n,
                       const std::set<VarName>& fv_n) {
  switch (t.kind()) {
    case Kind::Var:
      return t.name() == x ? n : t;
    case Kind::App:
      return LabeledTerm::app(lsubst_rec(t.fun(), x, n, fv_n), lsubst_rec(t.arg(), x, n, fv_n));
    case Kind::Lam: {
      auto [binder, body] = lsubst_under_binder(t.name(), t.body(), x, n, fv_n);
      return LabeledTerm::lam(binder, body);
    }
    case Kind::Red: {
      auto [binder, body] = lsubst_under_binder(t.name(), t.body(), x, n, fv_n);
      return LabeledTerm::red(t.label(), binder, body, lsubst_rec(t.arg(), x, n, fv_n));
    }
  }
  throw Error(ErrorCode::Internal, "corrupt term node");
}

LabeledTerm lsubst(const LabeledTerm& t, const VarName& x, const LabeledTerm& n) {
  return lsubst_rec(t, x, n, lfree_vars(n));
}

void lcollect_redexes(const LabeledTerm& t, Path& here, std::vector<Path>& out) {
  switch (t.kind()) {
    case Kind::Var:
      return;
    case Kind::Lam:
      here.steps.push_back(Step::LamBody);
      lcollect_redexes(t.body(), here, out);
      here.steps.pop_back();
      return;
    case Kind::App:
      here.steps.push_back(Step::AppFun);
      lcollect_redexes(t.fun(), here, out);
      here.steps.back() = Step::AppArg;
      lcollect_redexes(t.arg(), here, out);
      here.steps.pop_back();
      return;
    case Kind::Red:
      out.push_back(here);
      here.steps.push_back(Step::RedBody);
      lcollect_redexes(t.body(), here, out);
      here.steps.back() = Step::RedArg;
      lcollect_redexes(t.arg(), here, out);
      here.steps.pop_back();
      return;
  }
}

LabeledTerm lcontract_rec(const LabeledTerm& t, const Path& path, std::size_t i) {
  if (i == path.steps.size()) {
    if (t.kind() != Kind::Red)
      throw Error(ErrorCode::InvalidPath, "path does not address a marked redex");
    return lsubst(t.body(), t.name(), t.arg());
  }
  const Step step = path.steps[i];
  switch (t.kind()) {
    case Kind::Lam:
      if (step == Step::LamBody)
        return LabeledTerm::lam(t.name(), lcontract_rec(t.body(), path, i + 1));
      break;
    case Kind::App:
      if (step == Step::AppFun)
        return LabeledTerm::app(lcontract_rec(t.fun(), path, i + 1), t.arg());
      if (step == Step::AppArg)
        return LabeledTerm::app(t.fun(), lcontract_rec(t.arg(), path, i + 1));
      break;
    case Kind::Red:
      if (step == Step::RedBody)
        return LabeledTerm::red(t.label(), t.name(), lcontract_rec(t.body(), path, i + 1),
                                t.arg());
      if (step == Step::RedArg)
        return LabeledTerm::red(t.label(), t.name(), t.body(),
                                lcontract_rec(t.arg(), path, i + 1));
      break;
    case Kind::Var:
      break;
  }
  throw Error(ErrorCode::InvalidPath, "path step does not match term shape");
}

LabeledTerm lsubterm_at(const LabeledTerm& t, const Path& path) {
  LabeledTerm cur = t;
  for (Step s : path.steps) {
    switch (s) {
      case Step::LamBody:
        if (cur.kind() != Kind::Lam) throw Error(ErrorCode::InvalidPath, "expected abstraction");
        cur = cur.body();
        break;
      case Step::AppFun:
        if (cur.kind() != Kind::App) throw Error(ErrorCode::InvalidPath, "expected application");
        cur = cur.fun();
        break;
      case Step::AppArg:
        if (cur.kind() != Kind::App) throw Error(ErrorCode::InvalidPath, "expected application");
        cur = cur.arg();
        break;
      case Step::RedBody:
        if (cur.kind() != Kind::Red) throw Error(ErrorCode::InvalidPath, "expected marked redex");
        cur = cur.body();
        break;
      case Step::RedArg:
        if (cur.kind() != Kind::Red) throw Error(ErrorCode::InvalidPath, "expected marked redex");
        cur = cur.arg();
        break;
    }
  }
  return cur;
}

// Canonical key of a labeled term where the only label information kept is
// whether a redex is a residual of the search target. Collapsing all other
// labels keeps the memo table small without changing any answer.
void ltarget_key_rec(const LabeledTerm& t, std::uint64_t target, std::vector<VarName>& env,
                     std::string& out) {
  switch (t.kind()) {
    case Kind::Var: {
      long long idx = -1;
      for (std::size_t i = env.size(); i > 0; --i) {
        if (env[i - 1] == t.name()) {
          idx = static_cast<long long>(env.size() - i);
          break;
        }
      }
      if (idx >= 0) {
        out += 'b';
        out += std::to_string(idx);
      } else {
        out += 'f';
        out += t.name().text;
      }
      out += ';';
      return;
    }
    case Kind::Lam:
      out += 'L';
      env.push_back(t.name());
      ltarget_key_rec(t.body(), target, env, out);
      env.pop_back();
      return;
    case Kind::App:
      out += 'A';
      ltarget_key_rec(t.fun(), target, env, out);
      ltarget_key_rec(t.arg(), target, env, out);
      return;
    case Kind::Red:
      out += 'R';
      out += (t.label() == target) ? '!' : '.';
      env.push_back(t.name());
      ltarget_key_rec(t.body(), target, env, out);
      env.pop_back();
      ltarget_key_rec(t.arg(), target, env, out);
      return;
  }
}

std::string ltarget_key(const LabeledTerm& t, std::uint64_t target) {
  std::string out;
  std::vector<VarName> env;
  ltarget_key_rec(t, target, env, out);
  return out;
}

// True iff some complete development of `t` never contracts a redex labeled
// `target`. Memoized on the target-aware canonical form; `seen` counts the
// distinct states expanded.
bool avoid_rec(const LabeledTerm& t, std::uint64_t target,
               std::unordered_map<std::string, bool>& memo, std::uint64_t& seen,
               std::uint64_t limit) {
  std::string key = ltarget_key(t, target);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  if (seen >= limit)
    throw Error(ErrorCode::LimitExceeded, "essentiality search exceeded the state limit");
  ++seen;

  bool avoidable = true;  // a normal form needs no further steps
  std::vector<Path> positions;
  Path here;
  lcollect_redexes(t, here, positions);
  if (!positions.empty()) {
    avoidable = false;
    for (const Path& p : positions) {
      if (lsubterm_at(t, p).label() == target) continue;
      if (avoid_rec(lcontract_rec(t, p, 0), target, memo, seen, limit)) {
        avoidable = true;
        break;
      }
    }
  }
  memo[std::move(key)] = avoidable;
  return avoidable;
}

}  // namespace

LabeledTerm label_redexes(const Term& term) {
  std::uint64_t next = 0;
  return label_rec(term, next);
}

Term strip_labels(const LabeledTerm& term) {
  switch (term.kind()) {
    case Kind::Var:
      return Term::var(term.name());
    case Kind::Lam:
      return Term::lam(term.name(), strip_labels(term.body()));
    case Kind::App: {
      Term fun = strip_labels(term.fun());
      Term arg = strip_labels(term.arg());
      return Term::app(std::move(fun), std::move(arg));
    }
    case Kind::Red: {
      Term body = strip_labels(term.body());
      Term arg = strip_labels(term.arg());
      return Term::red(term.name(), std::move(body), std::move(arg));
    }
  }
  throw Error(ErrorCode::Internal, "corrupt term node");
}

std::uint64_t label_at(const LabeledTerm& term, const Path& path) {
  const LabeledTerm at = lsubterm_at(term, path);
  if (at.kind() != Kind::Red)
    throw Error(ErrorCode::InvalidPath, "path does not address a marked redex");
  return at.label();
}

std::vector<Path> labeled_redex_positions(const LabeledTerm& term) {
  std::vector<Path> out;
  Path here;
  lcollect_redexes(term, here, out);
  return out;
}

LabeledTerm labeled_contract(const LabeledTerm& term, const Path& path) {
  return lcontract_rec(term, path, 0);
}

bool essential_oracle(const Term& term, const Path& path, std::uint64_t state_limit) {
  if (state_limit == 0)
    throw Error(ErrorCode::BadArgument, "state limit must be positive");
  const LabeledTerm labeled = label_redexes(term);
  const std::uint64_t target = label_at(labeled, path);
  std::unordered_map<std::string, bool> memo;
  std::uint64_t seen = 0;
  return !avoid_rec(labeled, target, memo, seen, state_limit);
}

// --- random terms -------------------------------------------------------

namespace {

const char* const kNamePool[] = {"a", "b", "c", "d", "e"};
constexpr std::size_t kNamePoolSize = sizeof(kNamePool) / sizeof(kNamePool[0]);

VarName pick_name(std::mt19937_64& rng) {
  return VarName{kNamePool[rng() % kNamePoolSize]};
}

struct GenWeights {
  std::uint64_t var, lam, app, red;
};

Term gen_rec(std::mt19937_64& rng, std::uint64_t budget, std::uint64_t& redexes_left,
             const GenWeights& w) {
  // Only constructors whose minimum size fits the remaining budget compete.
  std::uint64_t total = w.var;
  const bool lam_ok = budget >= 2;
  const bool app_ok = budget >= 3;
  const bool red_ok = budget >= 3 && redexes_left > 0;
  if (lam_ok) total += w.lam;
  if (app_ok) total += w.app;
  if (red_ok) total += w.red;

  std::uint64_t r = rng() % total;
  if (r < w.var) return Term::var(pick_name(rng));
  r -= w.var;
  if (lam_ok) {
    if (r < w.lam) return Term::lam(pick_name(rng), gen_rec(rng, budget - 1, redexes_left, w));
    r -= w.lam;
  }
  const std::uint64_t left = 1 + rng() % (budget - 2);
  const std::uint64_t right = budget - 1 - left;
  if (app_ok && (!red_ok || r < w.app)) {
    Term fun = gen_rec(rng, left, redexes_left, w);
    Term arg = gen_rec(rng, right, redexes_left, w);
    return Term::app(std::move(fun), std::move(arg));
  }
  --redexes_left;
  const VarName binder = pick_name(rng);
  Term body = gen_rec(rng, left, redexes_left, w);
  Term arg = gen_rec(rng, right, redexes_left, w);
  return Term::red(binder, std::move(body), std::move(arg));
}

}  // namespace

Term gen_term(const GenParams& params) {
  if (params.max_size < 1)
    throw Error(ErrorCode::BadArgument, "max_size must be at least 1");
  const GenWeights weights{
      static_cast<std::uint64_t>(params.p_var * 1000 + 0.5),
      static_cast<std::uint64_t>(params.p_lam * 1000 + 0.5),
      static_cast<std::uint64_t>(params.p_app * 1000 + 0.5),
      static_cast<std::uint64_t>(params.p_red * 1000 + 0.5),
  };
  if (weights.var == 0 || weights.lam == 0 || weights.app == 0 || weights.red == 0)
    throw Error(ErrorCode::BadArgument, "constructor weights must be positive");

  std::mt19937_64 rng(params.seed);
  const auto draw = [&]() {
    std::uint64_t redexes_left = params.max_redexes;
    const std::uint64_t target = 1 + rng() % params.max_size;
    return gen_rec(rng, target, redexes_left, weights);
  };

  Term out = draw();
  // A term with nothing to contract makes a dull test subject; redraw a few
  // times when redexes were allowed but none came up.
  for (int retry = 0; retry < 16 && params.max_redexes > 0 && is_nf(out); ++retry) out = draw();
  return out;
}

}  // namespace devlab
