#include "devlab/term.hpp"

#include <algorithm>
#include <cctype>

namespace devlab {

bool is_valid_var_name(const std::string& text) {
  if (text.empty()) return false;
  if (text[0] < 'a' || text[0] > 'z') return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

namespace {

// Splits "y12" into stem "y" and suffix 12; names without a trailing digit
// run get suffix -1 so that the bare stem counts as lower than "stem0".
struct StemSuffix {
  std::string stem;
  long long suffix;
};

StemSuffix split_name(const std::string& text) {
  std::size_t i = text.size();
  while (i > 1 && std::isdigit(static_cast<unsigned char>(text[i - 1]))) --i;
  if (i == text.size()) return {text, -1};
  const std::string digits = text.substr(i);
  long long value = -1;
  if (digits.size() <= 18) {
    value = 0;
    for (char c : digits) value = value * 10 + (c - '0');
  } else {
    value = 1000000000000000000LL;  // absurd suffix, resolved by the probe loop
  }
  return {text.substr(0, i), value};
}

}  // namespace

VarName fresh_name(const VarName& base, const std::set<VarName>& avoid) {
  const std::string stem = split_name(base.text).stem;
  long long max_suffix = -1;
  for (const VarName& name : avoid) {
    auto [s, suffix] = split_name(name.text);
    if (s == stem) max_suffix = std::max(max_suffix, suffix);
  }
  VarName candidate{stem + std::to_string(max_suffix + 1)};
  while (avoid.count(candidate)) {
    ++max_suffix;
    candidate.text = stem + std::to_string(max_suffix + 1);
  }
  return candidate;
}

Term Term::var(VarName name) {
  return Term(std::make_shared<Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

Term Term::lam(VarName binder, Term body) {
  return Term(std::make_shared<Node>(
      Node{Kind::Lam, std::move(binder), std::move(body.node_), nullptr}));
}

Term Term::app(Term fun, Term arg) {
  return Term(std::make_shared<Node>(
      Node{Kind::App, VarName{}, std::move(fun.node_), std::move(arg.node_)}));
}

Term Term::red(VarName binder, Term body, Term arg) {
  return Term(std::make_shared<Node>(
      Node{Kind::Red, std::move(binder), std::move(body.node_), std::move(arg.node_)}));
}

const VarName& Term::name() const { return node_->name; }

Term Term::body() const { return Term(node_->a); }

Term Term::fun() const { return Term(node_->a); }

Term Term::arg() const { return Term(node_->b); }

std::string path_to_string(const Path& path) {
  if (path.steps.empty()) return "root";
  std::string out;
  for (Step s : path.steps) {
    if (!out.empty()) out += '.';
    switch (s) {
      case Step::LamBody:
      case Step::RedBody: out += "body"; break;
      case Step::AppFun: out += "fun"; break;
      case Step::AppArg:
      case Step::RedArg: out += "arg"; break;
    }
  }
  return out;
}

Path path_from_string(const Term& term, const std::string& text) {
  Path path;
  if (text == "root" || text.empty()) return path;
  Term cur = term;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t dot = text.find('.', pos);
    const std::string token =
        text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    Step step;
    if (token == "body") {
      if (cur.kind() == Kind::Lam) step = Step::LamBody;
      else if (cur.kind() == Kind::Red) step = Step::RedBody;
      else throw Error(ErrorCode::InvalidPath, "no body at '" + token + "' in path " + text);
    } else if (token == "fun") {
      if (cur.kind() != Kind::App)
        throw Error(ErrorCode::InvalidPath, "no function part at '" + token + "' in path " + text);
      step = Step::AppFun;
    } else if (token == "arg") {
      if (cur.kind() == Kind::App) step = Step::AppArg;
      else if (cur.kind() == Kind::Red) step = Step::RedArg;
      else throw Error(ErrorCode::InvalidPath, "no argument at '" + token + "' in path " + text);
    } else {
      throw Error(ErrorCode::InvalidPath, "unknown path selector '" + token + "'");
    }
    path.steps.push_back(step);
    cur = (step == Step::AppFun) ? cur.fun()
        : (step == Step::AppArg || step == Step::RedArg) ? cur.arg()
                                                         : cur.body();
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return path;
}

Term subterm_at(const Term& term, const Path& path) {
  Term cur = term;
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

namespace {

void collect_free(const Term& t, std::vector<VarName>& bound, std::set<VarName>& out) {
  switch (t.kind()) {
    case Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      return;
    case Kind::Lam:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case Kind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case Kind::Red:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      collect_free(t.arg(), bound, out);
      return;
  }
}

bool occurs_free(const Term& t, const VarName& x) {
  switch (t.kind()) {
    case Kind::Var: return t.name() == x;
    case Kind::Lam: return t.name() != x && occurs_free(t.body(), x);
    case Kind::App: return occurs_free(t.fun(), x) || occurs_free(t.arg(), x);
    case Kind::Red:
      return (t.name() != x && occurs_free(t.body(), x)) || occurs_free(t.arg(), x);
  }
  return false;
}

Term subst_rec(const Term& t, const VarName& x, const Term& n, const std::set<VarName>& fv_n);

// Substitution under a binder. Renames the binder when it would capture a
// free variable of the replacement.
std::pair<VarName, Term> subst_under_binder(const VarName& binder, const Term& body,
                                            const VarName& x, const Term& n,
                                            const std::set<VarName>& fv_n) {
  if (binder == x || !occurs_free(body, x)) return {binder, body};
  if (fv_n.count(binder)) {
    std::set<VarName> avoid = fv_n;
    auto body_free = free_vars(body);
    avoid.insert(body_free.begin(), body_free.end());
    avoid.insert(x);
    const VarName renamed = fresh_name(binder, avoid);
    const Term renamed_body = subst_rec(body, binder, Term::var(renamed), {renamed});
    return {renamed, subst_rec(renamed_body, x, n, fv_n)};
  }
  return {binder, subst_rec(body, x, n, fv_n)};
}

Term subst_rec(const Term& t, const VarName& x, const Term& n, const std::set<VarName>& fv_n) {
  switch (t.kind()) {
    case Kind::Var:
      return t.name() == x ? n : t;
    case Kind::App:
      return Term::app(subst_rec(t.fun(), x, n, fv_n), subst_rec(t.arg(), x, n, fv_n));
    case Kind::Lam: {
      auto [binder, body] = subst_under_binder(t.name(), t.body(), x, n, fv_n);
      if (binder == t.name() && body.same_node(t.body())) return t;
      return Term::lam(binder, body);
    }
    case Kind::Red: {
      auto [binder, body] = subst_under_binder(t.name(), t.body(), x, n, fv_n);
      return Term::red(binder, body, subst_rec(t.arg(), x, n, fv_n));
    }
  }
  throw Error(ErrorCode::Internal, "corrupt term node");
}

}  // namespace

std::set<VarName> free_vars(const Term& term) {
  std::set<VarName> out;
  std::vector<VarName> bound;
  collect_free(term, bound, out);
  return out;
}

Term subst(const Term& term, const VarName& x, const Term& replacement) {
  return subst_rec(term, x, replacement, free_vars(replacement));
}

namespace {

// Innermost-first index of a binder, or -1 for a free variable.
long long bound_index(const std::vector<VarName>& env, const VarName& name) {
  for (std::size_t i = env.size(); i > 0; --i) {
    if (env[i - 1] == name) return static_cast<long long>(env.size() - i);
  }
  return -1;
}

bool alpha_eq_rec(const Term& a, const Term& b, std::vector<VarName>& env_a,
                  std::vector<VarName>& env_b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Var: {
      const long long ia = bound_index(env_a, a.name());
      const long long ib = bound_index(env_b, b.name());
      if (ia != ib) return false;
      return ia >= 0 || a.name() == b.name();
    }
    case Kind::Lam: {
      env_a.push_back(a.name());
      env_b.push_back(b.name());
      const bool ok = alpha_eq_rec(a.body(), b.body(), env_a, env_b);
      env_a.pop_back();
      env_b.pop_back();
      return ok;
    }
    case Kind::App:
      return alpha_eq_rec(a.fun(), b.fun(), env_a, env_b) &&
             alpha_eq_rec(a.arg(), b.arg(), env_a, env_b);
    case Kind::Red: {
      env_a.push_back(a.name());
      env_b.push_back(b.name());
      const bool body_ok = alpha_eq_rec(a.body(), b.body(), env_a, env_b);
      env_a.pop_back();
      env_b.pop_back();
      return body_ok && alpha_eq_rec(a.arg(), b.arg(), env_a, env_b);
    }
  }
  return false;
}

void canonical_rec(const Term& t, std::vector<VarName>& env, std::string& out) {
  switch (t.kind()) {
    case Kind::Var: {
      const long long idx = bound_index(env, t.name());
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
      canonical_rec(t.body(), env, out);
      env.pop_back();
      return;
    case Kind::App:
      out += 'A';
      canonical_rec(t.fun(), env, out);
      canonical_rec(t.arg(), env, out);
      return;
    case Kind::Red:
      out += 'R';
      env.push_back(t.name());
      canonical_rec(t.body(), env, out);
      env.pop_back();
      canonical_rec(t.arg(), env, out);
      return;
  }
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  std::vector<VarName> env_a, env_b;
  return alpha_eq_rec(a, b, env_a, env_b);
}

std::string canonical_key(const Term& term) {
  std::string out;
  std::vector<VarName> env;
  canonical_rec(term, env, out);
  return out;
}

bool is_nf(const Term& term) {
  switch (term.kind()) {
    case Kind::Var: return true;
    case Kind::Lam: return is_nf(term.body());
    case Kind::App: return is_nf(term.fun()) && is_nf(term.arg());
    case Kind::Red: return false;
  }
  return true;
}

std::uint64_t term_size(const Term& term) {
  switch (term.kind()) {
    case Kind::Var: return 1;
    case Kind::Lam: return 1 + term_size(term.body());
    case Kind::App: return 1 + term_size(term.fun()) + term_size(term.arg());
    case Kind::Red: return 1 + term_size(term.body()) + term_size(term.arg());
  }
  return 0;
}

bool well_formed(const Term& term) {
  switch (term.kind()) {
    case Kind::Var: return is_valid_var_name(term.name().text);
    case Kind::Lam: return is_valid_var_name(term.name().text) && well_formed(term.body());
    case Kind::App: return well_formed(term.fun()) && well_formed(term.arg());
    case Kind::Red:
      return is_valid_var_name(term.name().text) && well_formed(term.body()) &&
             well_formed(term.arg());
  }
  return false;
}

}  // namespace devlab
