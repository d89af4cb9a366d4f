#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "devlab/error.hpp"

namespace devlab {

// A variable name: [a-z][A-Za-z0-9_']*. Fresh names produced by the renaming
// machinery are the base name with a larger numeric suffix, so every name
// round-trips through the concrete syntax unchanged.
struct VarName {
  std::string text;

  auto operator<=>(const VarName&) const = default;
};

bool is_valid_var_name(const std::string& text);

// A fresh name derived from `base`: the base's stem with a numeric suffix
// strictly greater than any suffix the avoid set uses for that stem.
VarName fresh_name(const VarName& base, const std::set<VarName>& avoid);

enum class Kind : std::uint8_t { Var, Lam, App, Red };

// Immutable term of the marked lambda calculus. A Red node is a marked redex
// (\*x. P) Q; a marked lambda exists only as part of a Red node, so an App's
// function can never be a marked lambda.
class Term {
 public:
  static Term var(VarName name);
  static Term lam(VarName binder, Term body);
  static Term app(Term fun, Term arg);
  static Term red(VarName binder, Term body, Term arg);

  Kind kind() const;

  // Var name, or the binder of a Lam/Red.
  const VarName& name() const;
  // Lam body, or the body P of a Red (\*x. P) Q. The binder scopes over it.
  Term body() const;
  // App function part.
  Term fun() const;
  // App argument, or the argument Q of a Red. The Red binder does not scope
  // over it.
  Term arg() const;

  // Shallow identity (same node), used only as a fast pre-test.
  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  explicit Term(NodePtr node) : node_(std::move(node)) {}

  NodePtr node_;
};

struct Term::Node {
  Kind kind;
  VarName name;   // Var, Lam, Red
  NodePtr a;      // Lam/Red body, App fun
  NodePtr b;      // App/Red arg
};

inline Kind Term::kind() const { return node_->kind; }

// One child selector of a path.
enum class Step : std::uint8_t { LamBody, AppFun, AppArg, RedBody, RedArg };

// Position of a subterm: the sequence of selectors from the root.
struct Path {
  std::vector<Step> steps;

  bool empty() const { return steps.empty(); }
  auto operator<=>(const Path&) const = default;
};

// "root" for the empty path, otherwise dot-separated selectors
// ("body", "fun", "arg").
std::string path_to_string(const Path& path);

// Inverse of path_to_string relative to a concrete term (the term resolves
// "body"/"arg" to the Lam/App/Red selector). Throws Error(InvalidPath).
Path path_from_string(const Term& term, const std::string& text);

// Subterm addressed by the path. Throws Error(InvalidPath) if the path leaves
// the tree.
Term subterm_at(const Term& term, const Path& path);

std::set<VarName> free_vars(const Term& term);

// Capture-avoiding substitution of `replacement` for free occurrences of `x`.
Term subst(const Term& term, const VarName& x, const Term& replacement);

// Identity up to renaming of bound variables (Lam and Red binders alike).
bool alpha_eq(const Term& a, const Term& b);

// Nameless encoding of the term, equal exactly for alpha-equal terms. Used as
// a hashing/memoization key.
std::string canonical_key(const Term& term);

// True iff the term contains no marked redex.
bool is_nf(const Term& term);

std::uint64_t term_size(const Term& term);

// Structural validity: no null children, every name well formed. Terms built
// through the factories satisfy this by construction; tests use it to assert
// closure properties.
bool well_formed(const Term& term);

}  // namespace devlab
