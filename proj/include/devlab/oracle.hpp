#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "devlab/metrics.hpp"
#include "devlab/term.hpp"

namespace devlab {

// Ceiling on distinct states a graph search may visit before giving up.
inline constexpr std::uint64_t kDefaultStateLimit = 200000;

// Exhaustive answer for one term's development graph. When the search hits
// the state limit, complete is false and the lengths are unset.
struct DevStats {
  std::optional<Count> shortest;
  std::optional<Count> longest;
  std::uint64_t states = 0;  // distinct terms (up to alpha) visited
  bool complete = false;
};

// Brute-force shortest/longest complete development lengths, by memoized
// search of the entire reduction graph (keyed on alpha-canonical forms). The
// graph of a marked term is finite and acyclic; a cycle would mean the
// reducer is broken and raises Error(Cycle).
DevStats dev_stats(const Term& term, std::uint64_t state_limit = kDefaultStateLimit);

// A term whose marked redexes each carry a numeric label. Substitution copies
// labels along with the nodes, so after any reduction the redexes carrying
// label L are exactly the residuals of the original redex labeled L.
class LabeledTerm {
 public:
  static LabeledTerm var(VarName name);
  static LabeledTerm lam(VarName binder, LabeledTerm body);
  static LabeledTerm app(LabeledTerm fun, LabeledTerm arg);
  static LabeledTerm red(std::uint64_t label, VarName binder, LabeledTerm body, LabeledTerm arg);

  Kind kind() const;
  const VarName& name() const;  // Var name or Lam/Red binder
  std::uint64_t label() const;  // Red only
  LabeledTerm body() const;
  LabeledTerm fun() const;
  LabeledTerm arg() const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  explicit LabeledTerm(NodePtr node) : node_(std::move(node)) {}

  NodePtr node_;
};

// Labels each marked redex with its index in leftmost-outermost order
// (0, 1, 2, ...).
LabeledTerm label_redexes(const Term& term);

// Forgets the labels.
Term strip_labels(const LabeledTerm& term);

// Label of the redex at `path`. Throws Error(InvalidPath) unless the path
// addresses a Red node.
std::uint64_t label_at(const LabeledTerm& term, const Path& path);

// Redex enumeration and contraction on labeled terms; identical to the
// unlabeled operations except that labels ride along through substitution.
std::vector<Path> labeled_redex_positions(const LabeledTerm& term);
LabeledTerm labeled_contract(const LabeledTerm& term, const Path& path);

// Ground-truth essentiality: labels the term, then searches for a complete
// development that never contracts a residual of the redex at `path`. The
// redex is essential iff no such development exists. Throws
// Error(LimitExceeded) if the memoized search outgrows state_limit, and
// Error(InvalidPath) unless the path addresses a Red node.
bool essential_oracle(const Term& term, const Path& path,
                      std::uint64_t state_limit = kDefaultStateLimit);

// Knobs for the random term generator. Constructor weights need not sum to
// one; they are used as relative weights among the constructors that still
// fit the remaining size/redex budget.
struct GenParams {
  std::uint64_t max_size = 25;    // node-count budget, >= 1
  std::uint64_t max_redexes = 8;  // marked redexes allowed
  std::uint64_t seed = 0;
  double p_var = 0.18;
  double p_lam = 0.16;
  double p_app = 0.28;
  double p_red = 0.38;
};

// Deterministic weighted random term over the name pool {a..e}: equal seeds
// give equal terms. Size and redex count stay within the budgets; when
// max_redexes allows redexes the generator redraws a bounded number of times
// rather than return a term with none to contract.
Term gen_term(const GenParams& params);

}  // namespace devlab
