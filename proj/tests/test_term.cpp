#include <set>
#include <string>

#include "devlab/error.hpp"
#include "devlab/syntax.hpp"
#include "devlab/term.hpp"
#include "doctest.h"

using namespace devlab;

namespace {

Term t(const char* text) { return parse(text); }

}  // namespace

TEST_CASE("constructors and accessors expose the expected shape") {
  const Term v = Term::var({"x"});
  CHECK(v.kind() == Kind::Var);
  CHECK(v.name().text == "x");

  const Term l = Term::lam({"x"}, v);
  CHECK(l.kind() == Kind::Lam);
  CHECK(l.name().text == "x");
  CHECK(l.body().kind() == Kind::Var);

  const Term a = Term::app(l, v);
  CHECK(a.kind() == Kind::App);
  CHECK(a.fun().kind() == Kind::Lam);
  CHECK(a.arg().kind() == Kind::Var);

  const Term r = Term::red({"x"}, v, v);
  CHECK(r.kind() == Kind::Red);
  CHECK(r.name().text == "x");
  CHECK(r.body().kind() == Kind::Var);
  CHECK(r.arg().kind() == Kind::Var);
}

TEST_CASE("term_size counts one node per constructor") {
  CHECK(term_size(t("x")) == 1);
  CHECK(term_size(t("\\x. x")) == 2);
  CHECK(term_size(t("x y")) == 3);
  // A marked redex is a single node plus body plus argument.
  CHECK(term_size(t("(\\*x. x) y")) == 3);
  CHECK(term_size(t("(\\*x. x x) (\\*y. y) w")) == 7);
}

TEST_CASE("free_vars respects binders, including marked ones") {
  CHECK(free_vars(t("x")) == std::set<VarName>{{"x"}});
  CHECK(free_vars(t("\\x. x")).empty());
  CHECK(free_vars(t("\\x. x y")) == std::set<VarName>{{"y"}});
  // The binder of a marked redex binds the body but not the argument.
  CHECK(free_vars(t("(\\*x. x) x")) == std::set<VarName>{{"x"}});
  CHECK(free_vars(t("(\\*x. z) w")) == std::set<VarName>{{"w"}, {"z"}});
  // Shadowing: the inner binder hides the outer occurrence.
  CHECK(free_vars(t("\\x. \\x. x")).empty());
}

TEST_CASE("substitution replaces free occurrences only") {
  const Term n = t("y y");
  CHECK(alpha_eq(subst(t("x"), {"x"}, n), t("y y")));
  CHECK(alpha_eq(subst(t("z"), {"x"}, n), t("z")));
  CHECK(alpha_eq(subst(t("x x"), {"x"}, n), t("(y y) (y y)")));
  // A shadowing binder stops the substitution.
  CHECK(alpha_eq(subst(t("\\x. x"), {"x"}, n), t("\\x. x")));
  CHECK(alpha_eq(subst(t("(\\*x. x) x"), {"x"}, n), t("(\\*x. x) (y y)")));
}

TEST_CASE("substitution avoids variable capture") {
  // [x := y] in \y. x: the binder must be renamed, not capture y.
  const Term got = subst(t("\\y. x"), {"x"}, t("y"));
  CHECK(got.kind() == Kind::Lam);
  CHECK(got.name().text != "y");
  CHECK(alpha_eq(got, Term::lam({"z"}, Term::var({"y"}))));

  // Same hazard through a marked binder.
  const Term marked = subst(t("(\\*y. x y) z"), {"x"}, t("y"));
  CHECK(alpha_eq(marked, Term::red({"w"}, Term::app(Term::var({"y"}), Term::var({"w"})),
                                   Term::var({"z"}))));

  // Capture hazard inside the replacement of a doubly-nested binder.
  const Term nested = subst(t("\\y. \\z. x"), {"x"}, t("y z"));
  CHECK(alpha_eq(nested, parse("\\a. \\b. y z")));
}

TEST_CASE("alpha_eq ignores binder names and nothing else") {
  CHECK(alpha_eq(t("\\x. x"), t("\\y. y")));
  CHECK(alpha_eq(t("(\\*x. x x) y"), t("(\\*q. q q) y")));
  CHECK_FALSE(alpha_eq(t("\\x. x"), t("\\x. \\y. x")));
  CHECK_FALSE(alpha_eq(t("x"), t("y")));
  // A marked redex is not alpha-equal to the same shape unmarked.
  CHECK_FALSE(alpha_eq(t("(\\*x. x) y"), t("(\\x. x) y")));
  // Free variables must match by name.
  CHECK_FALSE(alpha_eq(t("\\x. y"), t("\\x. z")));
}

TEST_CASE("canonical_key agrees with alpha_eq") {
  CHECK(canonical_key(t("\\x. x")) == canonical_key(t("\\y. y")));
  CHECK(canonical_key(t("(\\*x. x) z")) == canonical_key(t("(\\*y. y) z")));
  CHECK(canonical_key(t("(\\*x. x) z")) != canonical_key(t("(\\x. x) z")));
  CHECK(canonical_key(t("x")) != canonical_key(t("y")));
}

TEST_CASE("paths address subterms and render stably") {
  const Term m = t("(\\*x. x x) (\\*y. y) w");

  CHECK(path_to_string(Path{}) == "root");
  CHECK(alpha_eq(subterm_at(m, Path{}), m));

  const Path body{{Step::RedBody}};
  CHECK(path_to_string(body) == "body");
  CHECK(print(subterm_at(m, body)) == "x x");

  const Path arg{{Step::RedArg}};
  CHECK(print(subterm_at(m, arg)) == "(\\*y. y) w");

  const Path deep{{Step::RedArg, Step::RedArg}};
  CHECK(path_to_string(deep) == "arg.arg");
  CHECK(print(subterm_at(m, deep)) == "w");

  // Round-trip through the textual form.
  CHECK(path_from_string(m, "arg.arg") == deep);
  CHECK(path_from_string(m, "root") == Path{});

  // Paths that do not fit the term are rejected.
  CHECK_THROWS_AS(subterm_at(m, Path{{Step::LamBody}}), Error);
  CHECK_THROWS_AS(path_from_string(m, "fun"), Error);
  CHECK_THROWS_AS(path_from_string(m, "body.nonsense"), Error);
}

TEST_CASE("is_nf is exactly the absence of marked redexes") {
  CHECK(is_nf(t("x")));
  CHECK(is_nf(t("\\x. x x")));
  // Unmarked beta redexes do not count.
  CHECK(is_nf(t("(\\x. x) y")));
  CHECK_FALSE(is_nf(t("(\\*x. x) y")));
  CHECK_FALSE(is_nf(t("\\z. z ((\\*x. x) y)")));
}

TEST_CASE("fresh_name avoids the whole avoid set") {
  const std::set<VarName> avoid{{"x"}, {"x1"}, {"x2"}};
  const VarName fresh = fresh_name({"x"}, avoid);
  CHECK(avoid.count(fresh) == 0);
  CHECK(is_valid_var_name(fresh.text));
}

TEST_CASE("well_formed accepts parser output and rejects bad names") {
  CHECK(well_formed(t("(\\*x. x x) (\\*y. y) w")));
  CHECK_FALSE(well_formed(Term::var({"X"})));
  CHECK_FALSE(well_formed(Term::lam({""}, Term::var({"x"}))));
}
