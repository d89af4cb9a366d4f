#pragma once

// Hand-written concrete-syntax corpus shared by the syntax unit tests and the
// acceptance suite.  Each accepted case pins the exact canonical rendering;
// each rejected case must raise a syntax error.  The list deliberately leans
// on the awkward corners: binder shadowing, marked lambdas in argument
// position, the lambda glyph, redundant parentheses, primes and underscores
// in names, and every way of writing a marked lambda that is not applied.

#include <cstddef>

namespace devlab::testcases {

struct RoundTrip {
  const char* input;     // raw text handed to the parser
  const char* rendered;  // canonical form the printer must produce
};

inline constexpr RoundTrip kAccepted[] = {
    // Bare variables and applications; application associates left.
    {"x", "x"},
    {"x y z", "x y z"},
    {"x (y z)", "x (y z)"},
    {"((x))", "x"},
    {"(x y) z", "x y z"},

    // Lambdas: body extends as far right as possible, nested binders flatten.
    {"\\x. x", "\\x. x"},
    {"\\x. \\y. x y", "\\x. \\y. x y"},
    {"\\x. x y z", "\\x. x y z"},
    {"(\\x. x) y", "(\\x. x) y"},
    {"(\\x. x) (\\y. y)", "(\\x. x) (\\y. y)"},
    {"\\f. f (\\x. f x x) (f f)", "\\f. f (\\x. f x x) (f f)"},

    // Shadowing: inner binders reuse the outer name.
    {"\\x. \\x. x", "\\x. \\x. x"},
    {"(\\*x. \\x. x) y", "(\\*x. \\x. x) y"},
    {"\\y. (\\*x. y) y", "\\y. (\\*x. y) y"},

    // Marked redexes: the marked lambda consumes exactly one factor.
    {"(\\*x. x) y", "(\\*x. x) y"},
    {"(\\*x. x x) ((\\*y. y) w)", "(\\*x. x x) (\\*y. y) w"},
    {"(\\*x. x x) (\\*y. y) w", "(\\*x. x x) (\\*y. y) w"},
    {"(\\*x. z) ((\\*y. y) w)", "(\\*x. z) (\\*y. y) w"},
    {"((\\*x. x) y) z", "(\\*x. x) y z"},
    {"(\\*x. (\\*y. y) x) z", "(\\*x. (\\*y. y) x) z"},
    {"f ((\\*x. x) y)", "f (\\*x. x) y"},
    {"f (\\*x. x) y", "f (\\*x. x) y"},

    // The lambda glyph is a synonym for backslash, marked or not.
    {"λx. x", "\\x. x"},
    {"λx. λy. x y", "\\x. \\y. x y"},
    {"(λ*z. z z) (λw. w)", "(\\*z. z z) (\\w. w)"},

    // Names: primes, underscores, and digits after the leading letter.
    {"\\x'. x' x'", "\\x'. x' x'"},
    {"foo_1 bar'2", "foo_1 bar'2"},
    {"(\\*long_name. long_name) short", "(\\*long_name. long_name) short"},

    // Whitespace is free around every token.
    {"  \\x .   x  ", "\\x. x"},
    {"(\\*x.x)y", "(\\*x. x) y"},
};

inline constexpr const char* kRejected[] = {
    // A marked lambda that is never applied is not a term.
    "\\*x. x",
    "(\\*x. x)",
    "\\y. \\*x. x",
    "f (\\*x. x)",
    "(\\*x. \\*y. y) z",

    // Structural junk.
    "",
    "(",
    "x)",
    "(x",
    "\\. x",
    "\\x x",
    "\\x.",
    "x (",
    "()",

    // Names must start with a lowercase letter.
    "X",
    "\\X. X",
    "1x",
};

inline constexpr std::size_t kAcceptedCount = sizeof(kAccepted) / sizeof(kAccepted[0]);
inline constexpr std::size_t kRejectedCount = sizeof(kRejected) / sizeof(kRejected[0]);

}  // namespace devlab::testcases
