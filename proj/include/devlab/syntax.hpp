#pragma once

#include <string>
#include <string_view>

#include "devlab/term.hpp"

namespace devlab {

// Concrete syntax:
//
//   term   := lam | app
//   lam    := '\' ident '.' term                  (body extends right)
//   app    := factor factor+ | factor             (left-associative)
//   factor := ident | '(' term ')' | marked
//   marked := '(' '\*' ident '.' term ')' factor  (a Red node)
//   ident  := [a-z][A-Za-z0-9_']*
//
// 'λ' is a synonym for '\' and 'λ*' for '\*'. A marked lambda that is not
// immediately applied to a factor is a syntax error, mirroring the fact that
// marked lambdas exist only inside Red nodes.
Term parse(std::string_view input);

// Canonical text with minimal parentheses; parse(print(m)) is alpha-equal to
// m and print is a fixed point of print . parse.
std::string print(const Term& term);

// Machine form: nested arrays ["var",name] | ["lam",name,t] | ["app",t,t] |
// ["red",name,t,t], serialized as JSON.
std::string term_to_json(const Term& term);
Term term_from_json(std::string_view json_text);

}  // namespace devlab
