#include "devlab/syntax.hpp"

#include <cctype>
#include <vector>

#include "json.hpp"

namespace devlab {

namespace {

enum class Tok : std::uint8_t { LParen, RParen, Lambda, MarkedLambda, Dot, Ident, End };

struct Token {
  Tok kind;
  std::string text;  // Ident only
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const std::size_t start = pos_;
      if (pos_ >= input_.size()) {
        out.push_back({Tok::End, "", {start, start}});
        return out;
      }
      const char c = input_[pos_];
      if (c == '(') {
        ++pos_;
        out.push_back({Tok::LParen, "", {start, pos_}});
      } else if (c == ')') {
        ++pos_;
        out.push_back({Tok::RParen, "", {start, pos_}});
      } else if (c == '.') {
        ++pos_;
        out.push_back({Tok::Dot, "", {start, pos_}});
      } else if (c == '\\' || lambda_glyph_here()) {
        pos_ += (c == '\\') ? 1 : 2;
        if (pos_ < input_.size() && input_[pos_] == '*') {
          ++pos_;
          out.push_back({Tok::MarkedLambda, "", {start, pos_}});
        } else {
          out.push_back({Tok::Lambda, "", {start, pos_}});
        }
      } else if (c >= 'a' && c <= 'z') {
        ++pos_;
        while (pos_ < input_.size() && ident_char(input_[pos_])) ++pos_;
        out.push_back({Tok::Ident, std::string(input_.substr(start, pos_ - start)), {start, pos_}});
      } else {
        throw SyntaxError("unexpected character", {start, start + 1});
      }
    }
  }

 private:
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  // UTF-8 lambda glyph (0xCE 0xBB).
  bool lambda_glyph_here() const {
    return pos_ + 1 < input_.size() && static_cast<unsigned char>(input_[pos_]) == 0xCE &&
           static_cast<unsigned char>(input_[pos_ + 1]) == 0xBB;
  }

  void skip_space() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Term run() {
    Term t = parse_term();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected token after term", peek().span);
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  Token take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw SyntaxError(std::string("expected ") + what, peek().span);
    return take();
  }

  bool at_factor_start() const {
    return peek().kind == Tok::Ident || peek().kind == Tok::LParen;
  }

  Term parse_term() {
    if (peek().kind == Tok::Lambda) {
      take();
      const Token name = expect(Tok::Ident, "identifier after lambda");
      expect(Tok::Dot, "'.' after binder");
      return Term::lam(VarName{name.text}, parse_term());
    }
    return parse_app();
  }

  Term parse_app() {
    if (!at_factor_start()) throw SyntaxError("expected term", peek().span);
    Term t = parse_factor();
    while (at_factor_start()) t = Term::app(t, parse_factor());
    return t;
  }

  Term parse_factor() {
    if (peek().kind == Tok::Ident) {
      return Term::var(VarName{take().text});
    }
    const Token open = expect(Tok::LParen, "'('");
    if (peek().kind == Tok::MarkedLambda) {
      take();
      const Token name = expect(Tok::Ident, "identifier after marked lambda");
      expect(Tok::Dot, "'.' after binder");
      Term body = parse_term();
      const Token close = expect(Tok::RParen, "')'");
      if (!at_factor_start())
        throw SyntaxError("marked lambda must be applied to an argument",
                          {open.span.start, close.span.end});
      return Term::red(VarName{name.text}, std::move(body), parse_factor());
    }
    Term t = parse_term();
    expect(Tok::RParen, "')'");
    return t;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Printing context: Top admits a bare lambda, Fun is the function part of an
// application, Factor is an argument position.
enum class Ctx : std::uint8_t { Top, Fun, Factor };

void print_rec(const Term& t, Ctx ctx, std::string& out) {
  switch (t.kind()) {
    case Kind::Var:
      out += t.name().text;
      return;
    case Kind::Lam: {
      const bool parens = ctx != Ctx::Top;
      if (parens) out += '(';
      out += '\\';
      out += t.name().text;
      out += ". ";
      print_rec(t.body(), Ctx::Top, out);
      if (parens) out += ')';
      return;
    }
    case Kind::App: {
      const bool parens = ctx == Ctx::Factor;
      if (parens) out += '(';
      print_rec(t.fun(), Ctx::Fun, out);
      out += ' ';
      print_rec(t.arg(), Ctx::Factor, out);
      if (parens) out += ')';
      return;
    }
    case Kind::Red:
      // The marked production is itself a factor, so no outer parentheses.
      out += "(\\*";
      out += t.name().text;
      out += ". ";
      print_rec(t.body(), Ctx::Top, out);
      out += ") ";
      print_rec(t.arg(), Ctx::Factor, out);
      return;
  }
}

nlohmann::json to_json_rec(const Term& t) {
  using nlohmann::json;
  switch (t.kind()) {
    case Kind::Var: return json::array({"var", t.name().text});
    case Kind::Lam: return json::array({"lam", t.name().text, to_json_rec(t.body())});
    case Kind::App: return json::array({"app", to_json_rec(t.fun()), to_json_rec(t.arg())});
    case Kind::Red:
      return json::array({"red", t.name().text, to_json_rec(t.body()), to_json_rec(t.arg())});
  }
  throw Error(ErrorCode::Internal, "corrupt term node");
}

Term from_json_rec(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw Error(ErrorCode::Syntax, "term array expected");
  const std::string tag = j[0].get<std::string>();
  auto name_at = [&](std::size_t i) {
    if (j.size() <= i || !j[i].is_string())
      throw Error(ErrorCode::Syntax, "variable name expected");
    const std::string text = j[i].get<std::string>();
    if (!is_valid_var_name(text)) throw Error(ErrorCode::Syntax, "invalid variable name");
    return VarName{text};
  };
  if (tag == "var" && j.size() == 2) return Term::var(name_at(1));
  if (tag == "lam" && j.size() == 3) return Term::lam(name_at(1), from_json_rec(j[2]));
  if (tag == "app" && j.size() == 3)
    return Term::app(from_json_rec(j[1]), from_json_rec(j[2]));
  if (tag == "red" && j.size() == 4)
    return Term::red(name_at(1), from_json_rec(j[2]), from_json_rec(j[3]));
  throw Error(ErrorCode::Syntax, "malformed term array");
}

}  // namespace

Term parse(std::string_view input) { return Parser(Lexer(input).run()).run(); }

std::string print(const Term& term) {
  std::string out;
  print_rec(term, Ctx::Top, out);
  return out;
}

std::string term_to_json(const Term& term) { return to_json_rec(term).dump(); }

Term term_from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::Syntax, "invalid JSON");
  return from_json_rec(j);
}

}  // namespace devlab
