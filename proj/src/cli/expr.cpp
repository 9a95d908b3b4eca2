#include "hopfelim/expr.hpp"

#include <cctype>

namespace hopfelim {

namespace {

struct Token {
  enum class Type { Literal, Ident, USymbol, Plus, Minus, Star, LParen, RParen, LBracket, RBracket, Comma, End };
  Type type;
  std::string text;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (digit(c)) {
      std::size_t j = i;
      while (j < s.size() && digit(s[j])) ++j;
      if (j + 1 < s.size() && s[j] == '/' && digit(s[j + 1])) {
        ++j;
        while (j < s.size() && digit(s[j])) ++j;
      }
      out.push_back({Token::Type::Literal, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (c == 'u' && i + 1 < s.size() && s[i + 1] == '[') {
      const std::size_t close = s.find(']', i);
      if (close == std::string_view::npos) throw ParseError(col, "unterminated U symbol");
      out.push_back({Token::Type::USymbol, std::string(s.substr(i, close - i + 1)), col});
      i = close + 1;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Token::Type::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Token::Type t;
    switch (c) {
      case '+': t = Token::Type::Plus; break;
      case '-': t = Token::Type::Minus; break;
      case '*': t = Token::Type::Star; break;
      case '(': t = Token::Type::LParen; break;
      case ')': t = Token::Type::RParen; break;
      case '[': t = Token::Type::LBracket; break;
      case ']': t = Token::Type::RBracket; break;
      case ',': t = Token::Type::Comma; break;
      default: throw ParseError(col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({t, std::string(1, c), col});
    ++i;
  }
  out.push_back({Token::Type::End, "", s.size() + 1});
  return out;
}

ExprPtr node(Expr::Kind kind, std::size_t column) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->column = column;
  return e;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const MixedAlgebra& alg, Context ctx)
      : tokens_(std::move(tokens)), alg_(alg), ctx_(ctx) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (peek().type != Token::Type::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().column, peek().type == Token::Type::End ? "unexpected end of input" : msg);
  }
  void expect(Token::Type t, const char* what) {
    if (peek().type != t) fail(std::string("expected ") + what);
    ++pos_;
  }

  ExprPtr sum() {
    const std::size_t col = peek().column;
    ExprPtr first = term();
    if (peek().type != Token::Type::Plus && peek().type != Token::Type::Minus) return first;
    ExprPtr s = node(Expr::Kind::Sum, col);
    s->children.push_back(std::move(first));
    while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
      const Token& op = next();
      ExprPtr t = term();
      if (op.type == Token::Type::Minus) {
        ExprPtr n = node(Expr::Kind::Neg, op.column);
        n->children.push_back(std::move(t));
        t = std::move(n);
      }
      s->children.push_back(std::move(t));
    }
    return s;
  }

  ExprPtr term() {
    const std::size_t col = peek().column;
    ExprPtr first = unary();
    if (peek().type != Token::Type::Star) return first;
    ExprPtr p = node(Expr::Kind::Prod, col);
    p->children.push_back(std::move(first));
    while (peek().type == Token::Type::Star) {
      ++pos_;
      p->children.push_back(unary());
    }
    return p;
  }

  ExprPtr unary() {
    if (peek().type == Token::Type::Minus) {
      ExprPtr n = node(Expr::Kind::Neg, next().column);
      n->children.push_back(unary());
      return n;
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::Literal: {
        ExprPtr e = node(Expr::Kind::Literal, t.column);
        try {
          e->value = Rational::parse(t.text);
        } catch (const std::exception&) {
          fail("invalid literal '" + t.text + "'");
        }
        ++pos_;
        return e;
      }
      case Token::Type::Ident: {
        auto id = alg_.alphabet()->find(t.text);
        if (!id) fail("unknown symbol '" + t.text + "'");
        ExprPtr e = node(Expr::Kind::Symbol, t.column);
        e->symbol = t.text;
        e->letter = *id;
        ++pos_;
        return e;
      }
      case Token::Type::USymbol: {
        auto id = alg_.parse_u_symbol(t.text);
        if (!id) fail("unknown symbol '" + t.text + "'");
        ExprPtr e = node(Expr::Kind::Symbol, t.column);
        e->symbol = t.text;
        e->letter = *id;
        e->is_u = true;
        ++pos_;
        return e;
      }
      case Token::Type::LParen: {
        ++pos_;
        ExprPtr e = sum();
        expect(Token::Type::RParen, "')'");
        return e;
      }
      case Token::Type::LBracket: {
        if (ctx_ != Context::Lie) fail("bracket is only allowed in Lie expressions");
        ExprPtr e = node(Expr::Kind::Bracket, t.column);
        ++pos_;
        e->children.push_back(sum());
        expect(Token::Type::Comma, "','");
        e->children.push_back(sum());
        expect(Token::Type::RBracket, "']'");
        return e;
      }
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const MixedAlgebra& alg_;
  Context ctx_;
};

}  // namespace

ExprPtr parse_expression(std::string_view source, const MixedAlgebra& alg, Context ctx) {
  return Parser(tokenize(source), alg, ctx).parse();
}

std::string debug_string(const Expr& e) {
  auto list = [&](const char* name) {
    std::string s = std::string(name) + "(";
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      if (i > 0) s += ",";
      s += debug_string(*e.children[i]);
    }
    return s + ")";
  };
  switch (e.kind) {
    case Expr::Kind::Literal: return e.value.str();
    case Expr::Kind::Symbol: return e.symbol;
    case Expr::Kind::Sum: return list("Sum");
    case Expr::Kind::Prod: return list("Prod");
    case Expr::Kind::Neg: return list("Neg");
    case Expr::Kind::Bracket: return list("Bracket");
  }
  return {};
}

TensorElement evaluate(const Expr& e, const MixedAlgebra& alg) {
  const AlphabetPtr& a = alg.alphabet();
  switch (e.kind) {
    case Expr::Kind::Literal: return TensorElement::scalar(a, e.value);
    case Expr::Kind::Symbol: return e.is_u ? alg.u_expansion(e.letter) : TensorElement::letter(a, e.letter);
    case Expr::Kind::Sum: {
      TensorElement s(a);
      for (const auto& c : e.children) s += evaluate(*c, alg);
      return s;
    }
    case Expr::Kind::Prod: {
      TensorElement p = evaluate(*e.children.front(), alg);
      for (std::size_t i = 1; i < e.children.size(); ++i) p = concat_product(p, evaluate(*e.children[i], alg), Exec::serial);
      return p;
    }
    case Expr::Kind::Neg: return -evaluate(*e.children.front(), alg);
    case Expr::Kind::Bracket: {
      const TensorElement x = evaluate(*e.children[0], alg);
      const TensorElement y = evaluate(*e.children[1], alg);
      return concat_product(x, y, Exec::serial) - concat_product(y, x, Exec::serial);
    }
  }
  return TensorElement(a);
}

}  // namespace hopfelim
