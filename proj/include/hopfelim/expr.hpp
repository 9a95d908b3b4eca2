#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hopfelim/elimination.hpp"
#include "hopfelim/error.hpp"
#include "hopfelim/rational.hpp"

namespace hopfelim {

/// Parse error with a 1-based column into the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, "column " + std::to_string(column) + ": " + message), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

struct Expr {
  enum class Kind { Literal, Symbol, Sum, Prod, Neg, Bracket };

  Kind kind;
  Rational value;        // Literal
  std::string symbol;    // Symbol, as written
  LetterId letter = 0;   // Symbol: resolved id (U-letter id when is_u)
  bool is_u = false;
  std::vector<std::unique_ptr<Expr>> children;
  std::size_t column = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

enum class Context { Tensor, Lie };

// Grammar: sum := term (('+'|'-') term)*; term := unary ('*' unary)*;
// unary := '-' unary | primary; primary := literal | symbol | u[...] |
// '(' sum ')' | '[' sum ',' sum ']'. Brackets only in Lie context.
ExprPtr parse_expression(std::string_view source, const MixedAlgebra& alg, Context ctx);

// e.g. Sum(Prod(2,s,v),Neg(Prod(v,s)))
std::string debug_string(const Expr& e);

// Brackets evaluate to commutators, U symbols to their expansions.
TensorElement evaluate(const Expr& e, const MixedAlgebra& alg);

}  // namespace hopfelim
