#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace burneq
{

/// Immutable arithmetic expression tree over variables x1..xn.
///
/// Grammar (whitespace ignored):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | atom ('^' uint)?
///   atom   := number | 'x' index | '(' expr ')'
///
/// Unary minus sits at factor level, so "-x1^2" is -(x1^2). A rational
/// literal "p/q" is the quotient of two numbers and evaluates the same.
class Expr
{
public:
  enum class Kind
  {
    Number,
    Variable,
    Negate,
    Add,
    Subtract,
    Multiply,
    Divide,
    Power,
  };

  static Expr number(std::string literal);
  static Expr variable(std::size_t index); // 0-based
  static Expr negate(Expr operand);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
  static Expr power(Expr base, unsigned exponent);

  Kind kind() const;

  /// Source text of a number literal.
  std::string const &literal() const;
  double value() const;
  std::size_t variable_index() const;
  unsigned exponent() const;
  Expr const &lhs() const;
  Expr const &rhs() const;

  friend bool operator==(Expr const &a, Expr const &b);

private:
  struct Node;
  explicit Expr(std::shared_ptr<Node const> node)
  : _node(std::move(node))
  {}

  std::shared_ptr<Node const> _node;
};

/// Throws SyntaxError (message carries the byte offset), UnknownVariable
/// or BadExponent.
Expr parse_expr(std::string_view source, std::size_t dim);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string print(Expr const &e);

/// IEEE double evaluation; throws DivisionByZero on an exact zero divisor.
double eval(Expr const &e, std::span<double const> point);

/// Central differences with step 2^-20:
/// J[i][j] = (f_i(x + h e_j) - f_i(x - h e_j)) / 2h.
std::vector<std::vector<double>> jacobian_fd(std::vector<Expr> const &exprs,
                                             std::span<double const> point);

inline constexpr double kJacobianStep = 1.0 / (1 << 20);

} // namespace burneq
