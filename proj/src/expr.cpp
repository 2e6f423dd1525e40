#include "burneq/expr.hpp"

#include <cctype>
#include <cstdlib>

#include "burneq/error.hpp"

namespace burneq
{

struct Expr::Node
{
  Kind kind = Kind::Number;
  std::string literal;
  double value = 0.0;
  std::size_t variable = 0;
  unsigned exponent = 0;
  std::vector<Expr> children;
};

Expr Expr::number(std::string literal)
{
  auto node = std::make_shared<Node>();
  node->kind = Kind::Number;
  node->value = std::strtod(literal.c_str(), nullptr);
  node->literal = std::move(literal);
  return Expr(std::move(node));
}

Expr Expr::variable(std::size_t index)
{
  auto node = std::make_shared<Node>();
  node->kind = Kind::Variable;
  node->variable = index;
  return Expr(std::move(node));
}

Expr Expr::negate(Expr operand)
{
  auto node = std::make_shared<Node>();
  node->kind = Kind::Negate;
  node->children.push_back(std::move(operand));
  return Expr(std::move(node));
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs)
{
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Expr(std::move(node));
}

Expr Expr::power(Expr base, unsigned exponent)
{
  auto node = std::make_shared<Node>();
  node->kind = Kind::Power;
  node->children.push_back(std::move(base));
  node->exponent = exponent;
  return Expr(std::move(node));
}

Expr::Kind Expr::kind() const
{ return _node->kind; }

std::string const &Expr::literal() const
{ return _node->literal; }

double Expr::value() const
{ return _node->value; }

std::size_t Expr::variable_index() const
{ return _node->variable; }

unsigned Expr::exponent() const
{ return _node->exponent; }

Expr const &Expr::lhs() const
{ return _node->children.at(0); }

Expr const &Expr::rhs() const
{ return _node->children.at(1); }

bool operator==(Expr const &a, Expr const &b)
{
  if (a._node == b._node)
    return true;
  if (a.kind() != b.kind())
    return false;
  switch (a.kind()) {
    case Expr::Kind::Number:
      return a.literal() == b.literal();
    case Expr::Kind::Variable:
      return a.variable_index() == b.variable_index();
    case Expr::Kind::Negate:
      return a.lhs() == b.lhs();
    case Expr::Kind::Power:
      return a.exponent() == b.exponent() && a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

namespace
{

class Parser
{
public:
  Parser(std::string_view src, std::size_t dim)
  : _src(src), _dim(dim)
  {}

  Expr run()
  {
    Expr e = expr();
    skip_space();
    if (_pos != _src.size())
      fail("unexpected '" + std::string(1, _src[_pos]) + "'");
    return e;
  }

private:
  Expr expr()
  {
    Expr e = term();
    while (true) {
      skip_space();
      if (accept('+'))
        e = Expr::binary(Expr::Kind::Add, e, term());
      else if (accept('-'))
        e = Expr::binary(Expr::Kind::Subtract, e, term());
      else
        return e;
    }
  }

  Expr term()
  {
    Expr e = factor();
    while (true) {
      skip_space();
      if (accept('*'))
        e = Expr::binary(Expr::Kind::Multiply, e, factor());
      else if (accept('/'))
        e = Expr::binary(Expr::Kind::Divide, e, factor());
      else
        return e;
    }
  }

  Expr factor()
  {
    skip_space();
    if (accept('-'))
      return Expr::negate(factor());

    Expr base = atom();
    skip_space();
    if (!accept('^'))
      return base;

    skip_space();
    std::size_t start = _pos;
    while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos])))
      ++_pos;
    bool trailing = _pos < _src.size() &&
                    (_src[_pos] == '.' || std::isalpha(static_cast<unsigned char>(_src[_pos])));
    if (start == _pos || trailing || _pos - start > 9)
      throw Error(ErrorKind::BadExponent, "exponent at offset " + std::to_string(start) +
                                            " must be a literal non-negative integer");
    auto exponent = static_cast<unsigned>(std::stoul(std::string(_src.substr(start, _pos - start))));
    return Expr::power(base, exponent);
  }

  Expr atom()
  {
    skip_space();
    if (_pos == _src.size())
      fail("unexpected end of input");

    char c = _src[_pos];
    if (accept('(')) {
      Expr e = expr();
      skip_space();
      if (!accept(')'))
        fail("expected ')'");
      return e;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = _pos;
      while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos])))
        ++_pos;
      if (_pos < _src.size() && _src[_pos] == '.') {
        ++_pos;
        while (_pos < _src.size() && std::isdigit(static_cast<unsigned char>(_src[_pos])))
          ++_pos;
      }
      std::string literal(_src.substr(start, _pos - start));
      if (literal == ".")
        fail_at(start, "malformed number");
      return Expr::number(std::move(literal));
    }

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = _pos;
      while (_pos < _src.size() && std::isalnum(static_cast<unsigned char>(_src[_pos])))
        ++_pos;
      std::string name(_src.substr(start, _pos - start));
      if (name.size() >= 2 && name[0] == 'x' &&
          name.find_first_not_of("0123456789", 1) == std::string::npos && name[1] != '0') {
        std::size_t index = name.size() > 10 ? 0 : std::stoul(name.substr(1));
        if (index >= 1 && index <= _dim)
          return Expr::variable(index - 1);
      }
      throw Error(ErrorKind::UnknownVariable,
                  "'" + name + "' at offset " + std::to_string(start) + " is not one of x1..x" +
                    std::to_string(_dim));
    }

    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool accept(char c)
  {
    if (_pos < _src.size() && _src[_pos] == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  void skip_space()
  {
    while (_pos < _src.size() && std::isspace(static_cast<unsigned char>(_src[_pos])))
      ++_pos;
  }

  [[noreturn]] void fail(std::string const &what) const
  { fail_at(_pos, what); }

  [[noreturn]] void fail_at(std::size_t offset, std::string const &what) const
  { throw Error(ErrorKind::SyntaxError, "offset " + std::to_string(offset) + ": " + what); }

  std::string_view _src;
  std::size_t _dim;
  std::size_t _pos = 0;
};

int precedence(Expr::Kind kind)
{
  switch (kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Subtract:
      return 1;
    case Expr::Kind::Multiply:
    case Expr::Kind::Divide:
      return 2;
    case Expr::Kind::Negate:
      return 3;
    case Expr::Kind::Power:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(Expr const &e, bool parens)
{ return parens ? "(" + print(e) + ")" : print(e); }

} // namespace

Expr parse_expr(std::string_view source, std::size_t dim)
{ return Parser(source, dim).run(); }

std::string print(Expr const &e)
{
  switch (e.kind()) {
    case Expr::Kind::Number:
      return e.literal();
    case Expr::Kind::Variable:
      return "x" + std::to_string(e.variable_index() + 1);
    case Expr::Kind::Negate:
      return "-" + wrap(e.lhs(), precedence(e.lhs().kind()) < precedence(Expr::Kind::Negate));
    case Expr::Kind::Power:
      // the base must be an atom
      return wrap(e.lhs(), precedence(e.lhs().kind()) < 5) + "^" + std::to_string(e.exponent());
    case Expr::Kind::Add:
    case Expr::Kind::Subtract:
    case Expr::Kind::Multiply:
    case Expr::Kind::Divide: {
      int p = precedence(e.kind());
      char const *op = e.kind() == Expr::Kind::Add        ? " + "
                       : e.kind() == Expr::Kind::Subtract ? " - "
                       : e.kind() == Expr::Kind::Multiply ? "*"
                                                          : "/";
      // left associative: equal precedence needs parentheses on the right only
      return wrap(e.lhs(), precedence(e.lhs().kind()) < p) + op +
             wrap(e.rhs(), precedence(e.rhs().kind()) <= p);
    }
  }
  return {};
}

double eval(Expr const &e, std::span<double const> point)
{
  switch (e.kind()) {
    case Expr::Kind::Number:
      return e.value();
    case Expr::Kind::Variable:
      if (e.variable_index() >= point.size())
        throw Error(ErrorKind::UnknownVariable, "point has no coordinate x" +
                                                  std::to_string(e.variable_index() + 1));
      return point[e.variable_index()];
    case Expr::Kind::Negate:
      return -eval(e.lhs(), point);
    case Expr::Kind::Add:
      return eval(e.lhs(), point) + eval(e.rhs(), point);
    case Expr::Kind::Subtract:
      return eval(e.lhs(), point) - eval(e.rhs(), point);
    case Expr::Kind::Multiply:
      return eval(e.lhs(), point) * eval(e.rhs(), point);
    case Expr::Kind::Divide: {
      double num = eval(e.lhs(), point);
      double den = eval(e.rhs(), point);
      if (den == 0.0)
        throw Error(ErrorKind::DivisionByZero, "division by zero in " + print(e));
      return num / den;
    }
    case Expr::Kind::Power: {
      double base = eval(e.lhs(), point);
      double result = 1.0;
      for (unsigned k = 0; k < e.exponent(); ++k)
        result *= base;
      return result;
    }
  }
  return 0.0;
}

std::vector<std::vector<double>> jacobian_fd(std::vector<Expr> const &exprs,
                                             std::span<double const> point)
{
  double const h = kJacobianStep;
  std::vector<double> x(point.begin(), point.end());
  std::vector<std::vector<double>> J(exprs.size(), std::vector<double>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    double const xj = x[j];
    x[j] = xj + h;
    std::vector<double> forward;
    for (auto const &f : exprs)
      forward.push_back(eval(f, x));
    x[j] = xj - h;
    for (std::size_t i = 0; i < exprs.size(); ++i)
      J[i][j] = (forward[i] - eval(exprs[i], x)) / (2 * h);
    x[j] = xj;
  }
  return J;
}

} // namespace burneq
