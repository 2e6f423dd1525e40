#include <doctest.h>

#include <cmath>

#include "burneq/error.hpp"
#include "burneq/expr.hpp"
#include "support/oracles.hpp"

using namespace burneq;

namespace
{

ErrorKind kind_of(auto &&fn)
{
  try {
    fn();
  } catch (Error const &e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

double at(std::string const &src, std::vector<double> const &x)
{ return eval(parse_expr(src, x.size()), x); }

} // namespace

TEST_CASE("parsing")
{
  auto e = parse_expr("x1 - x2^2", 2);
  CHECK(e.kind() == Expr::Kind::Subtract);
  CHECK(e.rhs().kind() == Expr::Kind::Power);
  CHECK(e.rhs().exponent() == 2);

  CHECK(kind_of([] { parse_expr("x3", 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_expr("x0", 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_expr("y", 2); }) == ErrorKind::UnknownVariable);
  CHECK(kind_of([] { parse_expr("x1 ^ x2", 2); }) == ErrorKind::BadExponent);
  CHECK(kind_of([] { parse_expr("x1^2.5", 2); }) == ErrorKind::BadExponent);
  CHECK(kind_of([] { parse_expr("x1^-1", 2); }) == ErrorKind::BadExponent);
  CHECK(kind_of([] { parse_expr("x1 +", 2); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_expr("(x1", 2); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse_expr("", 2); }) == ErrorKind::SyntaxError);

  try {
    parse_expr("x1 $ 2", 2);
  } catch (Error const &err) {
    CHECK(err.detail().find("offset 3") != std::string::npos);
  }
}

TEST_CASE("precedence and evaluation")
{
  CHECK(at("x1*x2", {3, 4}) == 12);
  CHECK(at("-x1^2", {2}) == -4);
  CHECK(at("(-x1)^2", {2}) == 4);
  CHECK(at("x1 - x2 - x3", {1, 2, 3}) == -4);
  CHECK(at("x1/x2/x3", {8, 2, 2}) == 2);
  CHECK(kind_of([] { at("2^3^1", {0}); }) == ErrorKind::SyntaxError);
  CHECK(at("1/2 + 0.25", {0}) == 0.75);
  CHECK(at("x1^0", {5}) == 1);
  CHECK(kind_of([] { at("1/x1", {0}); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("printing")
{
  auto shown = [](std::string const &src) { return print(parse_expr(src, 3)); };
  CHECK(shown("(x1 + x2) * x3") == "(x1 + x2)*x3");
  CHECK(shown("x1 - (x2 - x3)") == "x1 - (x2 - x3)");
  CHECK(shown("(x1 - x2) - x3") == "x1 - x2 - x3");
  CHECK(shown("-x1^2") == "-x1^2");
  CHECK(shown("(-x1)^2") == "(-x1)^2");
  CHECK(shown("x1/(x2*x3)") == "x1/(x2*x3)");
  CHECK(shown("(x1^2)^3") == "(x1^2)^3");
  CHECK(shown("2*x1+x2") == "2*x1 + x2");

  for (auto const *src : {"x1 - -x2", "-(x1 + x2)", "1/2", "0.25*x2 - 3", "((x1))", "x1*(x2/x3)",
                          "(x1 + 1)^3 - x2*x3/7", "--x1", "-x1*x2", "(x1^2)^2"}) {
    CAPTURE(src);
    auto e = parse_expr(src, 3);
    CHECK(parse_expr(print(e), 3) == e);
  }
}

TEST_CASE("finite-difference Jacobian")
{
  auto sys = [](std::vector<std::string> const &srcs, std::size_t dim) {
    std::vector<Expr> out;
    for (auto const &s : srcs)
      out.push_back(parse_expr(s, dim));
    return out;
  };

  for (std::vector<double> x : {std::vector<double>{0, 0}, {1.5, -2}, {100, 3}}) {
    auto J = jacobian_fd(sys({"2*x1+x2", "x1"}, 2), x);
    CHECK(std::abs(J[0][0] - 2) < 1e-6);
    CHECK(std::abs(J[0][1] - 1) < 1e-6);
    CHECK(std::abs(J[1][0] - 1) < 1e-6);
    CHECK(std::abs(J[1][1]) < 1e-6);
  }

  std::vector<double> three{3};
  CHECK(std::abs(jacobian_fd(sys({"x1^2"}, 1), three)[0][0] - 6) < 1e-6);

  std::vector<double> origin{0, 0};
  auto J = jacobian_fd(sys({"x1*x2"}, 2), origin);
  REQUIRE(J.size() == 1);
  CHECK(std::abs(J[0][0]) < 1e-6);
  CHECK(std::abs(J[0][1]) < 1e-6);

  std::vector<double> zero{0};
  CHECK(kind_of([&] { jacobian_fd(sys({"1/(x1 - x1)"}, 1), zero); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("random round trips and symbolic derivatives")
{
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    Expr e = oracles::random_expr(rng, 3, 5);
    CAPTURE(print(e));
    CHECK(parse_expr(print(e), 3) == e);
  }

  // the oracle itself on known derivatives
  auto d = [](std::string const &src, std::size_t j, std::vector<double> const &x) {
    return eval(oracles::derivative(parse_expr(src, x.size()), j), x);
  };
  CHECK(d("x1^3", 0, {2}) == 12);
  CHECK(d("x1*x2 - x2/x1", 0, {2, 4}) == 5);
  CHECK(d("-(x1 + 3)^2", 0, {1}) == -8);
}
