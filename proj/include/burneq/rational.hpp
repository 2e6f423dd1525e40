#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace burneq
{

using Integer = mpz_class;
using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Accepts "p/q", signed integers and finite decimals ("-0.25").
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q" with q > 1, or "p".
std::string to_string(Rational const &q);
std::string to_string(Integer const &z);
std::string to_string(QVector const &v);

/// Dense row-major matrix over the rationals.
class QMatrix
{
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
  : _rows(rows), _cols(cols), _data(rows * cols)
  {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(std::vector<QVector> const &columns, std::size_t rows);

  std::size_t rows() const
  { return _rows; }

  std::size_t cols() const
  { return _cols; }

  Rational &operator()(std::size_t r, std::size_t c)
  { return _data[r * _cols + c]; }

  Rational const &operator()(std::size_t r, std::size_t c) const
  { return _data[r * _cols + c]; }

  QVector column(std::size_t c) const;
  QMatrix transpose() const;
  bool is_identity() const;

  friend bool operator==(QMatrix const &, QMatrix const &) = default;

private:
  std::size_t _rows = 0;
  std::size_t _cols = 0;
  std::vector<Rational> _data;
};

QMatrix operator*(QMatrix const &a, QMatrix const &b);
QMatrix operator+(QMatrix const &a, QMatrix const &b);
QMatrix operator-(QMatrix const &a, QMatrix const &b);
QMatrix operator*(Rational const &s, QMatrix const &a);
QVector operator*(QMatrix const &a, QVector const &v);

QVector operator+(QVector const &a, QVector const &b);
QVector operator-(QVector const &a, QVector const &b);
QVector operator*(Rational const &s, QVector const &v);
Rational dot(QVector const &a, QVector const &b);
bool is_zero(QVector const &v);

/// Block diagonal diag(a, b).
QMatrix direct_sum(QMatrix const &a, QMatrix const &b);

struct RowEchelon
{
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon row_reduce(QMatrix m);

std::size_t rank(QMatrix const &m);

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that
/// column, in increasing column order.
std::vector<QVector> kernel_basis(QMatrix const &m);

Rational determinant(QMatrix m);

/// Throws std::domain_error when m is singular.
QMatrix inverse(QMatrix const &m);

/// Lexicographic order on equal-length vectors, for exact deduplication.
bool lex_less(QVector const &a, QVector const &b);

/// Floating approximation, for fast pre-screening only.
std::vector<double> approximate(QVector const &v);

} // namespace burneq
