#include "burneq/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace burneq
{

namespace
{

bool all_digits(std::string_view s)
{
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);

  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(Integer{std::string(num)}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
      scale *= 10;
    Integer digits(std::string(whole) + std::string(frac));
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    result = Rational(Integer(std::string(body)));
  }

  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(Rational const &q)
{
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(Integer const &z)
{ return z.get_str(); }

std::string to_string(QVector const &v)
{
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

QMatrix QMatrix::identity(std::size_t n)
{
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::vector<QVector> const &columns, std::size_t rows)
{
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const
{
  QVector v(_rows);
  for (std::size_t r = 0; r < _rows; ++r)
    v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const
{
  QMatrix t(_cols, _rows);
  for (std::size_t r = 0; r < _rows; ++r)
    for (std::size_t c = 0; c < _cols; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_identity() const
{
  if (_rows != _cols)
    return false;
  for (std::size_t r = 0; r < _rows; ++r)
    for (std::size_t c = 0; c < _cols; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0))
        return false;
  return true;
}

QMatrix operator*(QMatrix const &a, QMatrix const &b)
{
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch");
  QMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

QMatrix operator+(QMatrix const &a, QMatrix const &b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s(i, j) = a(i, j) + b(i, j);
  return s;
}

QMatrix operator-(QMatrix const &a, QMatrix const &b)
{ return a + Rational(-1) * b; }

QMatrix operator*(Rational const &s, QMatrix const &a)
{
  QMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = s * a(i, j);
  return m;
}

QVector operator*(QMatrix const &a, QVector const &v)
{
  if (a.cols() != v.size())
    throw std::invalid_argument("matrix-vector shape mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0)
        out[i] += a(i, j) * v[j];
  return out;
}

QVector operator+(QVector const &a, QVector const &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("vector length mismatch");
  QVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    s[i] = a[i] + b[i];
  return s;
}

QVector operator-(QVector const &a, QVector const &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("vector length mismatch");
  QVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    s[i] = a[i] - b[i];
  return s;
}

QVector operator*(Rational const &s, QVector const &v)
{
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = s * v[i];
  return out;
}

Rational dot(QVector const &a, QVector const &b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

bool is_zero(QVector const &v)
{
  return std::all_of(v.begin(), v.end(), [](Rational const &q) { return sgn(q) == 0; });
}

QMatrix direct_sum(QMatrix const &a, QMatrix const &b)
{
  QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

RowEchelon row_reduce(QMatrix m)
{
  RowEchelon result;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0)
      ++pivot;
    if (pivot == m.rows())
      continue;

    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(pivot, c), m(row, c));

    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      m(row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0)
        continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(row, c);
    }

    result.pivots.push_back(col);
    ++row;
  }
  result.reduced = std::move(m);
  return result;
}

std::size_t rank(QMatrix const &m)
{ return row_reduce(m).pivots.size(); }

std::vector<QVector> kernel_basis(QMatrix const &m)
{
  auto echelon = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : echelon.pivots)
    is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
      v[echelon.pivots[r]] = -echelon.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(QMatrix m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");

  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0)
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0)
        continue;
      Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c)
        m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

QMatrix inverse(QMatrix const &m)
{
  if (m.rows() != m.cols())
    throw std::domain_error("inverse of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0)
    return m;
  QMatrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  auto echelon = row_reduce(std::move(augmented));
  if (echelon.pivots.size() < n || echelon.pivots[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = echelon.reduced(i, n + j);
  return inv;
}

bool lex_less(QVector const &a, QVector const &b)
{
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<double> approximate(QVector const &v)
{
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i].get_d();
  return out;
}

} // namespace burneq
