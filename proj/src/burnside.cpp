#include "burneq/burnside.hpp"

#include <algorithm>
#include <cctype>

#include "burneq/error.hpp"

namespace burneq
{

TableOfMarks table_of_marks(SubgroupLattice const &lattice)
{
  FiniteGroup const &G = lattice.group();
  auto const &classes = lattice.classes();
  std::size_t const c = classes.size();

  TableOfMarks table;
  table.marks.assign(c, std::vector<std::int64_t>(c, 0));

  for (std::size_t i = 0; i < c; ++i) {
    Subgroup const &H = classes[i].representative;

    // one representative g per left coset gH
    std::vector<bool> covered(G.order(), false);
    std::vector<ElementIndex> coset_reps;
    for (ElementIndex g = 0; g < G.order(); ++g) {
      if (covered[g])
        continue;
      coset_reps.push_back(g);
      for (auto h : H.elements)
        covered[G.mul(g, h)] = true;
    }

    for (std::size_t j = 0; j < c; ++j) {
      Subgroup const &K = classes[j].representative;
      std::int64_t fixed = 0;
      for (auto g : coset_reps) {
        ElementIndex ginv = G.inverse(g);
        bool fixes = std::all_of(K.elements.begin(), K.elements.end(), [&](ElementIndex k) {
          return H.contains(G.mul(G.mul(ginv, k), g));
        });
        if (fixes)
          ++fixed;
      }
      table.marks[i][j] = fixed;
    }
  }
  return table;
}

BurnsideRing::BurnsideRing(std::shared_ptr<FiniteGroup const> group)
: _lattice(std::move(group)),
  _marks(table_of_marks(_lattice))
{}

std::shared_ptr<BurnsideRing const> BurnsideRing::create(std::shared_ptr<FiniteGroup const> group)
{ return std::shared_ptr<BurnsideRing const>(new BurnsideRing(std::move(group))); }

BurnsideElement BurnsideRing::zero() const
{ return BurnsideElement(shared_from_this(), std::vector<Integer>(rank())); }

BurnsideElement BurnsideRing::one() const
{ return basis(_lattice.whole_class()); }

BurnsideElement BurnsideRing::basis(std::size_t cls) const
{
  std::vector<Integer> coeffs(rank());
  coeffs.at(cls) = 1;
  return BurnsideElement(shared_from_this(), std::move(coeffs));
}

std::vector<Integer> BurnsideRing::mark_vector(BurnsideElement const &x) const
{
  std::size_t const c = rank();
  std::vector<Integer> phi(c);
  for (std::size_t i = 0; i < c; ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (std::size_t j = 0; j <= i; ++j)
      if (_marks.marks[i][j] != 0)
        phi[j] += x[i] * Integer(static_cast<long>(_marks.marks[i][j]));
  }
  return phi;
}

BurnsideElement BurnsideRing::from_marks(std::vector<Integer> const &phi) const
{
  std::size_t const c = rank();
  if (phi.size() != c)
    throw Error(ErrorKind::InvalidInput, "mark vector has wrong length");

  std::vector<Integer> coeffs(c);
  for (std::size_t j = c; j-- > 0;) {
    Integer rhs = phi[j];
    for (std::size_t i = j + 1; i < c; ++i)
      if (_marks.marks[i][j] != 0)
        rhs -= coeffs[i] * Integer(static_cast<long>(_marks.marks[i][j]));
    Integer diag(static_cast<long>(_marks.marks[j][j]));
    if (!mpz_divisible_p(rhs.get_mpz_t(), diag.get_mpz_t()))
      throw Error(ErrorKind::NonIntegralSolution,
                  "mark vector entry " + std::to_string(j) + " is not divisible by " +
                    diag.get_str());
    mpz_divexact(coeffs[j].get_mpz_t(), rhs.get_mpz_t(), diag.get_mpz_t());
  }
  return BurnsideElement(shared_from_this(), std::move(coeffs));
}

namespace
{

/// Collapses whitespace runs to one space and drops spaces next to
/// parentheses and commas, so "( 1  2 )" and "(1 2)" compare equal.
std::string normalize_label(std::string_view raw)
{
  std::string collapsed;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!collapsed.empty() && collapsed.back() != ' ')
        collapsed.push_back(' ');
    } else {
      collapsed.push_back(c);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < collapsed.size(); ++i) {
    char c = collapsed[i];
    if (c == ' ') {
      char prev = out.empty() ? '(' : out.back();
      char next = i + 1 < collapsed.size() ? collapsed[i + 1] : ')';
      if (prev == '(' || prev == ',' || prev == ')' || next == '(' || next == ')' || next == ',')
        continue;
    }
    out.push_back(c);
  }
  return out;
}

class ElementParser
{
public:
  ElementParser(BurnsideRing const &ring, std::string_view text)
  : _ring(ring), _text(text)
  {}

  std::vector<Integer> run()
  {
    std::vector<Integer> coeffs(_ring.rank());
    skip_space();
    if (_pos == _text.size())
      fail("empty element");

    bool first = true;
    while (true) {
      skip_space();
      if (_pos == _text.size())
        break;

      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++_pos;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      Integer coeff = 1;
      bool has_number = false;
      if (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = _pos;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(peek())))
          ++_pos;
        coeff = Integer(std::string(_text.substr(start, _pos - start)));
        has_number = true;
        skip_space();
      }

      if (has_number && (_pos == _text.size() || peek() == '+' || peek() == '-')) {
        // a bare integer term is only meaningful as zero
        if (sgn(coeff) != 0)
          fail("bare integer term must be 0");
        continue;
      }
      if (has_number) {
        if (peek() != '*')
          fail("expected '*'");
        ++_pos;
        skip_space();
      }

      if (_text.substr(_pos, 3) != "[G/")
        fail("expected '[G/'");
      _pos += 3;
      auto close = _text.find(']', _pos);
      if (close == std::string_view::npos)
        fail("unterminated class label");
      std::string label = normalize_label(_text.substr(_pos, close - _pos));
      _pos = close + 1;

      std::size_t cls = _ring.lattice().find_label(label);
      if (cls == _ring.rank())
        throw Error(ErrorKind::UnknownClassLabel, "no subgroup class labelled '" + label + "'");
      coeffs[cls] += sign * coeff;
    }
    return coeffs;
  }

private:
  char peek() const
  { return _text[_pos]; }

  void skip_space()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw Error(ErrorKind::InvalidInput, "Burnside element '" + std::string(_text) +
                                           "' at offset " + std::to_string(_pos) + ": " + what);
  }

  BurnsideRing const &_ring;
  std::string_view _text;
  std::size_t _pos = 0;
};

} // namespace

BurnsideElement BurnsideRing::parse(std::string_view text) const
{ return BurnsideElement(shared_from_this(), ElementParser(*this, text).run()); }

std::string BurnsideRing::format(BurnsideElement const &x) const
{
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    Integer const &c = x[i];
    if (sgn(c) == 0)
      continue;
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    Integer mag = abs(c);
    out += mag.get_str() + "*[G/" + _lattice.label(i) + "]";
  }
  return out.empty() ? "0" : out;
}

BurnsideElement::BurnsideElement(std::shared_ptr<BurnsideRing const> ring,
                                 std::vector<Integer> coeffs)
: _ring(std::move(ring)), _coeffs(std::move(coeffs))
{
  if (_coeffs.size() != _ring->rank())
    throw Error(ErrorKind::InvalidInput, "coefficient vector has wrong length");
}

bool BurnsideElement::is_zero() const
{
  return std::all_of(_coeffs.begin(), _coeffs.end(), [](Integer const &z) { return sgn(z) == 0; });
}

namespace
{

void require_same_ring(BurnsideElement const &a, BurnsideElement const &b)
{
  if (a.ring_ptr() != b.ring_ptr())
    throw Error(ErrorKind::GroupMismatch, "Burnside elements belong to different groups");
}

} // namespace

BurnsideElement add(BurnsideElement const &a, BurnsideElement const &b)
{
  require_same_ring(a, b);
  std::vector<Integer> coeffs(a.coeffs().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = a[i] + b[i];
  return BurnsideElement(a.ring_ptr(), std::move(coeffs));
}

BurnsideElement negate(BurnsideElement const &a)
{ return scale(Integer(-1), a); }

BurnsideElement scale(Integer const &s, BurnsideElement const &a)
{
  std::vector<Integer> coeffs(a.coeffs().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = s * a[i];
  return BurnsideElement(a.ring_ptr(), std::move(coeffs));
}

BurnsideElement mul(BurnsideElement const &a, BurnsideElement const &b)
{
  require_same_ring(a, b);
  BurnsideRing const &ring = a.ring();
  auto phi = ring.mark_vector(a);
  auto psi = ring.mark_vector(b);
  for (std::size_t j = 0; j < phi.size(); ++j)
    phi[j] *= psi[j];
  return ring.from_marks(phi);
}

void validate_gset(FiniteGroup const &G, FiniteGSet const &X)
{
  if (X.action.size() != G.order())
    throw Error(ErrorKind::InvalidAction, "action table needs one row per group element");
  for (auto const &row : X.action) {
    if (row.size() != X.size)
      throw Error(ErrorKind::InvalidAction, "action row has wrong length");
    std::vector<bool> hit(X.size, false);
    for (auto y : row) {
      if (y >= X.size || hit[y])
        throw Error(ErrorKind::InvalidAction, "action row is not a permutation");
      hit[y] = true;
    }
  }
  for (std::size_t x = 0; x < X.size; ++x)
    if (X.action[0][x] != x)
      throw Error(ErrorKind::InvalidAction, "identity does not act trivially");
  for (ElementIndex g = 0; g < G.order(); ++g)
    for (ElementIndex h = 0; h < G.order(); ++h) {
      auto const &gh = X.action[G.mul(g, h)];
      for (std::size_t x = 0; x < X.size; ++x)
        if (gh[x] != X.action[g][X.action[h][x]])
          throw Error(ErrorKind::InvalidAction, "action is not compatible with multiplication");
    }
}

BurnsideElement decompose_gset(BurnsideRing const &ring, FiniteGSet const &X)
{
  FiniteGroup const &G = ring.group();
  validate_gset(G, X);

  std::vector<Integer> coeffs(ring.rank());
  std::vector<bool> visited(X.size, false);
  for (std::size_t x = 0; x < X.size; ++x) {
    if (visited[x])
      continue;
    Subgroup stabilizer;
    for (ElementIndex g = 0; g < G.order(); ++g) {
      visited[X.action[g][x]] = true;
      if (X.action[g][x] == x)
        stabilizer.elements.push_back(g);
    }
    coeffs[ring.lattice().class_of(stabilizer)] += 1;
  }
  return BurnsideElement(ring.shared_from_this(), std::move(coeffs));
}

FiniteGSet coset_gset(FiniteGroup const &G, Subgroup const &H)
{
  std::vector<std::uint32_t> coset_of(G.order(), UINT32_MAX);
  std::vector<ElementIndex> reps;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    if (coset_of[g] != UINT32_MAX)
      continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g);
    for (auto h : H.elements)
      coset_of[G.mul(g, h)] = id;
  }

  FiniteGSet X;
  X.size = reps.size();
  X.action.assign(G.order(), std::vector<std::uint32_t>(X.size));
  for (ElementIndex g = 0; g < G.order(); ++g)
    for (std::size_t c = 0; c < reps.size(); ++c)
      X.action[g][c] = coset_of[G.mul(g, reps[c])];
  return X;
}

FiniteGSet product_gset(SubgroupLattice const &lattice, std::size_t a, std::size_t b)
{
  FiniteGroup const &G = lattice.group();
  FiniteGSet X = coset_gset(G, lattice.classes().at(a).representative);
  FiniteGSet Y = coset_gset(G, lattice.classes().at(b).representative);

  FiniteGSet P;
  P.size = X.size * Y.size;
  P.action.assign(G.order(), std::vector<std::uint32_t>(P.size));
  for (ElementIndex g = 0; g < G.order(); ++g)
    for (std::size_t x = 0; x < X.size; ++x)
      for (std::size_t y = 0; y < Y.size; ++y)
        P.action[g][x * Y.size + y] =
          static_cast<std::uint32_t>(X.action[g][x] * Y.size + Y.action[g][y]);
  return P;
}

FiniteGSet disjoint_union(FiniteGSet const &X, FiniteGSet const &Y)
{
  if (X.action.size() != Y.action.size())
    throw Error(ErrorKind::GroupMismatch, "G-sets over different groups");
  FiniteGSet U;
  U.size = X.size + Y.size;
  U.action.resize(X.action.size());
  for (std::size_t g = 0; g < X.action.size(); ++g) {
    U.action[g] = X.action[g];
    for (auto y : Y.action[g])
      U.action[g].push_back(static_cast<std::uint32_t>(y + X.size));
  }
  return U;
}

} // namespace burneq
