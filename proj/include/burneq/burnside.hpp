#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "burneq/group.hpp"
#include "burneq/rational.hpp"

namespace burneq
{

/// marks[i][j] = |(G/H_i)^{H_j}| for class representatives H_i, H_j in
/// canonical class order. Rows index the G-set, columns the subgroup that
/// fixes points.
struct TableOfMarks
{
  std::vector<std::vector<std::int64_t>> marks;

  std::size_t size() const
  { return marks.size(); }
};

/// Fixed cosets counted directly: gH_i is fixed by H_j iff g^-1 H_j g <= H_i.
TableOfMarks table_of_marks(SubgroupLattice const &lattice);

class BurnsideElement;

/// The Burnside ring A(G) of one group: its subgroup lattice and table of
/// marks. Elements keep a shared pointer to the ring they belong to.
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing>
{
public:
  static std::shared_ptr<BurnsideRing const> create(std::shared_ptr<FiniteGroup const> group);

  SubgroupLattice const &lattice() const
  { return _lattice; }

  FiniteGroup const &group() const
  { return _lattice.group(); }

  TableOfMarks const &marks() const
  { return _marks; }

  std::size_t rank() const
  { return _lattice.class_count(); }

  BurnsideElement zero() const;
  BurnsideElement one() const;

  /// The basis element [G/H_cls].
  BurnsideElement basis(std::size_t cls) const;

  /// Mark vector phi(x)_j = sum_i x_i marks[i][j].
  std::vector<Integer> mark_vector(BurnsideElement const &x) const;

  /// Inverse of mark_vector by back-substitution on the triangular table.
  /// Throws NonIntegralSolution when the vector is not in the image.
  BurnsideElement from_marks(std::vector<Integer> const &phi) const;

  /// Parses "2*[G/e] + [G/(1 2)] - 3*[G/G]" or "0"; throws InvalidInput or
  /// UnknownClassLabel.
  BurnsideElement parse(std::string_view text) const;

  /// "2*[G/e] + 1*[G/(1 2)]" in canonical class order; zero prints as "0".
  std::string format(BurnsideElement const &x) const;

private:
  explicit BurnsideRing(std::shared_ptr<FiniteGroup const> group);

  SubgroupLattice _lattice;
  TableOfMarks _marks;
};

class BurnsideElement
{
public:
  BurnsideElement(std::shared_ptr<BurnsideRing const> ring, std::vector<Integer> coeffs);

  BurnsideRing const &ring() const
  { return *_ring; }

  std::shared_ptr<BurnsideRing const> const &ring_ptr() const
  { return _ring; }

  std::vector<Integer> const &coeffs() const
  { return _coeffs; }

  Integer const &operator[](std::size_t cls) const
  { return _coeffs[cls]; }

  bool is_zero() const;

  std::string to_string() const
  { return _ring->format(*this); }

  friend bool operator==(BurnsideElement const &a, BurnsideElement const &b)
  { return a._ring == b._ring && a._coeffs == b._coeffs; }

private:
  std::shared_ptr<BurnsideRing const> _ring;
  std::vector<Integer> _coeffs;
};

BurnsideElement add(BurnsideElement const &a, BurnsideElement const &b);
BurnsideElement negate(BurnsideElement const &a);
BurnsideElement scale(Integer const &s, BurnsideElement const &a);

/// Product through the mark homomorphism: pointwise product of mark
/// vectors, then triangular solve.
BurnsideElement mul(BurnsideElement const &a, BurnsideElement const &b);

inline BurnsideElement operator+(BurnsideElement const &a, BurnsideElement const &b)
{ return add(a, b); }

inline BurnsideElement operator-(BurnsideElement const &a, BurnsideElement const &b)
{ return add(a, negate(b)); }

inline BurnsideElement operator*(BurnsideElement const &a, BurnsideElement const &b)
{ return mul(a, b); }

/// A finite G-set: action[g][x] is the image of point x under element g.
struct FiniteGSet
{
  std::size_t size = 0;
  std::vector<std::vector<std::uint32_t>> action;
};

/// Throws InvalidAction unless action is a homomorphism G -> Sym(size).
void validate_gset(FiniteGroup const &G, FiniteGSet const &X);

/// Orbit decomposition: one [G/G_x] per orbit. Independent of the marks.
BurnsideElement decompose_gset(BurnsideRing const &ring, FiniteGSet const &X);

/// G/H_a x G/H_b with the diagonal action on pairs of left cosets.
FiniteGSet product_gset(SubgroupLattice const &lattice, std::size_t a, std::size_t b);

/// Left cosets G/H with the translation action.
FiniteGSet coset_gset(FiniteGroup const &G, Subgroup const &H);

/// Disjoint union X + Y.
FiniteGSet disjoint_union(FiniteGSet const &X, FiniteGSet const &Y);

} // namespace burneq
