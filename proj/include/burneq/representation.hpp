#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "burneq/burnside.hpp"
#include "burneq/group.hpp"
#include "burneq/rational.hpp"

namespace burneq
{

/// Linear subspace V^H, spanned by an exact kernel basis of P_H - I.
struct FixedSubspace
{
  Subgroup subgroup;
  std::size_t subgroup_class = 0;
  std::vector<QVector> basis;

  std::size_t dim() const
  { return basis.size(); }
};

struct OrbitTypeEntry
{
  std::size_t subgroup_class = 0;
  std::size_t dim_fixed = 0;
  bool occupied = false;
  std::optional<QVector> witness; // a point with isotropy exactly the representative
};

struct OrbitTypeTable
{
  std::vector<OrbitTypeEntry> entries; // canonical class order
};

/// A real orthogonal representation of a finite group with exact rational
/// matrices for every group element.
class Representation
{
public:
  /// One matrix per group generator, in generator order. Throws
  /// DimensionMismatch, NotOrthogonal or NotAHomomorphism.
  static std::shared_ptr<Representation const>
  build(std::shared_ptr<BurnsideRing const> ring, std::vector<QMatrix> const &generator_matrices);

  BurnsideRing const &ring() const
  { return *_ring; }

  std::shared_ptr<BurnsideRing const> const &ring_ptr() const
  { return _ring; }

  SubgroupLattice const &lattice() const
  { return _ring->lattice(); }

  FiniteGroup const &group() const
  { return _ring->group(); }

  std::size_t dim() const
  { return _dim; }

  QMatrix const &matrix(ElementIndex g) const
  { return _matrices[g]; }

  std::vector<QMatrix> const &generator_matrices() const
  { return _generator_matrices; }

  QVector act(ElementIndex g, QVector const &x) const;

  /// P_H = (1/|H|) sum_{h in H} rho(h), the orthogonal projector onto V^H.
  QMatrix projector(Subgroup const &H) const;

  FixedSubspace fixed_subspace(Subgroup const &H) const;

  /// dim V^H for every subgroup in lattice order, computed at build time.
  std::size_t fixed_dim(Subgroup const &H) const;

  Subgroup isotropy(QVector const &x) const;

  /// Distinct points rho(g)x in order of first appearance; orbit[0] == x.
  std::vector<QVector> orbit(QVector const &x) const;

  OrbitTypeTable orbit_types() const;

private:
  Representation() = default;

  std::shared_ptr<BurnsideRing const> _ring;
  std::size_t _dim = 0;
  std::vector<QMatrix> _generator_matrices;
  std::vector<QMatrix> _matrices;
  std::vector<std::size_t> _fixed_dims; // indexed like lattice().subgroups()
};

/// V + W with block-diagonal matrices; both over the same group.
std::shared_ptr<Representation const> direct_sum(Representation const &V, Representation const &W);

/// The orbit of x as a finite G-set, points in Representation::orbit order.
FiniteGSet orbit_gset(Representation const &rep, QVector const &x);

} // namespace burneq
