#include "burneq/representation.hpp"

#include <algorithm>
#include <map>

#include "burneq/error.hpp"
#include "burneq/realization.hpp"

namespace burneq
{

std::shared_ptr<Representation const>
Representation::build(std::shared_ptr<BurnsideRing const> ring,
                      std::vector<QMatrix> const &generator_matrices)
{
  FiniteGroup const &G = ring->group();
  if (generator_matrices.size() != G.generators().size())
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(G.generators().size()) + " generator matrices, got " +
                  std::to_string(generator_matrices.size()));

  std::size_t const n = generator_matrices.empty() ? 0 : generator_matrices.front().rows();
  for (std::size_t s = 0; s < generator_matrices.size(); ++s) {
    auto const &M = generator_matrices[s];
    if (M.rows() != n || M.cols() != n)
      throw Error(ErrorKind::DimensionMismatch,
                  "generator matrix " + std::to_string(s) + " is not " + std::to_string(n) + "x" +
                    std::to_string(n));
    if (!(M.transpose() * M).is_identity())
      throw Error(ErrorKind::NotOrthogonal,
                  "generator matrix " + std::to_string(s) + " does not satisfy M^T M = I");
  }

  auto rep = std::shared_ptr<Representation>(new Representation());
  rep->_ring = std::move(ring);
  rep->_dim = n;
  rep->_generator_matrices = generator_matrices;

  // extend along the breadth-first tree of the group closure
  rep->_matrices.resize(G.order());
  rep->_matrices[0] = QMatrix::identity(n);
  for (ElementIndex a = 1; a < G.order(); ++a)
    rep->_matrices[a] = rep->_matrices[G.parent(a)] * generator_matrices[G.step(a)];

  // rho(a) rho(s) = rho(a s) on generators makes rho a homomorphism
  for (ElementIndex a = 0; a < G.order(); ++a)
    for (std::size_t s = 0; s < generator_matrices.size(); ++s) {
      ElementIndex as = G.mul(a, G.generator_element(s));
      if (!(rep->_matrices[a] * generator_matrices[s] == rep->_matrices[as]))
        throw Error(ErrorKind::NotAHomomorphism,
                    "matrices violate the group relation at element " + std::to_string(a) +
                      " times generator " + std::to_string(s));
    }

  auto const &subgroups = rep->lattice().subgroups();
  rep->_fixed_dims.reserve(subgroups.size());
  for (auto const &H : subgroups)
    rep->_fixed_dims.push_back(n - burneq::rank(rep->projector(H) - QMatrix::identity(n)));

  return rep;
}

QVector Representation::act(ElementIndex g, QVector const &x) const
{
  if (x.size() != _dim)
    throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
  return _matrices[g] * x;
}

QMatrix Representation::projector(Subgroup const &H) const
{
  QMatrix sum(_dim, _dim);
  for (auto h : H.elements)
    sum = sum + _matrices[h];
  return Rational(1, static_cast<unsigned long>(H.order())) * sum;
}

FixedSubspace Representation::fixed_subspace(Subgroup const &H) const
{
  FixedSubspace V;
  V.subgroup = H;
  V.subgroup_class = lattice().class_of(H);
  V.basis = kernel_basis(projector(H) - QMatrix::identity(_dim));
  return V;
}

std::size_t Representation::fixed_dim(Subgroup const &H) const
{ return _fixed_dims[lattice().subgroup_index(H)]; }

Subgroup Representation::isotropy(QVector const &x) const
{
  if (x.size() != _dim)
    throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
  Subgroup stabilizer;
  for (ElementIndex g = 0; g < group().order(); ++g)
    if (_matrices[g] * x == x)
      stabilizer.elements.push_back(g);
  return stabilizer;
}

std::vector<QVector> Representation::orbit(QVector const &x) const
{
  std::vector<QVector> points;
  std::vector<QVector> sorted;
  for (ElementIndex g = 0; g < group().order(); ++g) {
    QVector y = act(g, x);
    auto it = std::lower_bound(sorted.begin(), sorted.end(), y, lex_less);
    if (it != sorted.end() && *it == y)
      continue;
    sorted.insert(it, y);
    points.push_back(std::move(y));
  }
  return points;
}

OrbitTypeTable Representation::orbit_types() const
{
  OrbitTypeTable table;
  for (auto const &cls : lattice().classes()) {
    OrbitTypeEntry entry;
    entry.subgroup_class = cls.class_index;
    entry.dim_fixed = fixed_dim(cls.representative);
    try {
      entry.witness = point_with_exact_isotropy(*this, cls.representative);
      entry.occupied = true;
    } catch (Error const &e) {
      if (e.kind() != ErrorKind::EmptyOrbitTypeStratum)
        throw;
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

std::shared_ptr<Representation const> direct_sum(Representation const &V, Representation const &W)
{
  if (V.ring_ptr() != W.ring_ptr())
    throw Error(ErrorKind::GroupMismatch, "representations of different groups");
  std::vector<QMatrix> gens;
  for (std::size_t s = 0; s < V.generator_matrices().size(); ++s)
    gens.push_back(burneq::direct_sum(V.generator_matrices()[s], W.generator_matrices()[s]));
  return Representation::build(V.ring_ptr(), gens);
}

FiniteGSet orbit_gset(Representation const &rep, QVector const &x)
{
  auto points = rep.orbit(x);
  std::map<QVector, std::uint32_t, decltype(&lex_less)> index(&lex_less);
  for (std::size_t i = 0; i < points.size(); ++i)
    index.emplace(points[i], static_cast<std::uint32_t>(i));

  FiniteGSet X;
  X.size = points.size();
  X.action.assign(rep.group().order(), std::vector<std::uint32_t>(X.size));
  for (ElementIndex g = 0; g < rep.group().order(); ++g)
    for (std::size_t i = 0; i < points.size(); ++i)
      X.action[g][i] = index.at(rep.act(g, points[i]));
  return X;
}

} // namespace burneq
