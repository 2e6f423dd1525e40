#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "burneq/burnside.hpp"
#include "burneq/degree.hpp"
#include "burneq/representation.hpp"

namespace burneq
{

/// Omega_H is empty exactly when V^H coincides with V^K for some K > H, since
/// a vector space is never a finite union of proper subspaces.
bool stratum_is_empty(Representation const &rep, Subgroup const &H);

/// Ladder length used by point_with_exact_isotropy when none is given:
/// max(8 |G| n, (dim V^H - 1) * #overgroups + 1). The second term bounds the
/// number of ladder points that can fall into the proper subspaces V^K.
std::size_t default_ladder_length(Representation const &rep, Subgroup const &H);

/// The t-th ladder point sum_{k=1..m} t^k b_k over the basis of V^H.
QVector ladder_point(FixedSubspace const &fixed, std::size_t t, std::size_t dim);

/// First ladder point x_t (t = 1, 2, ...) whose isotropy is exactly H.
/// Throws EmptyOrbitTypeStratum.
QVector point_with_exact_isotropy(Representation const &rep, Subgroup const &H,
                                  std::size_t ladder_length = 0);

/// diag(sign, 1, ..., 1). Throws ZeroDimNegative for dim 0 with sign -1.
QMatrix signed_linear_block(std::size_t dim, int sign);

struct RealizationTarget
{
  BurnsideElement element;
  std::shared_ptr<Representation const> rep;
};

/// |c_i| unit-index linear pieces on distinct ladder orbits of each class
/// with nonzero coefficient c_i. Throws InfeasibleCoefficient.
PolystandardMap realize_element(RealizationTarget const &target);

/// Sets every piece's radius and epsilon to a common rational below a fifth
/// of the minimum distance between distinct points of all piece orbits, so
/// tubes are pairwise disjoint and epsilon stays below half of each orbit's
/// spacing.
void fit_tubes(Representation const &rep, std::vector<StandardPiece> &pieces);

} // namespace burneq
