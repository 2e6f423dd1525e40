#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "burneq/burnside.hpp"
#include "burneq/expr.hpp"
#include "burneq/rational.hpp"
#include "burneq/representation.hpp"

namespace burneq
{

/// Square matrix acting on V^H coordinates (coordinates with respect to the
/// fixed-subspace basis of the piece's isotropy group).
struct LinearLocal
{
  QMatrix matrix;
};

/// One expression per V^H coordinate, written in the ambient variables
/// x1..xn of V. The local map sends V^H coordinates u to the value of the
/// expressions at x0 + sum_k u_k b_k.
struct ExprLocal
{
  std::vector<std::string> sources;
  std::vector<Expr> exprs;
};

/// The local index supplied directly.
struct DeclaredLocal
{
  long d = 0;
};

using LocalMapDef = std::variant<LinearLocal, ExprLocal, DeclaredLocal>;

/// Data of a standard map: its zero orbit is G x0, its local map lives on a
/// ball of `radius` around x0 in V^H, extended by the identity in normal
/// directions of length below `epsilon`.
struct StandardPiece
{
  QVector base_point;
  Rational radius;
  Rational epsilon;
  LocalMapDef local;
};

/// A strictly polystandard map: a finite disjoint union of standard pieces.
struct PolystandardMap
{
  std::shared_ptr<Representation const> rep;
  std::vector<StandardPiece> pieces;
};

/// A piece together with the data derived from its base point.
struct ResolvedPiece
{
  StandardPiece piece;
  Subgroup isotropy;
  std::size_t isotropy_class = 0;
  FixedSubspace fixed;
  std::vector<QVector> orbit;
};

/// Computes isotropy, fixed subspace and orbit, and checks that the local
/// definition has the right shape. Throws InvalidPiece.
ResolvedPiece resolve_piece(Representation const &rep, StandardPiece const &piece);

/// Full piece invariants on top of resolve_piece: the epsilon bound against
/// the orbit, and for expression pieces the zero at x0 plus the sampled
/// uniqueness guard (dim V^H <= 3). Throws InvalidPiece or SingularJacobian.
ResolvedPiece validate_piece(Representation const &rep, StandardPiece const &piece);

/// Grid resolution of the uniqueness guard for expression pieces.
inline constexpr std::size_t kGuardGridPoints = 33;
inline constexpr std::size_t kGuardMaxDim = 3;

/// Relative singularity threshold for finite-difference Jacobians:
/// |det J| < kSingularTolerance * max(1, |J|_inf)^d.
inline constexpr double kSingularTolerance = 1e-8;

/// Brouwer index of the local map at x0. Throws SingularJacobian.
long local_index(StandardPiece const &piece, Representation const &rep);
long local_index(ResolvedPiece const &resolved, Representation const &rep);

struct OrbitContribution
{
  QVector base_point;
  std::size_t orbit_size = 0;
  std::size_t isotropy_class = 0;
  long index = 0;
};

struct DegreeResult
{
  BurnsideElement value;
  std::vector<OrbitContribution> per_orbit;
};

DegreeResult deg_standard(StandardPiece const &piece, Representation const &rep);

/// Sum of d_alpha [G/G_x] over pieces, after checking pairwise tube
/// disjointness. Throws OverlappingPieces.
DegreeResult deg_polystandard(PolystandardMap const &f);

/// Throws OverlappingPieces when two pieces' orbits come within the sum of
/// their tube radii (radius + epsilon).
void check_disjoint(PolystandardMap const &f, std::vector<ResolvedPiece> const &resolved);

/// Concatenation f + f' over the same representation.
PolystandardMap disjoint_union(PolystandardMap const &f, PolystandardMap const &g);

/// f x f' over V + W. One declared piece per diagonal orbit of each pair of
/// zero orbits, with index d_alpha * d_beta. Throws GroupMismatch.
PolystandardMap product_map(PolystandardMap const &f, PolystandardMap const &g);

/// product_map plus, for every product piece, the (left, right) factor
/// pieces it came from.
struct TracedProduct
{
  PolystandardMap map;
  std::vector<std::pair<std::size_t, std::size_t>> origins;
};

TracedProduct product_map_traced(PolystandardMap const &f, PolystandardMap const &g);

struct ProductOrbitCheck
{
  std::size_t left_piece = 0;
  std::size_t right_piece = 0;
  QVector base_point;
  long d_left = 0;
  long d_right = 0;
  long d_product = 0;
  bool ok = false;
};

struct ProductReport
{
  BurnsideElement lhs; // deg(f x f')
  BurnsideElement rhs; // deg f * deg f'
  bool equal = false;
  std::vector<ProductOrbitCheck> per_orbit;
  bool per_orbit_ok = false;
};

ProductReport verify_product(PolystandardMap const &f, PolystandardMap const &g);

/// True iff the degree is nonzero, which certifies a zero of the map.
bool existence_check(DegreeResult const &result);

} // namespace burneq
