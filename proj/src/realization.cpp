#include "burneq/realization.hpp"

#include <algorithm>
#include <cmath>

#include "burneq/error.hpp"

namespace burneq
{

bool stratum_is_empty(Representation const &rep, Subgroup const &H)
{
  std::size_t const dim_h = rep.fixed_dim(H);
  for (auto const &K : rep.lattice().subgroups())
    if (K.order() > H.order() && H.is_subset_of(K) && rep.fixed_dim(K) == dim_h)
      return true;
  return false;
}

std::size_t default_ladder_length(Representation const &rep, Subgroup const &H)
{
  std::size_t overgroups = 0;
  for (auto const &K : rep.lattice().subgroups())
    if (K.order() > H.order() && H.is_subset_of(K))
      ++overgroups;
  std::size_t const dim_h = rep.fixed_dim(H);
  std::size_t const guaranteed = (dim_h > 0 ? dim_h - 1 : 0) * overgroups + 1;
  return std::max(8 * rep.group().order() * std::max<std::size_t>(rep.dim(), 1), guaranteed);
}

QVector ladder_point(FixedSubspace const &fixed, std::size_t t, std::size_t dim)
{
  QVector x(dim);
  Integer power = 1;
  for (auto const &b : fixed.basis) {
    power *= static_cast<unsigned long>(t);
    x = x + Rational(power) * b;
  }
  return x;
}

QVector point_with_exact_isotropy(Representation const &rep, Subgroup const &H,
                                  std::size_t ladder_length)
{
  if (stratum_is_empty(rep, H))
    throw Error(ErrorKind::EmptyOrbitTypeStratum,
                "no point has isotropy exactly [G/" + rep.lattice().label(rep.lattice().class_of(H)) +
                  "]: V^H equals the fixed space of a larger subgroup");

  FixedSubspace fixed = rep.fixed_subspace(H);
  if (fixed.dim() == 0)
    // V^H = {0}; the origin has isotropy G, and H = G here since the
    // stratum is not empty
    return QVector(rep.dim());

  if (ladder_length == 0)
    ladder_length = default_ladder_length(rep, H);
  for (std::size_t t = 1; t <= ladder_length; ++t) {
    QVector x = ladder_point(fixed, t, rep.dim());
    if (rep.isotropy(x) == H)
      return x;
  }
  throw Error(ErrorKind::EmptyOrbitTypeStratum,
              "ladder of length " + std::to_string(ladder_length) + " found no point for [G/" +
                rep.lattice().label(rep.lattice().class_of(H)) + "]");
}

QMatrix signed_linear_block(std::size_t dim, int sign)
{
  if (sign != 1 && sign != -1)
    throw Error(ErrorKind::InvalidInput, "sign must be +1 or -1");
  if (dim == 0 && sign == -1)
    throw Error(ErrorKind::ZeroDimNegative, "a 0-dimensional block has determinant +1 only");
  QMatrix block = QMatrix::identity(dim);
  if (dim > 0)
    block(0, 0) = sign;
  return block;
}

namespace
{

/// Largest power-of-two fraction p / 2^20 with (p / 2^20)^2 <= value, and at
/// least a tiny positive lower bound when value > 0.
Rational sqrt_lower_bound(Rational const &value)
{
  double approx = std::sqrt(value.get_d());
  Rational denom = Rational(1 << 20);
  Rational candidate(Integer(static_cast<long>(std::floor(approx * (1 << 20)))), Integer(1 << 20));
  candidate.canonicalize();
  while (sgn(candidate) > 0 && candidate * candidate > value)
    candidate -= 1 / denom;
  if (sgn(candidate) <= 0) {
    candidate = value < 1 ? value : Rational(1);
    while (candidate * candidate > value)
      candidate /= 2;
  }
  return candidate;
}

} // namespace

void fit_tubes(Representation const &rep, std::vector<StandardPiece> &pieces)
{
  std::vector<QVector> points;
  for (auto const &p : pieces) {
    auto orbit = rep.orbit(p.base_point);
    points.insert(points.end(), orbit.begin(), orbit.end());
  }

  Rational min2 = -1;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Rational d2 = 0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        Rational diff = points[i][k] - points[j][k];
        d2 += diff * diff;
      }
      if (sgn(d2) == 0)
        throw Error(ErrorKind::OverlappingPieces,
                    "two pieces share the orbit point " + to_string(points[i]));
      if (min2 < 0 || d2 < min2)
        min2 = d2;
    }

  Rational size = min2 < 0 ? Rational(1, 4) : Rational(sqrt_lower_bound(min2) / 5);
  for (auto &p : pieces) {
    p.radius = size;
    p.epsilon = size;
  }
}

PolystandardMap realize_element(RealizationTarget const &target)
{
  Representation const &rep = *target.rep;
  if (target.element.ring_ptr() != rep.ring_ptr())
    throw Error(ErrorKind::GroupMismatch, "target and representation belong to different groups");

  SubgroupLattice const &lattice = rep.lattice();
  std::size_t const whole = lattice.whole_class();
  bool const origin_only = rep.fixed_dim(lattice.classes()[whole].representative) == 0;

  PolystandardMap map{target.rep, {}};
  for (std::size_t cls = 0; cls < lattice.class_count(); ++cls) {
    Integer const &c = target.element[cls];
    if (sgn(c) == 0)
      continue;

    Subgroup const &H = lattice.classes()[cls].representative;
    std::string const label = "[G/" + lattice.label(cls) + "]";

    if (cls == whole && origin_only) {
      if (c != 1)
        throw Error(ErrorKind::InfeasibleCoefficient,
                    "coefficient of " + label + " must be 0 or 1 when dim V^G = 0, got " +
                      c.get_str());
      map.pieces.push_back({QVector(rep.dim()), 1, 1, LinearLocal{QMatrix(0, 0)}});
      continue;
    }

    if (stratum_is_empty(rep, H))
      throw Error(ErrorKind::InfeasibleCoefficient,
                  "orbit type " + label + " does not occur in this representation");

    FixedSubspace fixed = rep.fixed_subspace(H);
    QMatrix block = signed_linear_block(fixed.dim(), sgn(c));
    Integer const magnitude = abs(c);
    if (!magnitude.fits_ulong_p() || magnitude > 100000)
      throw Error(ErrorKind::InfeasibleCoefficient, "coefficient of " + label + " is too large");
    std::size_t const needed = magnitude.get_ui();

    std::vector<std::vector<QVector>> placed;
    std::size_t const ladder = default_ladder_length(rep, H) + needed * rep.group().order();
    for (std::size_t t = 1; placed.size() < needed; ++t) {
      if (t > ladder)
        throw Error(ErrorKind::InfeasibleCoefficient,
                    "could not place " + std::to_string(needed) + " orbits of type " + label);
      QVector x = ladder_point(fixed, t, rep.dim());
      if (rep.isotropy(x) != H)
        continue;
      bool fresh = std::none_of(placed.begin(), placed.end(), [&](auto const &orbit) {
        return std::find(orbit.begin(), orbit.end(), x) != orbit.end();
      });
      if (!fresh)
        continue;
      placed.push_back(rep.orbit(x));
      map.pieces.push_back({x, 1, 1, LinearLocal{block}});
    }
  }

  fit_tubes(rep, map.pieces);
  return map;
}

} // namespace burneq
