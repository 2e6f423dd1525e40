#include "burneq/degree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "burneq/error.hpp"

namespace burneq
{

namespace
{

Rational squared_distance(QVector const &a, QVector const &b)
{
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

std::size_t local_dim(LocalMapDef const &local)
{
  if (auto const *lin = std::get_if<LinearLocal>(&local))
    return lin->matrix.rows();
  if (auto const *ex = std::get_if<ExprLocal>(&local))
    return ex->exprs.size();
  return 0;
}

/// Determinant by LU with partial pivoting.
double determinant(std::vector<std::vector<double>> m)
{
  std::size_t const n = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col]))
        pivot = r;
    if (m[pivot][col] == 0.0)
      return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c)
        m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

/// Jacobian of the local map in V^H coordinates: J_x B, B the fixed basis.
std::vector<std::vector<double>> local_jacobian(ResolvedPiece const &resolved,
                                                ExprLocal const &local)
{
  auto x0 = approximate(resolved.piece.base_point);
  auto Jx = jacobian_fd(local.exprs, x0);
  std::size_t const d = resolved.fixed.dim();
  std::vector<std::vector<double>> J(d, std::vector<double>(d, 0.0));
  for (std::size_t k = 0; k < d; ++k) {
    auto b = approximate(resolved.fixed.basis[k]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        J[i][k] += Jx[i][j] * b[j];
  }
  return J;
}

/// Orthonormal basis of V^H in floating point, by Gram-Schmidt.
std::vector<std::vector<double>> orthonormal_basis(FixedSubspace const &fixed)
{
  std::vector<std::vector<double>> q;
  for (auto const &b : fixed.basis) {
    auto v = approximate(b);
    for (auto const &u : q) {
      double proj = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i)
        proj += v[i] * u[i];
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] -= proj * u[i];
    }
    double norm = 0.0;
    for (double x : v)
      norm += x * x;
    norm = std::sqrt(norm);
    for (double &x : v)
      x /= norm;
    q.push_back(std::move(v));
  }
  return q;
}

/// The local map in orthonormal V^H coordinates u: F(x0 + sum u_i q_i).
struct LocalEvaluator
{
  ExprLocal const &local;
  std::vector<double> x0;
  std::vector<std::vector<double>> q;

  std::vector<double> ambient(std::vector<double> const &u) const
  {
    std::vector<double> x = x0;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        x[j] += u[i] * q[i][j];
    return x;
  }

  std::vector<double> value(std::vector<double> const &u) const
  {
    auto x = ambient(u);
    std::vector<double> out;
    for (auto const &f : local.exprs)
      out.push_back(eval(f, x));
    return out;
  }

  std::vector<std::vector<double>> jacobian(std::vector<double> const &u) const
  {
    auto Jx = jacobian_fd(local.exprs, ambient(u));
    std::size_t const d = u.size();
    std::vector<std::vector<double>> J(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < x0.size(); ++j)
          J[i][k] += Jx[i][j] * q[k][j];
    return J;
  }
};

/// Solves J s = b by Gaussian elimination with partial pivoting; false when
/// J is singular to working precision.
bool solve(std::vector<std::vector<double>> J, std::vector<double> b, std::vector<double> &s)
{
  std::size_t const n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(J[r][col]) > std::abs(J[pivot][col]))
        pivot = r;
    if (std::abs(J[pivot][col]) < 1e-300)
      return false;
    std::swap(J[pivot], J[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double factor = J[r][col] / J[col][col];
      for (std::size_t c = col; c < n; ++c)
        J[r][c] -= factor * J[col][c];
      b[r] -= factor * b[col];
    }
  }
  s.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c)
      acc -= J[i][c] * s[c];
    s[i] = acc / J[i][i];
  }
  return true;
}

double max_abs(std::vector<double> const &v)
{
  double m = 0.0;
  for (double x : v)
    m = std::max(m, std::abs(x));
  return m;
}

/// Newton from u; the zero found, if it converges inside the closed ball.
std::optional<std::vector<double>> newton_zero(LocalEvaluator const &F, std::vector<double> u, double r)
{
  try {
    for (int it = 0; it < 60; ++it) {
      auto v = F.value(u);
      if (max_abs(v) <= 1e-10)
        break;
      std::vector<double> step;
      if (!solve(F.jacobian(u), v, step))
        return std::nullopt;
      for (std::size_t i = 0; i < u.size(); ++i)
        u[i] -= step[i];
    }
    if (max_abs(F.value(u)) > 1e-9)
      return std::nullopt;
  } catch (Error const &e) {
    if (e.kind() != ErrorKind::DivisionByZero)
      throw;
    return std::nullopt;
  }
  double n2 = 0.0;
  for (double x : u)
    n2 += x * x;
  if (n2 > r * r * (1 + 1e-9))
    return std::nullopt;
  return u;
}

/// Samples the local map on a grid over the U-ball. Connected clusters of
/// cells where every component changes sign are zero candidates; Newton from
/// each cluster confirms or discards it. Returns the number of distinct
/// zeros found.
std::size_t count_zeros(ResolvedPiece const &resolved, ExprLocal const &local)
{
  std::size_t const d = resolved.fixed.dim();
  std::size_t const m = kGuardGridPoints;
  std::size_t const cells_per_axis = m - 1;
  double const r = resolved.piece.radius.get_d();
  double const h = 2.0 * r / cells_per_axis;
  LocalEvaluator F{local, approximate(resolved.piece.base_point), orthonormal_basis(resolved.fixed)};

  auto node_coord = [&](std::size_t k) { return -r + h * static_cast<double>(k); };

  std::size_t nodes = 1, cells = 1;
  for (std::size_t i = 0; i < d; ++i) {
    nodes *= m;
    cells *= cells_per_axis;
  }

  std::vector<std::vector<double>> values(nodes);
  std::vector<bool> valid(nodes, true);
  std::vector<std::size_t> idx(d);
  std::vector<double> u(d);
  for (std::size_t node = 0; node < nodes; ++node) {
    std::size_t rest = node;
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = node_coord(rest % m);
      rest /= m;
    }
    try {
      values[node] = F.value(u);
    } catch (Error const &e) {
      if (e.kind() != ErrorKind::DivisionByZero)
        throw;
      valid[node] = false;
    }
  }

  auto cell_center = [&](std::size_t cell) {
    std::vector<double> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = node_coord(cell % cells_per_axis) + h / 2;
      cell /= cells_per_axis;
    }
    return c;
  };

  std::vector<bool> candidate(cells, false);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t rest = cell;
    double center2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      idx[i] = rest % cells_per_axis;
      rest /= cells_per_axis;
      double c = node_coord(idx[i]) + h / 2;
      center2 += c * c;
    }
    if (center2 > r * r)
      continue;

    std::vector<double> lo(d, INFINITY), hi(d, -INFINITY);
    bool ok = true;
    for (std::size_t corner = 0; corner < (std::size_t{1} << d) && ok; ++corner) {
      std::size_t node = 0, stride = 1;
      for (std::size_t i = 0; i < d; ++i) {
        node += (idx[i] + ((corner >> i) & 1)) * stride;
        stride *= m;
      }
      if (!valid[node]) {
        ok = false;
        break;
      }
      for (std::size_t c = 0; c < d; ++c) {
        lo[c] = std::min(lo[c], values[node][c]);
        hi[c] = std::max(hi[c], values[node][c]);
      }
    }
    if (!ok)
      continue;
    bool straddles = true;
    for (std::size_t c = 0; c < d; ++c)
      straddles = straddles && lo[c] <= 0.0 && hi[c] >= 0.0;
    candidate[cell] = straddles;
  }

  std::vector<std::vector<double>> zeros;
  std::vector<bool> seen(cells, false);
  for (std::size_t start = 0; start < cells; ++start) {
    if (!candidate[start] || seen[start])
      continue;
    std::vector<std::size_t> cluster, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t cell = stack.back();
      stack.pop_back();
      cluster.push_back(cell);
      std::vector<std::size_t> at(d);
      std::size_t rest = cell;
      for (std::size_t i = 0; i < d; ++i) {
        at[i] = rest % cells_per_axis;
        rest /= cells_per_axis;
      }
      std::size_t neighbours = 1;
      for (std::size_t i = 0; i < d; ++i)
        neighbours *= 3;
      for (std::size_t nb = 0; nb < neighbours; ++nb) {
        std::size_t code = nb, other = 0, stride = 1;
        bool inside = true;
        for (std::size_t i = 0; i < d; ++i) {
          long coord = static_cast<long>(at[i]) + static_cast<long>(code % 3) - 1;
          code /= 3;
          if (coord < 0 || coord >= static_cast<long>(cells_per_axis)) {
            inside = false;
            break;
          }
          other += static_cast<std::size_t>(coord) * stride;
          stride *= cells_per_axis;
        }
        if (inside && candidate[other] && !seen[other]) {
          seen[other] = true;
          stack.push_back(other);
        }
      }
    }

    // start from the cluster cell whose center has the smallest residual
    std::vector<double> best;
    double best_residual = INFINITY;
    for (auto cell : cluster) {
      auto c = cell_center(cell);
      try {
        double res = max_abs(F.value(c));
        if (res < best_residual) {
          best_residual = res;
          best = c;
        }
      } catch (Error const &e) {
        if (e.kind() != ErrorKind::DivisionByZero)
          throw;
      }
    }
    if (best.empty())
      continue;
    auto z = newton_zero(F, best, r);
    if (!z)
      continue;
    bool fresh = std::none_of(zeros.begin(), zeros.end(), [&](auto const &w) {
      double dist2 = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        dist2 += ((*z)[i] - w[i]) * ((*z)[i] - w[i]);
      return dist2 <= h * h;
    });
    if (fresh)
      zeros.push_back(*z);
  }
  return zeros.size();
}
} // namespace

ResolvedPiece resolve_piece(Representation const &rep, StandardPiece const &piece)
{
  if (piece.base_point.size() != rep.dim())
    throw Error(ErrorKind::InvalidPiece, "base point " + to_string(piece.base_point) +
                                           " does not lie in a space of dimension " +
                                           std::to_string(rep.dim()));
  if (sgn(piece.radius) <= 0 || sgn(piece.epsilon) <= 0)
    throw Error(ErrorKind::InvalidPiece, "radius and epsilon must be positive");

  ResolvedPiece resolved;
  resolved.piece = piece;
  resolved.isotropy = rep.isotropy(piece.base_point);
  resolved.fixed = rep.fixed_subspace(resolved.isotropy);
  resolved.isotropy_class = resolved.fixed.subgroup_class;
  resolved.orbit = rep.orbit(piece.base_point);

  std::size_t const d = resolved.fixed.dim();
  if (auto const *lin = std::get_if<LinearLocal>(&piece.local)) {
    if (lin->matrix.rows() != d || lin->matrix.cols() != d)
      throw Error(ErrorKind::InvalidPiece, "linear local map must be " + std::to_string(d) + "x" +
                                             std::to_string(d) + " on V^H at " +
                                             to_string(piece.base_point));
  } else if (auto const *ex = std::get_if<ExprLocal>(&piece.local)) {
    if (local_dim(piece.local) != d)
      throw Error(ErrorKind::InvalidPiece, "expression local map needs " + std::to_string(d) +
                                             " components at " + to_string(piece.base_point));
    (void)ex;
  } else if (auto const *dec = std::get_if<DeclaredLocal>(&piece.local)) {
    if (d == 0 && dec->d != 0 && dec->d != 1)
      throw Error(ErrorKind::InvalidPiece,
                  "a piece with dim V^H = 0 has index 0 or 1, got " + std::to_string(dec->d));
  }
  return resolved;
}

ResolvedPiece validate_piece(Representation const &rep, StandardPiece const &piece)
{
  ResolvedPiece resolved = resolve_piece(rep, piece);

  if (resolved.orbit.size() > 1) {
    Rational spacing2 = -1;
    for (auto const &y : resolved.orbit) {
      if (y == piece.base_point)
        continue;
      Rational d2 = squared_distance(piece.base_point, y);
      if (spacing2 < 0 || d2 < spacing2)
        spacing2 = d2;
    }
    Rational tube = piece.radius + piece.epsilon;
    if (4 * piece.epsilon * piece.epsilon >= spacing2)
      throw Error(ErrorKind::InvalidPiece, "epsilon " + to_string(piece.epsilon) +
                                             " is not below half the orbit spacing at " +
                                             to_string(piece.base_point));
    if (4 * tube * tube >= spacing2)
      throw Error(ErrorKind::InvalidPiece, "radius + epsilon " + to_string(tube) +
                                             " is not below half the orbit spacing at " +
                                             to_string(piece.base_point));
  }

  if (auto const *ex = std::get_if<ExprLocal>(&piece.local); ex && resolved.fixed.dim() > 0) {
    std::size_t const d = resolved.fixed.dim();
    if (d > kGuardMaxDim)
      throw Error(ErrorKind::InvalidPiece, "expression pieces need dim V^H <= 3, got " +
                                             std::to_string(d));
    auto x0 = approximate(piece.base_point);
    for (auto const &f : ex->exprs)
      if (std::abs(eval(f, x0)) > 1e-9)
        throw Error(ErrorKind::InvalidPiece,
                    "expression '" + print(f) + "' does not vanish at " + to_string(piece.base_point));
    if (count_zeros(resolved, *ex) > 1)
      throw Error(ErrorKind::InvalidPiece, "local map has another zero inside U around " +
                                             to_string(piece.base_point));
  }
  return resolved;
}

long local_index(ResolvedPiece const &resolved, Representation const &)
{
  std::size_t const d = resolved.fixed.dim();
  if (auto const *dec = std::get_if<DeclaredLocal>(&resolved.piece.local))
    return dec->d;

  if (d == 0)
    return 1;

  if (auto const *lin = std::get_if<LinearLocal>(&resolved.piece.local)) {
    int s = sgn(determinant(lin->matrix));
    if (s == 0)
      throw Error(ErrorKind::SingularJacobian,
                  "linear local map at " + to_string(resolved.piece.base_point) + " is singular");
    return s;
  }

  auto const &ex = std::get<ExprLocal>(resolved.piece.local);
  auto J = local_jacobian(resolved, ex);
  double norm = 0.0;
  for (auto const &row : J) {
    double sum = 0.0;
    for (double v : row)
      sum += std::abs(v);
    norm = std::max(norm, sum);
  }
  double scale = std::max(1.0, norm);
  double det = determinant(J);
  if (std::abs(det) < kSingularTolerance * std::pow(scale, static_cast<double>(d)))
    throw Error(ErrorKind::SingularJacobian,
                "Jacobian at " + to_string(resolved.piece.base_point) +
                  " is numerically singular; supply a declared index or perturb the map");
  return det > 0 ? 1 : -1;
}

long local_index(StandardPiece const &piece, Representation const &rep)
{ return local_index(resolve_piece(rep, piece), rep); }

namespace
{

void accumulate(DegreeResult &result, ResolvedPiece const &resolved, long index)
{
  // a dim-0 piece of index 0 is otopic to the empty map
  if (index == 0 && resolved.fixed.dim() == 0)
    return;
  std::vector<Integer> coeffs = result.value.coeffs();
  coeffs[resolved.isotropy_class] += index;
  result.value = BurnsideElement(result.value.ring_ptr(), std::move(coeffs));
  result.per_orbit.push_back(
    {resolved.piece.base_point, resolved.orbit.size(), resolved.isotropy_class, index});
}

} // namespace

DegreeResult deg_standard(StandardPiece const &piece, Representation const &rep)
{
  auto resolved = validate_piece(rep, piece);
  DegreeResult result{rep.ring().zero(), {}};
  accumulate(result, resolved, local_index(resolved, rep));
  return result;
}

void check_disjoint(PolystandardMap const &, std::vector<ResolvedPiece> const &resolved)
{
  for (std::size_t i = 0; i < resolved.size(); ++i)
    for (std::size_t j = i + 1; j < resolved.size(); ++j) {
      auto const &a = resolved[i];
      auto const &b = resolved[j];
      Rational reach = a.piece.radius + a.piece.epsilon + b.piece.radius + b.piece.epsilon;
      Rational reach2 = reach * reach;
      double reach2_d = reach2.get_d();
      // orbits are G-invariant and G acts by isometries, so x0 of one piece
      // against the whole orbit of the other covers all pairs
      for (auto const &y : b.orbit) {
        Rational d2 = squared_distance(a.piece.base_point, y);
        if (d2.get_d() > reach2_d * (1 + 1e-9))
          continue;
        if (d2 <= reach2)
          throw Error(ErrorKind::OverlappingPieces,
                      "pieces " + std::to_string(i) + " and " + std::to_string(j) +
                        " overlap: orbit points " + to_string(a.piece.base_point) + " and " +
                        to_string(y) + " are within " + to_string(reach));
      }
    }
}

DegreeResult deg_polystandard(PolystandardMap const &f)
{
  Representation const &rep = *f.rep;
  std::vector<ResolvedPiece> resolved;
  resolved.reserve(f.pieces.size());
  for (auto const &piece : f.pieces)
    resolved.push_back(validate_piece(rep, piece));
  check_disjoint(f, resolved);

  DegreeResult result{rep.ring().zero(), {}};
  for (auto const &r : resolved)
    accumulate(result, r, local_index(r, rep));
  return result;
}

PolystandardMap disjoint_union(PolystandardMap const &f, PolystandardMap const &g)
{
  if (f.rep != g.rep)
    throw Error(ErrorKind::GroupMismatch, "maps live on different representations");
  PolystandardMap u{f.rep, f.pieces};
  u.pieces.insert(u.pieces.end(), g.pieces.begin(), g.pieces.end());
  return u;
}

TracedProduct product_map_traced(PolystandardMap const &f, PolystandardMap const &g)
{
  if (f.rep->ring_ptr() != g.rep->ring_ptr())
    throw Error(ErrorKind::GroupMismatch, "maps are equivariant for different groups");

  Representation const &V = *f.rep;
  Representation const &W = *g.rep;
  FiniteGroup const &G = V.group();

  TracedProduct out;
  out.map.rep = direct_sum(V, W);

  std::vector<ResolvedPiece> left, right;
  std::vector<long> left_index, right_index;
  for (auto const &p : f.pieces) {
    left.push_back(validate_piece(V, p));
    left_index.push_back(local_index(left.back(), V));
  }
  for (auto const &p : g.pieces) {
    right.push_back(validate_piece(W, p));
    right_index.push_back(local_index(right.back(), W));
  }

  // action of every g on the points of an orbit, by position
  auto action_table = [&](Representation const &rep, std::vector<QVector> const &orbit) {
    std::map<QVector, std::size_t, decltype(&lex_less)> pos(&lex_less);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      pos.emplace(orbit[i], i);
    std::vector<std::vector<std::size_t>> table(G.order(), std::vector<std::size_t>(orbit.size()));
    for (ElementIndex h = 0; h < G.order(); ++h)
      for (std::size_t i = 0; i < orbit.size(); ++i)
        table[h][i] = pos.at(rep.act(h, orbit[i]));
    return table;
  };

  for (std::size_t i = 0; i < left.size(); ++i) {
    auto const act_left = action_table(V, left[i].orbit);
    for (std::size_t j = 0; j < right.size(); ++j) {
      auto const act_right = action_table(W, right[j].orbit);
      std::size_t const nl = left[i].orbit.size();
      std::size_t const nr = right[j].orbit.size();

      Rational shrink = std::min({left[i].piece.radius, left[i].piece.epsilon,
                                  right[j].piece.radius, right[j].piece.epsilon});
      shrink /= 2;

      std::vector<bool> visited(nl * nr, false);
      for (std::size_t a = 0; a < nl; ++a)
        for (std::size_t b = 0; b < nr; ++b) {
          if (visited[a * nr + b])
            continue;
          for (ElementIndex h = 0; h < G.order(); ++h)
            visited[act_left[h][a] * nr + act_right[h][b]] = true;

          StandardPiece piece;
          piece.base_point = left[i].orbit[a];
          piece.base_point.insert(piece.base_point.end(), right[j].orbit[b].begin(),
                                  right[j].orbit[b].end());
          piece.radius = shrink;
          piece.epsilon = shrink;
          piece.local = DeclaredLocal{left_index[i] * right_index[j]};
          out.map.pieces.push_back(std::move(piece));
          out.origins.emplace_back(i, j);
        }
    }
  }
  return out;
}

PolystandardMap product_map(PolystandardMap const &f, PolystandardMap const &g)
{ return product_map_traced(f, g).map; }

ProductReport verify_product(PolystandardMap const &f, PolystandardMap const &g)
{
  auto traced = product_map_traced(f, g);
  auto deg_f = deg_polystandard(f);
  auto deg_g = deg_polystandard(g);
  auto deg_fg = deg_polystandard(traced.map);

  ProductReport report{deg_fg.value, mul(deg_f.value, deg_g.value), false, {}, true};
  report.equal = report.lhs == report.rhs;

  std::vector<long> left_index, right_index;
  for (auto const &p : f.pieces)
    left_index.push_back(local_index(p, *f.rep));
  for (auto const &p : g.pieces)
    right_index.push_back(local_index(p, *g.rep));

  Representation const &sum = *traced.map.rep;
  for (std::size_t k = 0; k < traced.map.pieces.size(); ++k) {
    auto [i, j] = traced.origins[k];
    ProductOrbitCheck check;
    check.left_piece = i;
    check.right_piece = j;
    check.base_point = traced.map.pieces[k].base_point;
    check.d_left = left_index[i];
    check.d_right = right_index[j];
    check.d_product = local_index(traced.map.pieces[k], sum);
    check.ok = check.d_product == check.d_left * check.d_right;
    report.per_orbit_ok = report.per_orbit_ok && check.ok;
    report.per_orbit.push_back(std::move(check));
  }
  return report;
}

bool existence_check(DegreeResult const &result)
{ return !result.value.is_zero(); }

} // namespace burneq
