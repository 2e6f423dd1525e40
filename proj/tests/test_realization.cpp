#include <doctest.h>

#include "burneq/error.hpp"
#include "burneq/realization.hpp"
#include "support/corpus.hpp"

using namespace burneq;
using corpus::matrix;

namespace
{

ErrorKind kind_of(auto &&fn)
{
  try {
    fn();
  } catch (Error const &e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

QVector vec(std::vector<long> const &v)
{
  QVector out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

} // namespace

TEST_CASE("empty strata")
{
  auto V = corpus::s3_permutation().rep;
  auto const &L = V->lattice();
  CHECK(stratum_is_empty(*V, L.classes()[2].representative));
  CHECK_FALSE(stratum_is_empty(*V, L.classes()[1].representative));
  CHECK(kind_of([&] { point_with_exact_isotropy(*V, L.classes()[2].representative); }) ==
        ErrorKind::EmptyOrbitTypeStratum);

  for (auto const &r : corpus::test_reps())
    for (auto const &H : r.rep->lattice().subgroups())
      if (!stratum_is_empty(*r.rep, H))
        CHECK(r.rep->isotropy(point_with_exact_isotropy(*r.rep, H)) == H);
}

TEST_CASE("points with exact isotropy")
{
  auto Z2 = corpus::z2_sign().rep;
  CHECK(point_with_exact_isotropy(*Z2, Z2->lattice().classes()[0].representative) == vec({1}));
  CHECK(point_with_exact_isotropy(*Z2, Z2->lattice().classes()[1].representative) == vec({0}));

  // trivial summand: V^G is a line
  auto V = corpus::s3_permutation().rep;
  auto x = point_with_exact_isotropy(*V, V->lattice().classes()[3].representative);
  CHECK(x[0] == x[1]);
  CHECK(x[1] == x[2]);
  CHECK(sgn(x[0]) != 0);

  FixedSubspace fixed = V->fixed_subspace(V->lattice().classes()[0].representative);
  auto p = ladder_point(fixed, 2, 3);
  CHECK(p.size() == 3);
}

TEST_CASE("signed blocks")
{
  CHECK(determinant(signed_linear_block(3, -1)) == -1);
  CHECK(signed_linear_block(2, 1) == QMatrix::identity(2));
  CHECK(signed_linear_block(0, 1).rows() == 0);
  CHECK(kind_of([] { signed_linear_block(0, -1); }) == ErrorKind::ZeroDimNegative);
  CHECK(kind_of([] { signed_linear_block(2, 3); }) == ErrorKind::InvalidInput);
}

TEST_CASE("realize_element examples")
{
  auto z2 = corpus::z2_sign();
  auto const &A = z2.rep->ring();

  CHECK(realize_element({A.zero(), z2.rep}).pieces.empty());

  auto three = realize_element({A.parse("3*[G/e]"), z2.rep});
  REQUIRE(three.pieces.size() == 3);
  for (long k = 0; k < 3; ++k) {
    CHECK(three.pieces[k].base_point == vec({k + 1}));
    CHECK(std::get<LinearLocal>(three.pieces[k].local).matrix == QMatrix::identity(1));
  }
  CHECK(deg_polystandard(three).value == A.parse("3*[G/e]"));

  auto unit = realize_element({A.one(), z2.rep});
  CHECK(deg_polystandard(unit).value == A.one());
  CHECK(deg_polystandard(realize_element({A.parse("[G/G] - 2*[G/e]"), z2.rep})).value ==
        A.parse("[G/G] - 2*[G/e]"));

  CHECK(kind_of([&] { realize_element({A.parse("2*[G/G]"), z2.rep}); }) == ErrorKind::InfeasibleCoefficient);
  CHECK(kind_of([&] { realize_element({A.parse("-1*[G/G]"), z2.rep}); }) == ErrorKind::InfeasibleCoefficient);

  auto s3 = corpus::s3_permutation();
  CHECK(kind_of([&] { realize_element({s3.rep->ring().parse("[G/(1 2 3)]"), s3.rep}); }) ==
        ErrorKind::InfeasibleCoefficient);
  // with a trivial summand the [G/G] coefficient is free
  CHECK(deg_polystandard(realize_element({s3.rep->ring().parse("-4*[G/G]"), s3.rep})).value ==
        s3.rep->ring().parse("-4*[G/G]"));

  CHECK(kind_of([&] { realize_element({A.one(), s3.rep}); }) == ErrorKind::GroupMismatch);
}

TEST_CASE("round trip and products of realized maps")
{
  std::mt19937_64 rng(3);
  for (auto const &r : corpus::test_reps()) {
    CAPTURE(r.name);
    for (int k = 0; k < 15; ++k) {
      auto s = corpus::random_target(*r.rep, rng);
      auto t = corpus::random_target(*r.rep, rng);
      auto f = realize_element({s, r.rep});
      auto g = realize_element({t, r.rep});
      for (auto const &p : f.pieces)
        CHECK_NOTHROW(validate_piece(*r.rep, p));
      REQUIRE(deg_polystandard(f).value == s);
      auto report = verify_product(f, g);
      CHECK(report.equal);
      CHECK(report.rhs == s * t);
    }
  }
}

TEST_CASE("fit_tubes")
{
  auto Z2 = corpus::z2_sign().rep;
  std::vector<StandardPiece> pieces{{vec({1}), 1, 1, DeclaredLocal{1}}, {vec({2}), 1, 1, DeclaredLocal{1}}};
  fit_tubes(*Z2, pieces);
  CHECK(pieces[0].radius == Rational(1, 5));
  CHECK(pieces[1].epsilon == Rational(1, 5));
  CHECK_NOTHROW(deg_polystandard({Z2, pieces}));

  std::vector<StandardPiece> clash{{vec({1}), 1, 1, DeclaredLocal{1}}, {vec({-1}), 1, 1, DeclaredLocal{1}}};
  CHECK(kind_of([&] { fit_tubes(*Z2, clash); }) == ErrorKind::OverlappingPieces);
}
