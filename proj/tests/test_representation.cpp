#include <doctest.h>

#include "burneq/error.hpp"
#include "burneq/representation.hpp"
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

Subgroup subgroup_of(SubgroupLattice const &L, std::string const &label)
{ return L.classes()[L.find_label(label)].representative; }

} // namespace

TEST_CASE("building representations")
{
  auto z2 = corpus::ring_of(corpus::cyclic(2));
  CHECK(Representation::build(z2, {matrix({{-1}})})->dim() == 1);
  CHECK(kind_of([&] { Representation::build(z2, {matrix({{2}})}); }) == ErrorKind::NotOrthogonal);
  CHECK(kind_of([&] { Representation::build(z2, {matrix({{1, 1}, {0, 1}})}); }) == ErrorKind::NotOrthogonal);
  CHECK(kind_of([&] { Representation::build(z2, {}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { Representation::build(z2, {matrix({{0, 1}, {-1, 0}})}); }) ==
        ErrorKind::NotAHomomorphism);

  auto s3 = corpus::ring_of(corpus::s3());
  CHECK(kind_of([&] { Representation::build(s3, {matrix({{-1}}), matrix({{-1}})}); }) ==
        ErrorKind::NotAHomomorphism);
  CHECK(kind_of([&] { Representation::build(s3, {matrix({{-1}}), matrix({{1, 0}, {0, 1}})}); }) ==
        ErrorKind::DimensionMismatch);

  // rational rotation by the 3-4-5 triangle has infinite order
  auto z4 = corpus::ring_of(corpus::cyclic(4));
  QMatrix rot(2, 2);
  rot(0, 0) = Rational(3, 5);
  rot(0, 1) = Rational(-4, 5);
  rot(1, 0) = Rational(4, 5);
  rot(1, 1) = Rational(3, 5);
  CHECK(kind_of([&] { Representation::build(z4, {rot}); }) == ErrorKind::NotAHomomorphism);

  for (auto const &r : corpus::test_reps())
    for (ElementIndex a = 0; a < r.rep->group().order(); ++a)
      for (ElementIndex b = 0; b < r.rep->group().order(); ++b)
        CHECK(r.rep->matrix(a) * r.rep->matrix(b) == r.rep->matrix(r.rep->group().mul(a, b)));
}

TEST_CASE("fixed subspaces")
{
  auto V = corpus::s3_permutation().rep;
  auto const &L = V->lattice();

  CHECK(V->fixed_subspace(subgroup_of(L, "e")).dim() == 3);

  auto whole = V->fixed_subspace(subgroup_of(L, "G"));
  REQUIRE(whole.dim() == 1);
  CHECK(rank(QMatrix::from_columns({whole.basis[0], vec({1, 1, 1})}, 3)) == 1);

  auto c2 = V->fixed_subspace(subgroup_of(L, "(1 2)"));
  REQUIRE(c2.dim() == 2);
  QMatrix both = QMatrix::from_columns({c2.basis[0], c2.basis[1], vec({1, 1, 0}), vec({0, 0, 1})}, 3);
  CHECK(rank(both) == 2);

  for (auto const &r : corpus::test_reps())
    for (auto const &H : r.rep->lattice().subgroups()) {
      std::size_t const n = r.rep->dim();
      QMatrix P = r.rep->projector(H);
      CHECK(P * P == P);
      CHECK(rank(P) == r.rep->fixed_dim(H));
      CHECK(n - rank(P - QMatrix::identity(n)) == r.rep->fixed_dim(H));
      for (auto const &b : r.rep->fixed_subspace(H).basis)
        for (auto h : H.elements)
          CHECK(r.rep->act(h, b) == b);
    }
}

TEST_CASE("isotropy and orbits")
{
  auto V = corpus::s3_permutation().rep;
  auto const &L = V->lattice();
  CHECK(V->isotropy(vec({0, 0, 0})).order() == 6);
  CHECK(V->isotropy(vec({1, 1, 0})) == subgroup_of(L, "(1 2)"));
  CHECK(V->isotropy(vec({1, 2, 4})).order() == 1);

  CHECK(V->orbit(vec({0, 0, 0})).size() == 1);
  auto orbit = V->orbit(vec({1, 1, 0}));
  CHECK(orbit.size() == 3);
  CHECK(orbit[0] == vec({1, 1, 0}));
  CHECK(V->orbit(vec({1, 2, 4})).size() == 6);

  auto z2 = corpus::z2_sign().rep;
  CHECK(z2->orbit(vec({1})) == std::vector<QVector>{vec({1}), vec({-1})});

  for (auto const &r : corpus::test_reps()) {
    auto x = r.rep->orbit_types().entries.front().witness;
    REQUIRE(x);
    CHECK(r.rep->orbit(*x).size() * r.rep->isotropy(*x).order() == r.rep->group().order());
  }

  CHECK(orbit_gset(*V, vec({1, 1, 0})).size == 3);
  CHECK(decompose_gset(V->ring(), orbit_gset(*V, vec({1, 1, 0}))) == V->ring().basis(L.find_label("(1 2)")));
}

TEST_CASE("orbit types")
{
  auto z2 = corpus::z2_sign().rep->orbit_types().entries;
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].dim_fixed == 1);
  CHECK(z2[0].occupied);
  CHECK(z2[1].dim_fixed == 0);
  CHECK(z2[1].occupied);
  CHECK(*z2[1].witness == QVector(1));

  auto trivial = Representation::build(corpus::ring_of(corpus::s3()), {matrix({{1}}), matrix({{1}})});
  for (auto const &e : trivial->orbit_types().entries)
    CHECK(e.occupied == (e.subgroup_class == trivial->lattice().whole_class()));

  auto s3 = corpus::s3_permutation().rep->orbit_types().entries;
  REQUIRE(s3.size() == 4);
  CHECK(s3[0].dim_fixed == 3);
  CHECK(s3[1].dim_fixed == 2);
  CHECK(s3[2].dim_fixed == 1);
  CHECK(s3[3].dim_fixed == 1);
  CHECK(s3[0].occupied);
  CHECK(s3[1].occupied);
  CHECK_FALSE(s3[2].occupied);
  CHECK_FALSE(s3[2].witness);
  CHECK(s3[3].occupied);

  for (auto const &r : corpus::test_reps())
    for (auto const &e : r.rep->orbit_types().entries)
      if (e.witness)
        CHECK(r.rep->lattice().class_of(r.rep->isotropy(*e.witness)) == e.subgroup_class);
}

TEST_CASE("direct sums")
{
  auto V = corpus::s3_permutation().rep;
  auto W = direct_sum(*V, *V);
  CHECK(W->dim() == 6);
  CHECK(W->fixed_dim(V->lattice().classes()[2].representative) == 2);

  auto other = corpus::z2_sign().rep;
  CHECK(kind_of([&] { direct_sum(*V, *other); }) == ErrorKind::GroupMismatch);
}
