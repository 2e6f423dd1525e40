// One line per acceptance property. Exit status is nonzero when any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "burneq/error.hpp"
#include "burneq/expr.hpp"
#include "support/oracles.hpp"
#include "support/corpus.hpp"

using namespace burneq;

namespace
{

struct Outcome
{
  bool ok = true;
  std::string detail;
  std::string note;

  void fail(std::string const &why)
  {
    if (ok)
      detail = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, std::string const &name, double budget_seconds, std::function<Outcome()> const &body)
{
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (std::exception const &e) {
    out.fail(std::string("unexpected exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs > budget_seconds)
    out.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_seconds) + " s");
  std::ostringstream line;
  line.precision(3);
  line << std::fixed << (out.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << secs << " s)";
  if (!out.ok)
    line << ": " << out.detail;
  else if (!out.note.empty())
    line << " " << out.note;
  std::cout << line.str() << std::endl;
  failures += out.ok ? 0 : 1;
}

// The product corpus: 200 seeded pairs, spread evenly over the test reps.
struct ProductCase
{
  std::string rep;
  PolystandardMap f, g;
};

std::vector<ProductCase> const &product_corpus()
{
  static std::vector<ProductCase> cases = [] {
    std::vector<ProductCase> out;
    std::mt19937_64 rng(20240611);
    auto reps = corpus::test_reps();
    for (std::size_t k = 0; k < 200; ++k) {
      auto const &r = reps[k % reps.size()];
      auto f = corpus::random_map(r.rep, rng, {3});
      auto g = corpus::random_map(r.rep, rng, {3});
      out.push_back({r.name, std::move(f), std::move(g)});
    }
    return out;
  }();
  return cases;
}

Outcome marks_vs_orbits()
{
  Outcome out;
  std::size_t pairs = 0;
  for (auto const &G : corpus::small_groups()) {
    auto ring = corpus::ring_of(G.generators);
    for (std::size_t a = 0; a < ring->rank(); ++a)
      for (std::size_t b = 0; b < ring->rank(); ++b) {
        auto lhs = mul(ring->basis(a), ring->basis(b));
        auto rhs = decompose_gset(*ring, product_gset(ring->lattice(), a, b));
        ++pairs;
        if (!(lhs == rhs))
          out.fail(G.name + ": " + lhs.to_string() + " vs " + rhs.to_string());
      }
  }
  out.note = "[" + std::to_string(pairs) + " class pairs]";
  return out;
}

Outcome product_formula()
{
  Outcome out;
  std::size_t pairs = 0, orbits = 0, nonzero = 0;
  for (auto const &c : product_corpus()) {
    auto r = verify_product(c.f, c.g);
    ++pairs;
    orbits += r.per_orbit.size();
    nonzero += r.lhs.is_zero() ? 0 : 1;
    if (!r.equal || !r.per_orbit_ok)
      out.fail(c.rep + ": " + r.lhs.to_string() + " vs " + r.rhs.to_string());
  }
  out.note = "[" + std::to_string(pairs) + " pairs, " + std::to_string(orbits) + " product orbits, " +
             std::to_string(nonzero) + " nonzero products]";
  return out;
}

Outcome per_orbit_blocks()
{
  Outcome out;
  std::size_t checked = 0;
  for (auto const &c : product_corpus()) {
    auto sum = direct_sum(*c.f.rep, *c.g.rep);
    auto traced = product_map_traced(c.f, c.g);
    for (std::size_t k = 0; k < traced.map.pieces.size(); ++k) {
      auto [i, j] = traced.origins[k];
      auto const *A = std::get_if<LinearLocal>(&c.f.pieces[i].local);
      auto const *B = std::get_if<LinearLocal>(&c.g.pieces[j].local);
      if (!A || !B)
        continue;
      long d_alpha = sgn(determinant(A->matrix));
      long d_beta = sgn(determinant(B->matrix));
      long block = oracles::product_block_sign(*c.f.rep, c.f.pieces[i], *c.g.rep, c.g.pieces[j], *sum,
                                               traced.map.pieces[k].base_point);
      long declared = local_index(traced.map.pieces[k], *sum);
      ++checked;
      if (block != d_alpha * d_beta || declared != block)
        out.fail(c.rep + ": block determinant sign " + std::to_string(block) + ", d_alpha*d_beta " +
                 std::to_string(d_alpha * d_beta) + ", declared " + std::to_string(declared));
    }
  }
  if (checked == 0)
    out.fail("corpus has no linear-linear piece pairs");
  out.note = "[" + std::to_string(checked) + " product orbits]";
  return out;
}

Outcome degree_axioms()
{
  Outcome out;
  for (auto const &r : corpus::test_reps()) {
    Representation const &V = *r.rep;
    for (auto const &e : V.orbit_types().entries) {
      if (!e.occupied)
        continue;
      std::size_t const d = V.fixed_dim(V.lattice().classes()[e.subgroup_class].representative);
      PolystandardMap f{r.rep, {{*e.witness, 1, 1, LinearLocal{QMatrix::identity(d)}}}};
      corpus::fit_tubes(V, f.pieces);
      auto deg = deg_polystandard(f);
      if (!(deg.value == V.ring().basis(e.subgroup_class)))
        out.fail(r.name + ": normalization at " + to_string(*e.witness) + " gave " + deg.value.to_string());
    }
  }

  std::mt19937_64 rng(77);
  for (auto const &c : product_corpus()) {
    // split a single random map so the halves are disjoint by construction
    auto const whole = corpus::random_map(c.f.rep, rng, {5});
    PolystandardMap left{whole.rep, {}}, right{whole.rep, {}};
    for (std::size_t k = 0; k < whole.pieces.size(); ++k)
      (k % 2 ? right : left).pieces.push_back(whole.pieces[k]);
    auto joined = disjoint_union(left, right);
    auto sum = deg_polystandard(left).value + deg_polystandard(right).value;
    if (!(deg_polystandard(joined).value == sum))
      out.fail(c.rep + ": additivity");

    for (PolystandardMap const *f : {&c.f, &c.g, &whole}) {
      auto deg = deg_polystandard(*f);
      if (!deg.value.is_zero() && deg.per_orbit.empty())
        out.fail(c.rep + ": nonzero degree " + deg.value.to_string() + " without orbits");
      if (existence_check(deg) != !deg.value.is_zero())
        out.fail(c.rep + ": existence_check disagrees with the degree");
    }
  }
  return out;
}

Outcome conjugation_invariance()
{
  Outcome out;
  std::size_t checked = 0;
  for (auto const &c : product_corpus())
    for (PolystandardMap const *f : {&c.f, &c.g})
      for (auto const &piece : f->pieces) {
        if (!std::holds_alternative<LinearLocal>(piece.local))
          continue;
        Representation const &V = *f->rep;
        long base = local_index(piece, V);
        for (ElementIndex g = 0; g < V.group().order(); ++g) {
          auto moved = oracles::conjugate_linear_piece(V, piece, g);
          ++checked;
          if (local_index(moved, V) != base)
            out.fail(c.rep + ": index changes under g = " + cycle_notation(V.group().perm(g)) + " at " +
                     to_string(piece.base_point));
        }
      }
  if (checked == 0)
    out.fail("corpus has no linear pieces");
  out.note = "[" + std::to_string(checked) + " conjugated pieces]";
  return out;
}

Outcome realization()
{
  Outcome out;
  std::mt19937_64 rng(4242);
  for (auto const &r : corpus::test_reps())
    for (int k = 0; k < 100; ++k) {
      auto target = corpus::random_target(*r.rep, rng);
      auto deg = deg_polystandard(realize_element({target, r.rep}));
      if (!(deg.value == target))
        out.fail(r.name + ": " + target.to_string() + " realized as " + deg.value.to_string());
    }

  auto expect_infeasible = [&](corpus::NamedRep const &r, std::string const &text) {
    try {
      realize_element({r.rep->ring().parse(text), r.rep});
      out.fail(r.name + ": " + text + " was realized");
    } catch (Error const &e) {
      if (e.kind() != ErrorKind::InfeasibleCoefficient)
        out.fail(r.name + ": " + text + " raised " + e.what());
    }
  };
  expect_infeasible(corpus::z2_sign(), "2*[G/G]");
  expect_infeasible(corpus::s3_permutation(), "1*[G/(1 2 3)]");
  return out;
}

Outcome numerical_index()
{
  Outcome out;
  std::mt19937_64 rng(9001);
  int singular_checked = 0;
  for (int k = 0; k < 100; ++k) {
    std::size_t const d = static_cast<std::size_t>(corpus::uniform(rng, 1, 4));
    auto V = oracles::trivial_rep(d);
    QMatrix A = corpus::random_invertible(rng, d, 5);
    QVector x0(d);
    for (auto &x : x0) {
      x = Rational(corpus::uniform(rng, -8, 8), corpus::uniform(rng, 1, 4));
      x.canonicalize();
    }
    StandardPiece piece{x0, 1, 1, corpus::affine_expr_local(A, QMatrix::identity(d), x0)};
    long expected = sgn(determinant(A));
    long got = local_index(piece, *V);
    if (got != expected)
      out.fail("index " + std::to_string(got) + " for det " + to_string(determinant(A)));

    // the same shape made singular by repeating a row
    if (d >= 2) {
      QMatrix S = A;
      long const k = corpus::uniform(rng, -2, 2);
      for (std::size_t c = 0; c < d; ++c)
        S(d - 1, c) = S(0, c) * k;
      StandardPiece singular{x0, 1, 1, corpus::affine_expr_local(S, QMatrix::identity(d), x0)};
      try {
        local_index(singular, *V);
        out.fail("singular matrix accepted");
      } catch (Error const &e) {
        if (e.kind() != ErrorKind::SingularJacobian)
          out.fail(std::string("singular matrix raised ") + e.what());
      }
      ++singular_checked;
    }
  }
  if (singular_checked == 0)
    out.fail("no singular cases were drawn");
  out.note = "[100 regular, " + std::to_string(singular_checked) + " singular]";
  return out;
}

Outcome parser_suite()
{
  Outcome out;
  std::mt19937_64 rng(31337);
  for (int k = 0; k < 50; ++k) {
    std::size_t const dim = static_cast<std::size_t>(corpus::uniform(rng, 1, 3));
    Expr e = oracles::random_expr(rng, dim, 4);
    std::string text = print(e);
    Expr back = parse_expr(text, dim);
    if (!(back == e) || print(back) != text)
      out.fail("round trip of " + text + " gave " + print(back));
  }

  // 50 polynomial systems; a draw with huge values is replaced by the next one
  std::mt19937_64 pts(271828);
  int systems = 0, compared = 0;
  for (int attempt = 0; attempt < 1000 && systems < 50; ++attempt) {
    std::size_t const dim = static_cast<std::size_t>(corpus::uniform(pts, 1, 3));
    std::vector<Expr> fs;
    for (std::size_t i = 0; i < dim; ++i)
      fs.push_back(oracles::random_expr(pts, dim, 3, false));
    std::vector<double> x(dim);
    for (auto &v : x)
      v = 0.5 + static_cast<double>(pts() % 1000) / 1000.0;
    if (!oracles::away_from_singularities(fs, x))
      continue;
    ++systems;
    auto J = jacobian_fd(fs, x);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        double exact = eval(oracles::derivative(fs[i], j), x);
        double err = std::abs(J[i][j] - exact) / std::max(1.0, std::abs(exact));
        ++compared;
        if (err > 1e-5)
          out.fail("d(" + print(fs[i]) + ")/dx" + std::to_string(j + 1) + ": fd " + std::to_string(J[i][j]) +
                   " vs " + std::to_string(exact));
      }
  }
  if (systems < 50)
    out.fail("only " + std::to_string(systems) + " polynomial systems compared");
  out.note = "[" + std::to_string(systems) + " systems, " + std::to_string(compared) + " Jacobian entries]";
  return out;
}

} // namespace

int main()
{
  report(1, "marks product equals orbit decomposition, 8 groups, all class pairs", 10, marks_vs_orbits);
  report(2, "deg(f x f') = deg f * deg f' on 200 seeded map pairs", 30, product_formula);
  report(3, "block determinant on V^(H cap K) equals d_alpha * d_beta", 30, per_orbit_blocks);
  report(4, "degree normalization, additivity and existence", 30, degree_axioms);
  report(5, "local index is invariant under conjugation by every g", 30, conjugation_invariance);
  report(6, "realization round trip, 100 targets per representation; infeasible targets rejected", 10,
         realization);
  report(7, "expression local index equals sign of exact determinant; singular rejected", 5, numerical_index);
  report(8, "parse/print round trip on 50 expressions; jacobian_fd against symbolic derivatives", 30,
         parser_suite);
  std::cout << (failures == 0 ? "all acceptance checks passed" : std::to_string(failures) + " acceptance checks failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
