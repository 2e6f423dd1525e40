#include "burneq/io.hpp"

#include <fstream>
#include <limits>

#include "burneq/error.hpp"

namespace burneq::io
{

namespace
{

[[noreturn]] void bad(std::string const &what)
{ throw Error(ErrorKind::InvalidInput, what); }

Rational rational_from_json(Json const &v)
{
  try {
    if (v.is_string())
      return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
      return Rational(Integer(std::to_string(v.get<long long>())));
  } catch (std::invalid_argument const &e) {
    bad(e.what());
  }
  bad("expected a rational as \"p/q\" string or integer, got " + v.dump());
}

Json rational_to_json(Rational const &q)
{ return to_string(q); }

QVector vector_from_json(Json const &v)
{
  if (!v.is_array())
    bad("expected an array of rationals, got " + v.dump());
  QVector out;
  for (auto const &x : v)
    out.push_back(rational_from_json(x));
  return out;
}

QMatrix matrix_from_json(Json const &v)
{
  if (!v.is_array())
    bad("expected a matrix as an array of rows, got " + v.dump());
  std::vector<QVector> rows;
  for (auto const &row : v)
    rows.push_back(vector_from_json(row));
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      bad("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Json matrix_to_json(QMatrix const &m)
{
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json const &field(Json const &doc, char const *name)
{
  if (!doc.is_object() || !doc.contains(name))
    bad(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

} // namespace

std::vector<Permutation> group_from_json(Json const &doc)
{
  Json const &points = field(doc, "points");
  if (!points.is_number_unsigned())
    bad("\"points\" must be a non-negative integer");
  auto const k = points.get<std::size_t>();

  std::vector<Permutation> gens;
  for (auto const &g : field(doc, "generators")) {
    if (!g.is_array() || g.size() != k)
      bad("every generator must list " + std::to_string(k) + " images");
    Permutation p;
    for (auto const &image : g) {
      if (!image.is_number_unsigned())
        bad("permutation images must be non-negative integers");
      p.push_back(image.get<std::uint32_t>());
    }
    gens.push_back(std::move(p));
  }
  return gens;
}

Json group_to_json(FiniteGroup const &G)
{ return Json{{"points", G.degree()}, {"generators", G.generators()}}; }

std::vector<QMatrix> rep_matrices_from_json(Json const &doc)
{
  Json const &dim = field(doc, "dim");
  if (!dim.is_number_unsigned())
    bad("\"dim\" must be a non-negative integer");
  auto const n = dim.get<std::size_t>();

  std::vector<QMatrix> mats;
  for (auto const &m : field(doc, "generator_matrices")) {
    QMatrix M = matrix_from_json(m);
    if (M.rows() != n || (n > 0 && M.cols() != n))
      throw Error(ErrorKind::DimensionMismatch,
                  "generator matrix is not " + std::to_string(n) + "x" + std::to_string(n));
    if (n == 0)
      M = QMatrix(0, 0);
    mats.push_back(std::move(M));
  }
  return mats;
}

Json rep_to_json(Representation const &rep)
{
  Json mats = Json::array();
  for (auto const &m : rep.generator_matrices())
    mats.push_back(matrix_to_json(m));
  return Json{{"dim", rep.dim()}, {"generator_matrices", mats}};
}

PolystandardMap map_from_json(Json const &doc, std::shared_ptr<Representation const> rep)
{
  PolystandardMap f{rep, {}};
  for (auto const &p : field(doc, "pieces")) {
    StandardPiece piece;
    piece.base_point = vector_from_json(field(p, "base_point"));
    piece.epsilon = rational_from_json(field(p, "epsilon"));
    piece.radius = rational_from_json(field(p, "radius"));

    Json const &local = field(p, "local");
    Json const &type = field(local, "type");
    if (type == "linear") {
      piece.local = LinearLocal{matrix_from_json(field(local, "matrix"))};
    } else if (type == "expr") {
      ExprLocal ex;
      for (auto const &src : field(local, "exprs")) {
        if (!src.is_string())
          bad("expressions must be strings");
        ex.sources.push_back(src.get<std::string>());
        ex.exprs.push_back(parse_expr(ex.sources.back(), rep->dim()));
      }
      piece.local = std::move(ex);
    } else if (type == "degree") {
      Json const &d = field(local, "d");
      if (!d.is_number_integer())
        bad("\"d\" must be an integer");
      piece.local = DeclaredLocal{d.get<long>()};
    } else {
      bad("unknown local map type " + type.dump());
    }
    f.pieces.push_back(std::move(piece));
  }
  return f;
}

Json map_to_json(PolystandardMap const &f, Json const &rep_id)
{
  Json pieces = Json::array();
  for (auto const &p : f.pieces) {
    Json base = Json::array();
    for (auto const &x : p.base_point)
      base.push_back(rational_to_json(x));

    Json local;
    if (auto const *lin = std::get_if<LinearLocal>(&p.local))
      local = Json{{"type", "linear"}, {"matrix", matrix_to_json(lin->matrix)}};
    else if (auto const *ex = std::get_if<ExprLocal>(&p.local))
      local = Json{{"type", "expr"}, {"exprs", ex->sources}};
    else
      local = Json{{"type", "degree"}, {"d", std::get<DeclaredLocal>(p.local).d}};

    pieces.push_back(Json{{"base_point", base},
                          {"epsilon", rational_to_json(p.epsilon)},
                          {"radius", rational_to_json(p.radius)},
                          {"local", local}});
  }
  return Json{{"rep", rep_id}, {"pieces", pieces}};
}

Json element_to_json(BurnsideElement const &x)
{
  Json coeffs = Json::array();
  for (auto const &c : x.coeffs()) {
    if (c.fits_slong_p())
      coeffs.push_back(c.get_si());
    else
      coeffs.push_back(c.get_str());
  }
  return Json{{"coeffs", coeffs}};
}

BurnsideElement element_from_json(Json const &doc, std::shared_ptr<BurnsideRing const> ring)
{
  std::vector<Integer> coeffs;
  for (auto const &c : field(doc, "coeffs")) {
    if (c.is_number_integer())
      coeffs.emplace_back(std::to_string(c.get<long long>()));
    else if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else
      bad("coefficients must be integers");
  }
  if (coeffs.size() != ring->rank())
    bad("expected " + std::to_string(ring->rank()) + " coefficients");
  return BurnsideElement(std::move(ring), std::move(coeffs));
}

std::string marks_csv(BurnsideRing const &ring)
{
  auto quote = [](std::string const &s) { return "\"" + s + "\""; };
  SubgroupLattice const &lattice = ring.lattice();
  std::string out = quote("G/H \\ K");
  for (std::size_t j = 0; j < ring.rank(); ++j)
    out += "," + quote(lattice.label(j));
  out += "\n";
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    out += quote(lattice.label(i));
    for (std::size_t j = 0; j < ring.rank(); ++j)
      out += "," + std::to_string(ring.marks().marks[i][j]);
    out += "\n";
  }
  return out;
}

Json read_json_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (Json::parse_error const &e) {
    bad(path.string() + ": " + e.what());
  }
}

} // namespace burneq::io
