#include "burneq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "burneq/burnside.hpp"
#include "burneq/degree.hpp"
#include "burneq/error.hpp"
#include "burneq/io.hpp"
#include "burneq/realization.hpp"
#include "burneq/representation.hpp"

namespace burneq::cli
{

namespace
{

using io::Json;

struct SessionConfig
{
  std::string group_path;
  std::vector<std::string> rep_paths;
  std::vector<std::string> map_paths;
  std::string rep1, rep2, map1, map2;
  std::string element, lhs, rhs;
  std::string output_path;
  std::string format = "text";
  std::uint64_t seed = 1;
  int verbosity = 0;
};

std::shared_ptr<BurnsideRing const> load_ring(std::string const &path)
{
  auto gens = io::group_from_json(io::read_json_file(path));
  return BurnsideRing::create(std::make_shared<FiniteGroup const>(generate_group(gens)));
}

std::shared_ptr<Representation const> load_rep(std::shared_ptr<BurnsideRing const> const &ring,
                                               std::string const &path)
{ return Representation::build(ring, io::rep_matrices_from_json(io::read_json_file(path))); }

std::string orbit_label(SubgroupLattice const &lattice, std::size_t cls)
{ return lattice.label(cls); }

void print_group(BurnsideRing const &ring, std::vector<std::shared_ptr<Representation const>> const &reps,
                 SessionConfig const &cfg, std::ostream &out)
{
  SubgroupLattice const &lattice = ring.lattice();
  auto const &classes = lattice.classes();

  if (cfg.format == "json") {
    Json doc;
    doc["order"] = ring.group().order();
    doc["subgroups"] = lattice.subgroups().size();
    Json cls_json = Json::array();
    for (auto const &cls : classes) {
      Json below = Json::array();
      for (std::size_t b = 0; b < classes.size(); ++b)
        if (b != cls.class_index && lattice.leq(cls.class_index, b))
          below.push_back(lattice.label(b));
      cls_json.push_back(Json{{"index", cls.class_index},
                              {"label", lattice.label(cls.class_index)},
                              {"order", cls.representative.order()},
                              {"members", cls.members.size()},
                              {"weyl_order", lattice.weyl(cls.class_index).weyl_order},
                              {"contained_in", below}});
    }
    doc["classes"] = cls_json;
    Json reps_json = Json::array();
    for (auto const &rep : reps) {
      Json entries = Json::array();
      for (auto const &e : rep->orbit_types().entries) {
        Json entry{{"label", lattice.label(e.subgroup_class)},
                   {"dim_fixed", e.dim_fixed},
                   {"occupied", e.occupied}};
        if (e.witness)
          entry["witness"] = to_string(*e.witness);
        entries.push_back(std::move(entry));
      }
      reps_json.push_back(Json{{"dim", rep->dim()}, {"orbit_types", entries}});
    }
    if (!reps.empty())
      doc["representations"] = reps_json;
    out << doc.dump(2) << "\n";
    return;
  }

  out << "order " << ring.group().order() << "\n";
  out << "subgroups " << lattice.subgroups().size() << "\n";
  out << "classes " << classes.size() << "\n";
  out << "index\tlabel\torder\tmembers\tweyl_order\n";
  for (auto const &cls : classes)
    out << cls.class_index << "\t" << lattice.label(cls.class_index) << "\t"
        << cls.representative.order() << "\t" << cls.members.size() << "\t"
        << lattice.weyl(cls.class_index).weyl_order << "\n";

  out << "poset (covering relations)\n";
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = 0; b < classes.size(); ++b) {
      if (a == b || !lattice.leq(a, b))
        continue;
      bool covers = true;
      for (std::size_t c = 0; c < classes.size() && covers; ++c)
        if (c != a && c != b && lattice.leq(a, c) && lattice.leq(c, b))
          covers = false;
      if (covers)
        out << orbit_label(lattice, a) << " < " << orbit_label(lattice, b) << "\n";
    }

  for (std::size_t r = 0; r < reps.size(); ++r) {
    out << "orbit types of representation " << r + 1 << " (dim " << reps[r]->dim() << ")\n";
    out << "label\tdim_fixed\toccupied\twitness\n";
    for (auto const &e : reps[r]->orbit_types().entries)
      out << lattice.label(e.subgroup_class) << "\t" << e.dim_fixed << "\t"
          << (e.occupied ? "yes" : "no") << "\t" << (e.witness ? to_string(*e.witness) : "-")
          << "\n";
  }
}

void print_degree(DegreeResult const &result, SessionConfig const &cfg, std::ostream &out)
{
  SubgroupLattice const &lattice = result.value.ring().lattice();
  if (cfg.format == "json") {
    Json orbits = Json::array();
    for (auto const &o : result.per_orbit)
      orbits.push_back(Json{{"base_point", to_string(o.base_point)},
                            {"orbit_size", o.orbit_size},
                            {"isotropy", lattice.label(o.isotropy_class)},
                            {"index", o.index}});
    Json doc = io::element_to_json(result.value);
    doc["text"] = result.value.to_string();
    doc["per_orbit"] = orbits;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "deg = " << result.value.to_string() << "\n";
  for (auto const &o : result.per_orbit)
    out << "orbit " << to_string(o.base_point) << " size " << o.orbit_size << " isotropy "
        << orbit_label(lattice, o.isotropy_class) << " index " << o.index << "\n";
}

void print_product(ProductReport const &report, SessionConfig const &cfg, std::ostream &out)
{
  if (cfg.format == "json") {
    Json orbits = Json::array();
    for (auto const &c : report.per_orbit)
      orbits.push_back(Json{{"left_piece", c.left_piece},
                            {"right_piece", c.right_piece},
                            {"base_point", to_string(c.base_point)},
                            {"d_left", c.d_left},
                            {"d_right", c.d_right},
                            {"d_product", c.d_product},
                            {"ok", c.ok}});
    Json doc{{"lhs", report.lhs.to_string()},
             {"rhs", report.rhs.to_string()},
             {"lhs_coeffs", io::element_to_json(report.lhs)["coeffs"]},
             {"rhs_coeffs", io::element_to_json(report.rhs)["coeffs"]},
             {"equal", report.equal},
             {"per_orbit_ok", report.per_orbit_ok},
             {"per_orbit", orbits}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << "lhs deg(f x f') = " << report.lhs.to_string() << "\n";
  out << "rhs deg f * deg f' = " << report.rhs.to_string() << "\n";
  out << "per-orbit d_gamma = d_alpha * d_beta: " << (report.per_orbit_ok ? "ok" : "FAILED") << " ("
      << report.per_orbit.size() << " orbits)\n";
  out << "equal " << (report.equal ? "true" : "false") << "\n";
}

/// Uniform draw in [lo, hi] that is identical on every platform.
long draw(std::mt19937_64 &rng, long lo, long hi)
{ return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

BurnsideElement random_feasible_target(Representation const &rep, std::mt19937_64 &rng)
{
  SubgroupLattice const &lattice = rep.lattice();
  std::vector<Integer> coeffs(lattice.class_count());
  std::size_t const whole = lattice.whole_class();
  for (auto const &cls : lattice.classes()) {
    if (stratum_is_empty(rep, cls.representative))
      continue;
    if (cls.class_index == whole && rep.fixed_dim(cls.representative) == 0)
      coeffs[whole] = draw(rng, 0, 1);
    else
      coeffs[cls.class_index] = draw(rng, -2, 2);
  }
  return BurnsideElement(rep.ring_ptr(), std::move(coeffs));
}

int run_check(BurnsideRing const &ring, std::vector<std::shared_ptr<Representation const>> const &reps,
              SessionConfig const &cfg, std::ostream &out)
{
  int failures = 0;
  auto report = [&](bool ok, std::string const &name, std::string const &detail = {}) {
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty())
      out << ": " << detail;
    out << "\n";
    failures += ok ? 0 : 1;
  };

  FiniteGroup const &G = ring.group();
  SubgroupLattice const &lattice = ring.lattice();
  auto const &marks = ring.marks().marks;

  bool law = true;
  for (ElementIndex a = 0; a < G.order() && law; ++a)
    for (ElementIndex b = 0; b < G.order() && law; ++b) {
      law = G.mul(0, a) == a && G.mul(a, 0) == a;
      for (ElementIndex c = 0; c < G.order() && law; ++c)
        law = G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c));
    }
  report(law, "multiplication table is a group law");

  bool table_ok = true;
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    auto const &H = lattice.classes()[i].representative;
    table_ok = table_ok && marks[i][i] == static_cast<std::int64_t>(lattice.weyl(i).weyl_order) &&
               marks[i][0] == static_cast<std::int64_t>(G.order() / H.order());
    for (std::size_t j = 0; j < ring.rank(); ++j)
      if (marks[i][j] != 0 && (j > i || !lattice.leq(j, i)))
        table_ok = false;
  }
  report(table_ok, "table of marks invariants");

  bool oracle = true;
  std::string mismatch;
  for (std::size_t a = 0; a < ring.rank() && oracle; ++a)
    for (std::size_t b = 0; b < ring.rank() && oracle; ++b) {
      auto via_marks = mul(ring.basis(a), ring.basis(b));
      auto via_orbits = decompose_gset(ring, product_gset(lattice, a, b));
      if (!(via_marks == via_orbits)) {
        oracle = false;
        mismatch = "[G/" + lattice.label(a) + "]*[G/" + lattice.label(b) + "]: " +
                   via_marks.to_string() + " vs " + via_orbits.to_string();
      }
    }
  report(oracle, "marks product equals orbit decomposition for all class pairs", mismatch);

  std::mt19937_64 rng(cfg.seed);
  std::size_t const rounds = 20;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    Representation const &rep = *reps[r];
    std::string const tag = "representation " + std::to_string(r + 1) + ": ";

    bool roundtrip = true;
    std::string detail;
    std::vector<PolystandardMap> realized;
    for (std::size_t k = 0; k < rounds && roundtrip; ++k) {
      auto target = random_feasible_target(rep, rng);
      auto map = realize_element({target, reps[r]});
      auto deg = deg_polystandard(map);
      if (!(deg.value == target)) {
        roundtrip = false;
        detail = target.to_string() + " realized with degree " + deg.value.to_string();
      }
      realized.push_back(std::move(map));
    }
    report(roundtrip, tag + "realization round trip", detail);

    bool product = true;
    detail.clear();
    for (std::size_t k = 0; k + 1 < realized.size() && product; k += 2) {
      auto rep_report = verify_product(realized[k], realized[k + 1]);
      if (!rep_report.equal || !rep_report.per_orbit_ok) {
        product = false;
        detail = rep_report.lhs.to_string() + " vs " + rep_report.rhs.to_string();
      }
    }
    report(product, tag + "product formula on realized maps", detail);
  }

  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " checks failed")
      << "\n";
  return failures == 0 ? kOk : kInternal;
}

int exit_code_for(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::InfeasibleCoefficient:
    case ErrorKind::EmptyOrbitTypeStratum:
      return kInfeasible;
    case ErrorKind::NonIntegralSolution:
      return kInternal;
    default:
      return kInputError;
  }
}

/// "-r1" style flags are not expressible as CLI11 short options.
void rewrite_numbered_flags(std::vector<std::string> &args)
{
  for (auto &a : args) {
    if (a == "-r1")
      a = "--rep1";
    else if (a == "-r2")
      a = "--rep2";
    else if (a == "-m1")
      a = "--map1";
    else if (a == "-m2")
      a = "--map2";
  }
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
  SessionConfig cfg;
  CLI::App app{"Burnside ring arithmetic and equivariant degree of polystandard maps", "burneq"};
  app.require_subcommand(1);

  auto add_group = [&](CLI::App *sub) {
    sub->add_option("-g,--group", cfg.group_path, "group descriptor (JSON)")->required();
  };
  auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto *group = app.add_subcommand("group", "subgroup classes, Weyl orders and orbit-type poset");
  add_group(group);
  group->add_option("-r,--rep", cfg.rep_paths, "representation descriptor (repeatable)");
  add_format(group);

  auto *marks = app.add_subcommand("marks", "table of marks as CSV");
  add_group(marks);

  auto *mul_cmd = app.add_subcommand("mul", "product of two Burnside ring elements");
  add_group(mul_cmd);
  mul_cmd->add_option("-a", cfg.lhs, "left factor, e.g. \"2*[G/e] + [G/G]\"")->required();
  mul_cmd->add_option("-b", cfg.rhs, "right factor")->required();
  add_format(mul_cmd);

  auto *degree = app.add_subcommand("degree", "equivariant degree of a polystandard map");
  add_group(degree);
  degree->add_option("-r,--rep", cfg.rep_paths, "representation descriptor")->required();
  degree->add_option("-m,--map", cfg.map_paths, "map descriptor")->required();
  add_format(degree);

  auto *product = app.add_subcommand("product", "check deg(f x f') = deg f * deg f'");
  add_group(product);
  product->add_option("-r,--rep", cfg.rep_paths, "representations of f and f' (give twice)");
  product->add_option("-m,--map", cfg.map_paths, "maps f and f' (give twice)");
  product->add_option("--rep1", cfg.rep1, "representation of f");
  product->add_option("--rep2", cfg.rep2, "representation of f'");
  product->add_option("--map1", cfg.map1, "map f");
  product->add_option("--map2", cfg.map2, "map f'");
  add_format(product);

  auto *realize = app.add_subcommand("realize", "polystandard map with a prescribed degree");
  add_group(realize);
  realize->add_option("-r,--rep", cfg.rep_paths, "representation descriptor")->required();
  realize->add_option("-e,--element", cfg.element, "target Burnside element")->required();
  realize->add_option("-o,--out", cfg.output_path, "output map descriptor (default stdout)");

  auto *check = app.add_subcommand("check", "run the invariant suite on a group and representations");
  add_group(check);
  check->add_option("-r,--rep", cfg.rep_paths, "representation descriptor (repeatable)");
  check->add_option("--seed", cfg.seed, "seed for randomized checks");

  for (auto *sub : {group, marks, mul_cmd, degree, product, realize, check})
    sub->add_flag("-v,--verbose", cfg.verbosity, "more output");

  rewrite_numbered_flags(args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    auto ring = load_ring(cfg.group_path);
    std::vector<std::shared_ptr<Representation const>> reps;

    if (*group) {
      for (auto const &p : cfg.rep_paths)
        reps.push_back(load_rep(ring, p));
      print_group(*ring, reps, cfg, out);
      return kOk;
    }

    if (*marks) {
      out << io::marks_csv(*ring);
      return kOk;
    }

    if (*mul_cmd) {
      auto product_value = mul(ring->parse(cfg.lhs), ring->parse(cfg.rhs));
      if (cfg.format == "json") {
        Json doc = io::element_to_json(product_value);
        doc["text"] = product_value.to_string();
        out << doc.dump(2) << "\n";
      } else {
        out << product_value.to_string() << "\n";
      }
      return kOk;
    }

    if (*degree) {
      if (cfg.rep_paths.size() != 1 || cfg.map_paths.size() != 1)
        throw Error(ErrorKind::InvalidInput, "degree takes exactly one -r and one -m");
      auto rep = load_rep(ring, cfg.rep_paths[0]);
      auto f = io::map_from_json(io::read_json_file(cfg.map_paths[0]), rep);
      print_degree(deg_polystandard(f), cfg, out);
      return kOk;
    }

    if (*product) {
      std::vector<std::string> rep_files = cfg.rep_paths, map_files = cfg.map_paths;
      if (!cfg.rep1.empty() || !cfg.rep2.empty())
        rep_files = {cfg.rep1, cfg.rep2};
      if (!cfg.map1.empty() || !cfg.map2.empty())
        map_files = {cfg.map1, cfg.map2};
      if (rep_files.size() == 1)
        rep_files.push_back(rep_files.front());
      if (rep_files.size() != 2 || map_files.size() != 2 ||
          std::any_of(rep_files.begin(), rep_files.end(), [](auto const &s) { return s.empty(); }) ||
          std::any_of(map_files.begin(), map_files.end(), [](auto const &s) { return s.empty(); }))
        throw Error(ErrorKind::InvalidInput, "product needs two representations and two maps");

      auto V = load_rep(ring, rep_files[0]);
      auto W = rep_files[1] == rep_files[0] ? V : load_rep(ring, rep_files[1]);
      auto f = io::map_from_json(io::read_json_file(map_files[0]), V);
      auto g = io::map_from_json(io::read_json_file(map_files[1]), W);
      auto report = verify_product(f, g);
      print_product(report, cfg, out);
      return report.equal && report.per_orbit_ok ? kOk : kInternal;
    }

    if (*realize) {
      if (cfg.rep_paths.size() != 1)
        throw Error(ErrorKind::InvalidInput, "realize takes exactly one -r");
      auto rep = load_rep(ring, cfg.rep_paths[0]);
      auto map = realize_element({ring->parse(cfg.element), rep});
      std::string const text = io::map_to_json(map, cfg.rep_paths[0]).dump(2) + "\n";
      if (cfg.output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(cfg.output_path);
        if (!file)
          throw Error(ErrorKind::InvalidInput, "cannot write " + cfg.output_path);
        file << text;
      }
      return kOk;
    }

    if (*check) {
      for (auto const &p : cfg.rep_paths)
        reps.push_back(load_rep(ring, p));
      return run_check(*ring, reps, cfg, out);
    }
  } catch (Error const &e) {
    Json doc{{"error", std::string(kind_name(e.kind()))}, {"reason", e.detail()}};
    err << doc.dump() << "\n";
    return exit_code_for(e.kind());
  } catch (std::exception const &e) {
    err << Json{{"error", "InternalError"}, {"reason", e.what()}}.dump() << "\n";
    return kInternal;
  }
  return kInputError;
}

} // namespace burneq::cli
