#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "burneq/burnside.hpp"
#include "burneq/degree.hpp"
#include "burneq/group.hpp"
#include "burneq/representation.hpp"

namespace burneq::io
{

using Json = nlohmann::json;

/// {"points": k, "generators": [[images...], ...]} with 0-based images.
std::vector<Permutation> group_from_json(Json const &doc);
Json group_to_json(FiniteGroup const &G);

/// {"dim": n, "generator_matrices": [[["p/q", ...], ...], ...]}. Entries may
/// also be JSON integers.
std::vector<QMatrix> rep_matrices_from_json(Json const &doc);
Json rep_to_json(Representation const &rep);

/// {"rep": <id>, "pieces": [{"base_point": [...], "epsilon": "p/q",
/// "radius": "p/q", "local": {"type": "linear", "matrix": [[...]]} |
/// {"type": "expr", "exprs": [...]} | {"type": "degree", "d": -2}}]}
PolystandardMap map_from_json(Json const &doc, std::shared_ptr<Representation const> rep);
Json map_to_json(PolystandardMap const &f, Json const &rep_id = 0);

/// {"coeffs": [...]} in canonical class order, integers as JSON numbers when
/// they fit in 64 bits and as decimal strings otherwise.
Json element_to_json(BurnsideElement const &x);
BurnsideElement element_from_json(Json const &doc, std::shared_ptr<BurnsideRing const> ring);

/// CSV with a header row and a header column of class labels.
std::string marks_csv(BurnsideRing const &ring);

Json read_json_file(std::filesystem::path const &path);

} // namespace burneq::io
