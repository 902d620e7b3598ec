#pragma once

#include <optional>
#include <utility>

#include "json.hpp"
#include "lwbp/combing.hpp"
#include "lwbp/engine.hpp"
#include "lwbp/formula.hpp"
#include "lwbp/planetree.hpp"

namespace lwbp {

using Json = nlohmann::ordered_json;

using Marks = std::optional<std::pair<std::size_t, std::size_t>>;

/// Canonical tree JSON: vertices in canonical order, edges renumbered by
/// (black, white), each rotation starting at its smallest neighbor.
Json forest_to_json(const PlaneForest& forest, const Marks& marks = std::nullopt);
Json forest_to_json(const TwiceMarkedForest& t);

struct ParsedForest {
  PlaneForest forest;
  Marks marks;
};

/// Accepts any edge ids; they are renumbered in listed order. Throws
/// ValidationError (kind schema for shape problems) or ParseError.
ParsedForest forest_from_json(const Json& j);

Json region_to_json(const Permutation& p);

struct ParsedRegion {
  std::vector<VerticalRect> columns;
  std::vector<HorizontalRect> rects;
};

ParsedRegion region_from_json(const Json& j);

Json class_to_json(const Permutation& p, const PermClass& c);
Json count_to_json(const CountReport& r, const std::vector<PartitionTerm>& terms, const FullPassport& fp);
Json catalog_to_json(const TreeCatalog& c);
Json verify_to_json(const VerifyReport& r);
Json table_to_json(const TreeTable& t);

}  // namespace lwbp
