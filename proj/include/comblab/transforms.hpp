#pragma once

// Index maps between configurations and the pullbacks they induce:
// strongification (2^2)^d -> (2^2)^{2d}, prefix-respecting truncation maps,
// the grid embedding (2^2)^d -> [0,4^d)^2, and infinitesimal scaling.

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "comblab/consistency.hpp"
#include "comblab/grid.hpp"
#include "comblab/node.hpp"

namespace comblab {

struct IndexMap {
  /// Level2d: strongification target. Level: any level. Grid: the square [0,4^d)^2.
  enum class Codomain { Level2d, Level, Grid };

  std::size_t depth = 0;
  Codomain codomain = Codomain::Level;
  /// Depth of the target nodes (Level2d, Level).
  std::size_t target_depth = 0;
  /// Indexed by rank of the source node; one of the two is filled.
  std::vector<Node> nodes;
  std::vector<GridPoint> points;
};

/// f(sigma)(2t) = (first(sigma_t), 0), f(sigma)(2t+1) = sigma_t.
Node strongify(const Node& sigma);
IndexMap strongify_index(std::size_t depth);

/// Base offsets of the grid embedding for the outermost letter, W = 4^{d-1}.
GridPoint grid_base(Letter a, std::int64_t w);
GridPoint grid_embed(const Node& sigma);
IndexMap grid_embed_index(std::size_t depth);

nlohmann::json to_json(const IndexMap& f);
/// Level and Level2d maps only; must be total on the source level.
IndexMap index_map_from_json(const nlohmann::json& j);

/// b'_sigma = b_{f(sigma)} for a weave family over level 2d.
ConsistencyInterface strongify_weave(const ConsistencyInterface& ci, std::size_t depth);

/// b'_tau = b_{f(tau)} where f maps level d0 into level d with tau a prefix of
/// f(tau). Throws ArgumentError naming the first tau violating the prefix
/// condition, or when ci is not indexed by level d.
ConsistencyInterface pullback(const ConsistencyInterface& ci, const IndexMap& f);

/// Pullback of a family over the 4^d square along grid_embed_index(d).
ConsistencyInterface grid_to_weave(const ConsistencyInterface& ci, std::size_t depth);

/// (i,j) -> (i - i*eps, j - j*eps).
EpsPoint epsilon_scale(const GridPoint& p);

struct ScaledGrid {
  /// Indexed like the source square.
  std::vector<EpsPoint> points;
  /// Same solution sets as the source, labelled by the scaled points.
  ConsistencyInterface ci;
};

ScaledGrid epsilon_scale(const ConsistencyInterface& ci, std::size_t side);

nlohmann::json to_json(const EpsCoord& c);
nlohmann::json to_json(const EpsPoint& p);

}  // namespace comblab
