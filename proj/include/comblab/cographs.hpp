#pragma once

// Cographs: the closure of K1 under disjoint union and join, their cotrees,
// recognition, the comb graph G_d, and the bridges between graph patterns
// and weaves.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "comblab/consistency.hpp"
#include "comblab/errors.hpp"
#include "comblab/graph.hpp"
#include "comblab/node.hpp"

namespace comblab {

enum class CographOp { Union, Join };

struct Cotree {
  enum class Kind { Leaf, Union, Join };

  Kind kind = Kind::Leaf;
  std::size_t vertex = 0;
  std::vector<Cotree> children;

  static Cotree leaf(std::size_t v) { return Cotree{Kind::Leaf, v, {}}; }
  static Cotree make(CographOp op, std::vector<Cotree> children);

  friend bool operator==(const Cotree&, const Cotree&) = default;
};

/// G1 is shifted by |G0|. Join adds every cross edge.
Graph combine(CographOp op, const Graph& g0, const Graph& g1);

/// Leaf vertices in left-to-right order.
std::vector<std::size_t> leaves(const Cotree& t);

/// Graph on [0, n) where n = number of leaves; u ~ v iff their lowest common
/// ancestor is a Join. Throws ArgumentError unless the leaves are exactly
/// 0..n-1 and every internal node has at least two children.
Graph eval_cotree(const Cotree& t);

/// Merges children carrying their parent's label, so labels alternate.
Cotree normalize(const Cotree& t);

/// First induced path a-b-c-d (edges ab, bc, cd only) in lexicographic order
/// of (a, b, c, d).
std::optional<std::array<std::size_t, 4>> find_p4(const Graph& g);

struct P4Certificate {
  std::array<std::size_t, 4> path;
};

/// Alternating cotree with eval_cotree(result) == g, or an induced P4.
std::variant<Cotree, P4Certificate> cotree_of(const Graph& g);

inline constexpr std::size_t kCombGraphDepthLimit = 4;

struct CombGraph {
  /// Vertex r is the node of rank r; u ~ v iff {u, v} is an up-1-comb.
  Graph graph;
  /// T_0 = leaf, T_{d+1} = (T_d join T_d) union (T_d join T_d), branching on
  /// the first letter.
  Cotree cotree;
};

/// Throws ResourceError for d > kCombGraphDepthLimit.
CombGraph comb_graph(std::size_t depth);

struct CographEmbedding {
  std::size_t depth = 0;
  /// Indexed by vertex.
  std::vector<Node> map;
};

/// Injective f with classify_pair(f(u), f(v)) == UpOne iff u ~ v. Children
/// are folded left; the parts are padded with (0,0) at the end to equal depth
/// and then prefixed with (0,0) / (1,0) for a union, (0,0) / (0,1) for a join.
CographEmbedding embed_cograph(const Cotree& t);

/// Right-pads every image with (0,0) to the given depth; throws ArgumentError
/// when the embedding is deeper.
CographEmbedding pad_embedding(CographEmbedding e, std::size_t depth);

/// Alternating random cotree on leaves 0..n-1; deterministic in `seed`.
Cotree random_cotree(std::size_t n_leaves, std::uint64_t seed);

nlohmann::json to_json(const Cotree& t);
Cotree cotree_from_json(const nlohmann::json& j);
std::string to_dot(const Cotree& t);

/// A bridge whose input failed its pattern check; carries the report.
class PatternViolation : public ArgumentError {
 public:
  PatternViolation(const std::string& what, Report report, std::vector<std::string> labels)
      : ArgumentError(what), report_(std::move(report)), labels_(std::move(labels)) {}

  const Report& report() const noexcept { return report_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  Report report_;
  std::vector<std::string> labels_;
};

/// Reindexes a graph pattern for comb_graph(d) by level d. Throws
/// PatternViolation when the input fails check_graph_pattern.
ConsistencyInterface graph_to_weave_oracle(const ConsistencyInterface& pattern, std::size_t depth,
                                           const CheckOptions& opts = {});

/// b'_v = b_{f(v)} with f = embed_cograph(t) padded to depth d. Throws
/// ArgumentError when t does not embed at depth d, PatternViolation when ci
/// is not a strong (2,1,omega)-weave.
ConsistencyInterface weave_to_graph_oracle(const ConsistencyInterface& ci, std::size_t depth, const Cotree& t,
                                           const CheckOptions& opts = {});

}  // namespace comblab
