#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace comblab {

/// Finite simple graph on vertices [0, n), stored as an adjacency matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}
  /// Throws ArgumentError for loops or endpoints outside [0, n).
  Graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t order() const noexcept { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_[u * n_ + v] != 0; }
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::size_t edge_count() const noexcept;
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// True iff no two members are adjacent.
  bool independent(std::span<const std::size_t> vertices) const noexcept;
  Graph complement() const;
  Graph induced(std::span<const std::size_t> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

nlohmann::json to_json(const Graph& g);
/// {"n":..., "edges":[[u,v],...]}
Graph graph_from_json(const nlohmann::json& j);
std::string to_dot(const Graph& g);

}  // namespace comblab
