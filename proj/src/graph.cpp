#include "comblab/graph.hpp"

#include <sstream>

#include "comblab/errors.hpp"

namespace comblab {

Graph::Graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw ArgumentError("edge endpoint out of range");
  if (u == v) throw ArgumentError("loops are not allowed");
  adj_[u * n_ + v] = 1;
  adj_[v * n_ + u] = 1;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw ArgumentError("edge endpoint out of range");
  adj_[u * n_ + v] = 0;
  adj_[v * n_ + u] = 0;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t c = 0;
  for (auto a : adj_) c += a;
  return c / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::independent(std::span<const std::size_t> vertices) const noexcept {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (u != v && !adjacent(u, v)) g.adj_[u * n_ + v] = 1;
    }
  }
  return g;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && adjacent(vertices[i], vertices[j])) g.adj_[i * g.n_ + j] = 1;
    }
  }
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n")) throw ArgumentError("graph JSON needs \"n\" and \"edges\"");
  Graph g(j.at("n").get<std::size_t>());
  for (const auto& e : j.value("edges", nlohmann::json::array())) {
    if (!e.is_array() || e.size() != 2) throw ArgumentError("graph edge must be a [u,v] pair");
    g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return g;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace comblab
