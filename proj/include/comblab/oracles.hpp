#pragma once

// Brute-force reference implementations. Each one follows a definition
// directly (search over build trees, all subsets, all assignments) and shares
// no decision logic with the library code it is compared against.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "comblab/combs.hpp"
#include "comblab/consistency.hpp"
#include "comblab/graph.hpp"
#include "comblab/patterns.hpp"

namespace comblab::oracle {

/// Every element of `a` extends tau^(i,0) and every element of `b`
/// extends tau^(i,1), for some tau and i; checked over all prefixes tau.
bool narrowly_below(std::span<const Node> a, std::span<const Node> b);
/// tau^(0,j) / tau^(1,j).
bool narrowly_left(std::span<const Node> a, std::span<const Node> b);
/// First coordinate 0 / 1 right after a common tau.
bool widely_left(std::span<const Node> a, std::span<const Node> b);

/// Searches all binary build trees: S is in the class iff it is a singleton
/// or splits as A ∪ B (any partition) with the class's relation, |A| <= n,
/// and both parts in the part class. Exponential; meant for |S| <= 8.
bool in_comb_class(std::span<const Node> s, const CombClass& c);

/// Same search for binary strings under the right-n-comb clause.
bool in_binary_right_class(std::span<const std::string> s, SizeBound n);

/// All subsets of the level, filtered by is_comb; no cap. d <= 2.
bool weave_holds(const ConsistencyInterface& ci, const WeaveParams& p);
/// All subsets of the square. s <= 4.
bool grid_holds(const ConsistencyInterface& ci, const GridParams& p);
/// All vertex subsets. n <= 16.
bool graph_pattern_holds(const ConsistencyInterface& ci, const Graph& g);

/// Some assignment of `atoms` atoms to the indices (every atom picks a
/// support set) satisfies the template. Exhaustive over 2^(|indices|*atoms).
bool realizable_with_atoms(const Template& t, std::size_t atoms);

/// Scans ordered 4-tuples in lexicographic order for an induced path.
std::optional<std::array<std::size_t, 4>> induced_p4(const Graph& g);

/// Edges {u,v} with p = num/den each, deterministic in rng.
Graph random_graph(std::size_t n, unsigned num, unsigned den, std::mt19937_64& rng);

/// Up to `max_indices` labels, |must_consist| <= `max_consist`, random k in
/// {2,3}. The atom bound of realizable_with_atoms must be >= max_consist for
/// the comparison with the criterion to be meaningful.
Template random_template(std::mt19937_64& rng, std::size_t max_indices, std::size_t max_consist);

/// Increasing rank sets of `size` distinct nodes at depth d.
std::vector<std::uint64_t> random_rank_set(std::size_t depth, std::size_t size, std::mt19937_64& rng);

}  // namespace comblab::oracle
