#pragma once

// Checkers and canonical witnesses for consistency-inconsistency patterns:
// weaves indexed by (2^2)^d, k-grids indexed by [0,s)^2, and graph patterns.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "comblab/combs.hpp"
#include "comblab/consistency.hpp"
#include "comblab/graph.hpp"
#include "comblab/grid.hpp"

namespace comblab {

struct WeaveParams {
  std::size_t depth = 0;
  std::size_t k = 2;
  SizeBound m = SizeBound::omega();
  SizeBound n = SizeBound::omega();
  bool strong = false;
  WideReading reading = WideReading::Recursive;
};

/// Compact labels of enumerate_level(d), in rank order.
std::vector<std::string> level_labels(std::size_t depth);

/// max(k, 2d, 8)
std::size_t default_weave_cap(std::size_t depth, std::size_t k);

/// A family indexed by all of (2^2)^d is a (k,m,n)-weave when every up-m-comb
/// is k-inconsistent and every right-n-comb (wide right-n-comb when strong)
/// is consistent.
///
/// The inconsistency clause is checked exactly: up-comb classes are closed
/// under subsets, so it suffices that every up-m-comb of size k is
/// inconsistent. The consistency clause visits combs of size <= cap. For
/// monotone interfaces it stops below each inconsistent comb and reports
/// exactly the minimal inconsistent ones.
/// Throws ArgumentError when ci does not have 4^d indices or k < 2.
Report check_weave(const ConsistencyInterface& ci, const WeaveParams& p, const CheckOptions& opts = {});

struct GridParams {
  std::size_t side = 0;
  std::size_t k = 2;
  bool strong = false;
};

/// Labels "i,j" of [0,s)^2; index i*s + j.
std::vector<std::string> grid_labels(std::size_t side);

/// max(k, 2s-1, 8)
std::size_t default_grid_cap(std::size_t side, std::size_t k);

/// Antichains must be k-inconsistent (checked exactly, via antichains of size
/// k); strict chains, or all chains when strong, must be consistent (up to the
/// cap).
Report check_grid(const ConsistencyInterface& ci, const GridParams& p, const CheckOptions& opts = {});

/// n when n <= 16, else 8.
std::size_t default_graph_cap(std::size_t order);

/// For every vertex set V0 up to the cap: consistent(V0) iff V0 is independent.
/// Monotone interfaces get minimal violations: consistent edges, and
/// inconsistent independent sets whose proper subsets are consistent.
Report check_graph_pattern(const ConsistencyInterface& ci, const Graph& g, const CheckOptions& opts = {});

struct Template {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> must_consist;
  std::vector<std::vector<std::size_t>> must_k_inconsist;
  std::size_t k = 2;
};

/// Throws ArgumentError unless every listed index is < labels.size() and k >= 2.
void validate(const Template& t);

/// A set system realizing t, or nullopt when none exists. Realizable exactly
/// when no k-subset of a must_k_inconsist set lies inside a must_consist set;
/// the witness has one atom per distinct nonempty must_consist set.
std::optional<SetSystem> realizable(const Template& t);

nlohmann::json to_json(const Template& t);
Template template_from_json(const nlohmann::json& j);

/// Upper bound on the universe size of materialized witnesses.
inline constexpr std::size_t kWitnessAtomLimit = std::size_t{1} << 22;

/// Universe: the wide right-n-combs of (2^2)^d; b_sigma = combs containing
/// sigma. No up-pair lies in a wide comb, so every up-comb is 2-inconsistent
/// and this is a strong (k,m,n)-weave for every k >= 2 and every m. With
/// `genuine_k`, every subset of size <= k-1 is added as an extra atom: up-combs
/// stay k-inconsistent but are no longer (k-1)-inconsistent.
ConsistencyInterface weave_witness(std::size_t depth, std::size_t k, SizeBound n, bool genuine_k,
                                   WideReading reading = WideReading::Recursive);

/// Universe: maximal strict chains (maximal chains when strong) of [0,s)^2;
/// b_{i,j} = those through (i,j).
ConsistencyInterface grid_witness(std::size_t side, bool strong);

/// Oracle "consistent iff independent". With `materialize`, a SetSystem over
/// the maximal independent sets instead.
ConsistencyInterface graph_witness(const Graph& g, bool materialize);

/// Finite pattern behind the triangle-free random graph example: pairs
/// P_i = (u_i, v_i) with u_i = 2i, v_i = 2i+1. A family of pairs is consistent
/// iff the union of its endpoints is independent (a fresh common neighbour
/// can then be added without a triangle).
struct TriangleFreeDemo {
  /// Edges v_i -- u_j for i < j.
  Graph p_graph;
  /// No edges.
  Graph q_graph;
  ConsistencyInterface p;
  ConsistencyInterface q;
};

/// Throws ArgumentError for len < 2.
TriangleFreeDemo triangle_free_demo(std::size_t len);

}  // namespace comblab
