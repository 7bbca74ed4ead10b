#pragma once

// Machine checks of the combinatorial lemmas at desk scale. Each check
// compares library results against the brute-force oracles, or against the
// lemma's statement, and reports the first discrepancy.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace comblab::verify {

struct Outcome {
  std::string name;
  bool ok = true;
  /// Counts on success, the first discrepancy on failure.
  std::string detail;
  double seconds = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// All unordered pairs at every depth <= max_depth: exactly one of Up(1) / WideRight(1)
/// accepts, classify_pair names it, and the build-tree oracle agrees.
Outcome pair_dichotomy(std::size_t max_depth);

/// is_comb(S, WideRight(omega)) iff S has no UpOne pair: every subset at
/// `exhaustive_depth`, plus `samples` random sets of size <= 8 at
/// `sampled_depth` (skipped when samples == 0).
Outcome wide_characterization(std::size_t exhaustive_depth, std::size_t sampled_depth, std::size_t samples,
                              std::uint64_t seed);

/// is_comb, accepts_ranks, verify_certificate and the build-tree oracle agree
/// on every subset of size <= max_size, for Up / Right / WideRight (both
/// readings) with n in {1, 2, omega}.
Outcome recognition_vs_build_trees(std::size_t depth, std::size_t max_size);

/// Accepted sets stay accepted after removing any element; pairs inside Up
/// combs are UpOne and pairs inside (wide) right combs are WideRightOne.
Outcome subset_closure(std::size_t depth);

/// Pair images keep NarrowBelow and turn NarrowLeft into WideLeft (all depths
/// <= pair_depth); Up(m) images stay Up(m) and Right(n) images become
/// WideRight(n) (subsets of size <= comb_size at depths <= comb_depth); the
/// strongified (2,1,1) witness of depth 2 is a strong weave at depth 1.
Outcome strongification(std::size_t pair_depth, std::size_t comb_depth, std::size_t comb_size);

/// UpOne iff images incomparable, WideRightOne iff strictly comparable,
/// injective, image inside [0,4^d)^2; every depth <= max_depth.
Outcome grid_embedding(std::size_t max_depth);

struct WitnessScale {
  std::size_t weave_depth = 3;
  std::size_t grid_side = 5;
  std::size_t graphs = 100;
  std::size_t graph_order = 12;
  std::uint64_t seed = kDefaultSeed;
};

/// Every witness passes its own checker (and the uncapped oracle where it
/// applies); genuine_k witnesses are not (k-1)-inconsistent.
Outcome witness_validity(const WitnessScale& scale);

/// Deterministic single-atom mutations of materialized witnesses: each one
/// flips the checker verdict and the first violation is a valid certificate.
Outcome mutation_suite();

/// realizable agrees with the 4-atom assignment search on random templates.
Outcome realizability(std::size_t templates, std::uint64_t seed);

struct CographScale {
  std::size_t exhaustive_order = 7;
  std::size_t random_graphs = 500;
  std::size_t random_order = 16;
  std::size_t comb_depth = 4;
  std::size_t cotrees = 100;
  std::size_t max_leaves = 32;
  std::uint64_t seed = kDefaultSeed;
};

/// Recognition iff P4-free, exact round trips, comb-graph edge counts and
/// cotree, exact cograph embeddings.
Outcome cograph_stack(const CographScale& scale);

/// graph_to_weave and weave_to_graph at depths <= max_depth, and
/// grid_to_weave at depth 1.
Outcome bridges(std::size_t max_depth);

/// p side: all pairs inconsistent, singletons consistent; q side: the full
/// family consistent; 2 <= len <= max_len.
Outcome triangle_free(std::size_t max_len);

/// Every subset of the square for sides <= max_side; tie-free chains become
/// strict, chains with a tied coordinate stay non-strict.
Outcome epsilon_scaling(std::size_t max_side);

/// The binary-string requirement examples.
Outcome genericity();

/// The whole suite scaled to `max_depth`.
std::vector<Outcome> verify_paper(std::size_t max_depth, std::uint64_t seed);

}  // namespace comblab::verify
