#pragma once

// Chains through a poset that meet a list of dense requirement sets, built
// one extension at a time with round-robin scheduling.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace comblab {

struct RequirementPoset {
  /// Immediate proper extensions of an element, in a fixed order.
  std::function<std::vector<std::string>(const std::string&)> extensions;
  /// leq(a, b): b extends a (reflexive, transitive).
  std::function<bool(const std::string&, const std::string&)> leq;
};

struct DensePredicate {
  std::string name;
  std::function<bool(const std::string&)> test;
};

struct ChainStep {
  std::string element;
  /// Requirements this element satisfies.
  std::vector<std::size_t> satisfied;
};

/// A requirement had no extension within the search horizon, or the step
/// budget ran out.
class GenericityFailure : public std::runtime_error {
 public:
  GenericityFailure(std::string requirement, std::string stuck, const std::string& what)
      : std::runtime_error(what), requirement_(std::move(requirement)), stuck_(std::move(stuck)) {}

  const std::string& requirement() const noexcept { return requirement_; }
  const std::string& stuck_at() const noexcept { return stuck_; }

 private:
  std::string requirement_;
  std::string stuck_;
};

struct GenericOptions {
  /// Extension calls per breadth-first search.
  std::size_t horizon = 10000;
};

/// Chain start = c_0 < c_1 < ... with at most `steps` extensions. Requirements
/// not yet met are served round-robin; each serve searches breadth-first above
/// the current top for the first element in the requirement.
/// Throws ArgumentError when steps < dense.size(), GenericityFailure when a
/// requirement cannot be met.
std::vector<ChainStep> generic_chain(const RequirementPoset& p, const std::vector<DensePredicate>& dense,
                                     const std::string& start, std::size_t steps, const GenericOptions& opts = {});

/// Finite strings over {0,1} under extension.
RequirementPoset binary_strings();

struct FiniteRequirementTable {
  RequirementPoset poset;
  std::vector<DensePredicate> dense;
  std::string start;
};

/// {"elements":[...], "covers":[[lower, upper], ...],
///  "requirements":[{"name":..., "members":[...]}], "start":...}
/// Throws ArgumentError for unknown elements or a cyclic cover relation.
FiniteRequirementTable requirement_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<ChainStep>& chain, const std::vector<DensePredicate>& dense);

}  // namespace comblab
