#pragma once

// Finite semantics for "the family {phi(x, b_i) : i in F} is consistent".
//
// Indices are positions 0..size()-1 with a text label each (compact node,
// "i,j" grid point, or vertex id). A SetSystem answers consistency by
// intersecting solution sets; an oracle answers it directly.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "comblab/bitset.hpp"

namespace comblab {

struct SetSystem {
  std::vector<std::string> universe;
  std::vector<std::string> labels;
  /// sets[i] ⊆ universe is the solution set of index i.
  std::vector<DynamicBitset> sets;

  /// Empty sets for every label over the given universe.
  static SetSystem empty(std::vector<std::string> universe, std::vector<std::string> labels);
  std::size_t add_atom(std::string name);
};

class ConsistencyInterface {
 public:
  using Oracle = std::function<bool(std::span<const std::size_t>)>;

  static ConsistencyInterface from_sets(SetSystem sets);
  /// `monotone` promises that subfamilies of consistent families are consistent.
  static ConsistencyInterface from_oracle(std::vector<std::string> labels, Oracle oracle, bool monotone);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  bool monotone() const noexcept { return monotone_; }
  /// Null unless backed by a SetSystem.
  const SetSystem* set_system() const noexcept { return sets_.get(); }

  /// Empty family: true. Throws ArgumentError for an unknown index.
  bool consistent(std::span<const std::size_t> family) const;

  /// New interface with index t answering as index `source[t]` of this one.
  ConsistencyInterface pullback(std::span<const std::size_t> source, std::vector<std::string> labels) const;

  /// Incremental consistency of a growing and shrinking family (a stack).
  class Cursor {
   public:
    explicit Cursor(const ConsistencyInterface& ci);
    void push(std::size_t index);
    void pop();
    bool consistent() const;
    std::span<const std::size_t> family() const noexcept { return family_; }

   private:
    const ConsistencyInterface* ci_;
    std::vector<std::size_t> family_;
    /// survivors_[i]: atoms common to the first i+1 sets (SetSystem case).
    std::vector<std::vector<std::uint32_t>> survivors_;
  };

  Cursor cursor() const { return Cursor(*this); }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const SetSystem> sets_;
  Oracle oracle_;
  bool monotone_ = true;
};

/// Every k-element subfamily of `family` is inconsistent (vacuous when
/// |family| < k). Throws ArgumentError for k < 2.
bool k_inconsistent(const ConsistencyInterface& ci, std::span<const std::size_t> family, std::size_t k);

enum class ViolationKind {
  /// A family required to be consistent is not.
  Consistency,
  /// A family required to be (k-)inconsistent has a consistent k-subfamily.
  Inconsistency,
};

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;
  nlohmann::json certificate;
};

struct Report {
  bool ok = true;
  std::size_t cap = 0;
  std::vector<Violation> violations;
  bool truncated = false;
};

struct CheckOptions {
  /// Largest family examined by capped clauses; unset picks the checker's default.
  std::optional<std::size_t> cap;
  std::size_t max_violations = 10;

  /// Cap large enough that no clause is truncated.
  static CheckOptions exhaustive() { return CheckOptions{std::size_t(-1), 10}; }
};

/// Accumulates violations up to the configured maximum; `add` returns false
/// once the report is full and the caller should stop.
class ReportBuilder {
 public:
  ReportBuilder(std::size_t cap, std::size_t max_violations);
  bool add(ViolationKind kind, std::vector<std::size_t> indices, nlohmann::json certificate);
  bool full() const noexcept { return full_; }
  Report finish() &&;

 private:
  Report report_;
  std::size_t max_violations_;
  bool full_ = false;
};

nlohmann::json to_json(const Report& r, const std::vector<std::string>& labels);
nlohmann::json to_json(const SetSystem& s);
/// Parses {"universe":[...], "family":[{"index":..., "set":[...]}]}; labels in file order.
SetSystem set_system_from_json(const nlohmann::json& j);
/// Reorders a parsed system so that labels match `expected` exactly; throws
/// ArgumentError naming a missing or unknown index.
SetSystem align_labels(const SetSystem& s, const std::vector<std::string>& expected);

}  // namespace comblab
