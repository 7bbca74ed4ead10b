#pragma once

// Finite sequences over the four-letter alphabet {0,1}^2.
//
// A Node of depth d is an element of (2^2)^d. Letters are stored by their
// code 2*first + second, so the compact text form of a node is simply its
// list of codes ("0132"), with "-" standing for the empty node.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace comblab {

struct Letter {
  std::uint8_t first = 0;
  std::uint8_t second = 0;

  constexpr std::uint8_t code() const noexcept {
    return static_cast<std::uint8_t>(2 * first + second);
  }
  static constexpr Letter from_code(std::uint8_t c) noexcept {
    return Letter{static_cast<std::uint8_t>(c >> 1), static_cast<std::uint8_t>(c & 1)};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
};

class Node {
 public:
  Node() = default;
  explicit Node(std::span<const Letter> letters);

  /// Builds a node from letter codes; every code must be < 4.
  static Node from_codes(std::vector<std::uint8_t> codes);
  /// The depth-`depth` node whose letter codes are the base-4 digits of `rank`.
  static Node from_rank(std::uint64_t rank, std::size_t depth);

  std::size_t depth() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }

  Letter letter_at(std::size_t i) const { return Letter::from_code(codes_.at(i)); }
  std::uint8_t code_at(std::size_t i) const { return codes_[i]; }
  std::span<const std::uint8_t> codes() const noexcept { return codes_; }

  /// Position in enumerate_level(depth()); requires depth() <= 32.
  std::uint64_t rank() const;

  Node prefix(std::size_t length) const;
  /// True iff *this is an initial segment of `other` (reflexive).
  bool is_prefix_of(const Node& other) const noexcept;

  /// Lexicographic on letter codes; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Node&, const Node&) = default;
  friend bool operator==(const Node&, const Node&) = default;

 private:
  std::vector<std::uint8_t> codes_;
};

/// sigma followed by `a`.
Node extend(const Node& sigma, Letter a);

/// Longest common prefix.
Node meet(const Node& a, const Node& b);
std::size_t common_prefix_length(const Node& a, const Node& b) noexcept;
/// Longest common prefix of a nonempty set of nodes.
std::size_t meet_length(std::span<const Node> nodes);

/// Largest depth accepted by enumerate_level: COMBLAB_MAX_DEPTH if set, else 12.
std::size_t depth_bound();

/// All 4^d nodes of depth d in increasing rank order.
std::vector<Node> enumerate_level(std::size_t d);

/// Number of nodes at depth d (4^d); throws ResourceError past depth_bound().
std::size_t level_size(std::size_t d);

std::string encode(const Node& node);
/// Inverse of encode; throws ParseError naming the first bad character.
Node decode(std::string_view text);

void to_json(nlohmann::json& j, const Node& node);
void from_json(const nlohmann::json& j, Node& node);

}  // namespace comblab
