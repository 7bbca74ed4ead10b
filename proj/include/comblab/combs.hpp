#pragma once

// Split relations between node sets and recognition of finite combs.
//
// Three classes of finite subsets of (2^2)^d are built inductively from
// singletons by joining two combs A, B with |A| <= n:
//   up-n-combs          A narrowly below B         (letters (i,0) / (i,1))
//   right-n-combs       A narrowly left of B       (letters (0,j) / (1,j))
//   wide right-n-combs  A widely left of B         (first coordinate 0 / 1)
// In every build A ∪ B splits at its meet, so recognition recurses on the
// letter groups at the meet position instead of searching build trees.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "comblab/enumerate.hpp"
#include "comblab/errors.hpp"
#include "comblab/node.hpp"

namespace comblab {

/// Size bound n of a comb class: a natural number or omega (no bound).
class SizeBound {
 public:
  static constexpr SizeBound finite(std::size_t n) { return SizeBound(n, false); }
  static constexpr SizeBound omega() { return SizeBound(0, true); }

  constexpr bool is_omega() const noexcept { return omega_; }
  /// Only meaningful when !is_omega().
  constexpr std::size_t value() const noexcept { return value_; }
  constexpr bool admits(std::size_t size) const noexcept { return omega_ || size <= value_; }

  /// "omega" or the decimal value.
  std::string to_string() const;
  /// Accepts "omega", "w", "inf" or a decimal number.
  static SizeBound parse(std::string_view text);

  friend constexpr bool operator==(SizeBound, SizeBound) = default;

 private:
  constexpr SizeBound(std::size_t v, bool omega) : value_(v), omega_(omega) {}
  std::size_t value_;
  bool omega_;
};

enum class CombKind { Up, Right, WideRight };

/// How the parts of a wide right comb are constrained. Literal: both parts
/// must be (narrow) right-n-combs. Recursive: both parts are themselves wide
/// right-n-combs.
enum class WideReading { Recursive, Literal };

struct CombClass {
  CombKind kind = CombKind::Up;
  SizeBound bound = SizeBound::omega();
  WideReading reading = WideReading::Recursive;

  static CombClass up(SizeBound n) { return {CombKind::Up, n, WideReading::Recursive}; }
  static CombClass right(SizeBound n) { return {CombKind::Right, n, WideReading::Recursive}; }
  static CombClass wide_right(SizeBound n, WideReading r = WideReading::Recursive) {
    return {CombKind::WideRight, n, r};
  }

  /// The class both halves of a split must belong to.
  CombClass part_class() const;
  std::string to_string() const;

  friend bool operator==(const CombClass&, const CombClass&) = default;
};

enum class SplitKind { NarrowBelow, NarrowLeft, WideLeft };

struct SplitWitness {
  Node tau;
  SplitKind kind = SplitKind::WideLeft;
  /// i for NarrowBelow(i), j for NarrowLeft(j); 0 for WideLeft.
  std::uint8_t bit = 0;

  friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

std::string to_string(const SplitWitness& w);

/// Every way in which A lies narrowly below, narrowly left of, or widely
/// left of B. Empty when none applies. NarrowLeft and WideLeft can hold
/// together; NarrowBelow excludes both.
/// Throws ArgumentError when A or B is empty or they intersect.
std::vector<SplitWitness> split_relation(std::span<const Node> a, std::span<const Node> b);

enum class PairVerdict { UpOne, WideRightOne };

std::string to_string(PairVerdict v);

/// Exactly one of: {s,t} is an up-1-comb, or a wide right-1-comb.
/// Throws ArgumentError for equal nodes or nodes of different depth.
PairVerdict classify_pair(const Node& s, const Node& t);

/// Proof tree for comb membership. Leaves hold one node; an internal
/// vertex holds its split and the two parts (parts[0] = A, parts[1] = B).
struct CombCertificate {
  std::vector<Node> members;
  std::optional<SplitWitness> split;
  std::vector<CombCertificate> parts;

  bool is_leaf() const noexcept { return parts.empty(); }
};

/// Certificate iff `s` is in class `c`. `s` is treated as a set.
/// Throws ArgumentError for an empty set or mixed depths.
std::optional<CombCertificate> is_comb(std::span<const Node> s, const CombClass& c);

/// Re-checks a certificate bottom-up against the inductive definition.
bool verify_certificate(const CombCertificate& cert, const CombClass& c);

nlohmann::json certificate_to_json(const CombCertificate& cert);

/// Membership test on strictly increasing ranks of equal-depth nodes. Same
/// decision as is_comb, without certificates or allocation; used by the
/// enumerators.
bool accepts_ranks(std::span<const std::uint64_t> sorted_ranks, const CombClass& c);

/// Largest depth the comb enumerators accept.
inline constexpr std::size_t kCombEnumerationDepthLimit = 6;

/// Single-owner iterator over the combs of class `c` inside enumerate_level(d)
/// with at most `max_size` elements. Sets come out as increasing node lists,
/// in lexicographic order of their rank sequences.
class CombEnumerator {
 public:
  CombEnumerator(std::size_t depth, CombClass c, std::size_t max_size);

  std::optional<std::vector<Node>> next();

 private:
  bool try_push_from(std::uint64_t first_candidate);

  std::size_t depth_;
  CombClass class_;
  std::size_t max_size_;
  std::uint64_t level_size_;
  std::vector<std::uint64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<std::vector<Node>> enumerate_combs(std::size_t depth, const CombClass& c, std::size_t max_size);

/// Visits every comb of class `c` at depth d with at most `max_size` elements
/// as a list of ranks; `visit` returns a Walk to steer the search.
template <class Visit>
void for_each_comb(std::size_t depth, const CombClass& c, std::size_t max_size, Visit&& visit);

/// Right-n-combs of binary strings: A under sigma^0, B under sigma^1, |A| <= n,
/// sigma the meet of A ∪ B. Throws ArgumentError for an empty set or
/// characters other than '0'/'1'.
bool is_binary_right_comb(std::span<const std::string> s, SizeBound n);

template <class Visit>
void for_each_comb(std::size_t depth, const CombClass& c, std::size_t max_size, Visit&& visit) {
  if (depth > kCombEnumerationDepthLimit) {
    throw ResourceError("comb enumeration limited to depth " + std::to_string(kCombEnumerationDepthLimit));
  }
  const std::size_t n = level_size(depth);
  std::vector<std::uint64_t> scratch;
  scratch.reserve(max_size);
  for_each_hereditary_subset(
      n, max_size,
      [&](const std::vector<std::size_t>& cur, std::size_t x) {
        if (cur.empty()) return true;
        scratch.assign(cur.begin(), cur.end());
        scratch.push_back(x);
        return accepts_ranks(scratch, c);
      },
      visit);
}

}  // namespace comblab
