#pragma once

// Points of Z^2 under the product order, and the symbolic infinitesimal
// coordinates a - b*eps used by the grid scaling transform.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace comblab {

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// The value a - b*eps for a positive infinitesimal eps.
struct EpsCoord {
  std::int64_t a = 0;
  std::uint64_t b = 0;

  friend constexpr bool operator==(const EpsCoord&, const EpsCoord&) = default;
  friend constexpr std::strong_ordering operator<=>(const EpsCoord& l, const EpsCoord& r) {
    if (auto c = l.a <=> r.a; c != 0) return c;
    return r.b <=> l.b;
  }
};

struct EpsPoint {
  EpsCoord x;
  EpsCoord y;

  friend constexpr bool operator==(const EpsPoint&, const EpsPoint&) = default;
};

/// p <= q in both coordinates.
template <class P>
constexpr bool product_leq(const P& p, const P& q) {
  return p.x <= q.x && p.y <= q.y;
}

/// p < q in both coordinates.
template <class P>
constexpr bool strictly_below(const P& p, const P& q) {
  return p.x < q.x && p.y < q.y;
}

template <class P>
constexpr bool comparable(const P& p, const P& q) {
  return product_leq(p, q) || product_leq(q, p);
}

template <class P>
constexpr bool strictly_comparable(const P& p, const P& q) {
  return strictly_below(p, q) || strictly_below(q, p);
}

namespace detail {
template <class P, class Rel>
bool pairwise(std::span<const P> pts, Rel rel) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!rel(pts[i], pts[j])) return false;
    }
  }
  return true;
}
}  // namespace detail

/// Pairwise strictly increasing in both coordinates.
template <class P>
bool is_strict_chain(std::span<const P> pts) {
  return detail::pairwise(pts, [](const P& p, const P& q) { return strictly_comparable(p, q); });
}

/// Pairwise comparable in the product order (distinct points).
template <class P>
bool is_chain(std::span<const P> pts) {
  return detail::pairwise(pts, [](const P& p, const P& q) { return !(p == q) && comparable(p, q); });
}

/// Pairwise incomparable in the product order.
template <class P>
bool is_antichain(std::span<const P> pts) {
  return detail::pairwise(pts, [](const P& p, const P& q) { return !comparable(p, q); });
}

/// "i,j"
std::string grid_label(const GridPoint& p);
/// Inverse of grid_label; throws ParseError.
GridPoint parse_grid_label(std::string_view text);

}  // namespace comblab
