#pragma once

#include <cstddef>
#include <vector>

namespace comblab {

enum class Walk { Descend, Prune, Stop };

namespace detail {

template <class Admits, class Visit>
bool hereditary_step(std::vector<std::size_t>& current, std::size_t n, std::size_t max_size,
                     Admits& admits, Visit& visit) {
  const std::size_t start = current.empty() ? 0 : current.back() + 1;
  for (std::size_t x = start; x < n; ++x) {
    if (!admits(static_cast<const std::vector<std::size_t>&>(current), x)) continue;
    current.push_back(x);
    const Walk w = visit(static_cast<const std::vector<std::size_t>&>(current));
    if (w == Walk::Stop) return false;
    if (w == Walk::Descend && current.size() < max_size &&
        !hereditary_step(current, n, max_size, admits, visit)) {
      return false;
    }
    current.pop_back();
  }
  return true;
}

}  // namespace detail

/// Depth-first walk over the nonempty subsets of [0, n) with at most
/// `max_size` elements, each visited as an increasing index list.
///
/// `admits(current, x)` decides whether current ∪ {x} (x > current.back())
/// belongs to the family. Every admitted set is passed to `visit`, whose
/// return value controls whether its supersets are explored. The family must
/// be closed under taking subsets, otherwise members whose sorted prefixes
/// are rejected are never reached. Order: lexicographic on the index lists.
template <class Admits, class Visit>
void for_each_hereditary_subset(std::size_t n, std::size_t max_size, Admits&& admits, Visit&& visit) {
  if (max_size == 0) return;
  std::vector<std::size_t> current;
  current.reserve(max_size);
  detail::hereditary_step(current, n, max_size, admits, visit);
}

}  // namespace comblab
