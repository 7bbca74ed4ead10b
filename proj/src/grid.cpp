#include "comblab/grid.hpp"

#include <charconv>

#include "comblab/errors.hpp"

namespace comblab {

std::string grid_label(const GridPoint& p) { return std::to_string(p.x) + "," + std::to_string(p.y); }

GridPoint parse_grid_label(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("grid point needs the form i,j", text.size());
  GridPoint p;
  auto parse = [&](std::string_view part, std::size_t offset, std::int64_t& out) {
    const char* first = part.data();
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (part.empty() || ec != std::errc() || ptr != last) {
      throw ParseError("bad grid coordinate '" + std::string(part) + "'", offset + static_cast<std::size_t>(ptr - first));
    }
  };
  parse(text.substr(0, comma), 0, p.x);
  parse(text.substr(comma + 1), comma + 1, p.y);
  return p;
}

}  // namespace comblab
