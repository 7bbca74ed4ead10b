#include "comblab/node.hpp"

#include <algorithm>
#include <cstdlib>

#include "comblab/errors.hpp"

namespace comblab {

Node::Node(std::span<const Letter> letters) {
  codes_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.first > 1 || l.second > 1) throw ArgumentError("letter coordinates must be bits");
    codes_.push_back(l.code());
  }
}

Node Node::from_codes(std::vector<std::uint8_t> codes) {
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] > 3) throw ArgumentError("letter code out of range at position " + std::to_string(i));
  }
  Node n;
  n.codes_ = std::move(codes);
  return n;
}

Node Node::from_rank(std::uint64_t rank, std::size_t depth) {
  if (depth > 32) throw ArgumentError("rank encoding supports depth <= 32");
  std::vector<std::uint8_t> codes(depth);
  for (std::size_t i = depth; i-- > 0;) {
    codes[i] = static_cast<std::uint8_t>(rank & 3U);
    rank >>= 2;
  }
  if (rank != 0) throw ArgumentError("rank too large for depth " + std::to_string(depth));
  return from_codes(std::move(codes));
}

std::uint64_t Node::rank() const {
  if (depth() > 32) throw ArgumentError("rank encoding supports depth <= 32");
  std::uint64_t r = 0;
  for (auto c : codes_) r = (r << 2) | c;
  return r;
}

Node Node::prefix(std::size_t length) const {
  if (length > depth()) throw ArgumentError("prefix longer than node");
  Node n;
  n.codes_.assign(codes_.begin(), codes_.begin() + static_cast<std::ptrdiff_t>(length));
  return n;
}

bool Node::is_prefix_of(const Node& other) const noexcept {
  return depth() <= other.depth() && std::equal(codes_.begin(), codes_.end(), other.codes_.begin());
}

Node extend(const Node& sigma, Letter a) {
  std::vector<std::uint8_t> codes(sigma.codes().begin(), sigma.codes().end());
  codes.push_back(a.code());
  return Node::from_codes(std::move(codes));
}

std::size_t common_prefix_length(const Node& a, const Node& b) noexcept {
  const auto ca = a.codes();
  const auto cb = b.codes();
  const std::size_t n = std::min(ca.size(), cb.size());
  std::size_t i = 0;
  while (i < n && ca[i] == cb[i]) ++i;
  return i;
}

Node meet(const Node& a, const Node& b) { return a.prefix(common_prefix_length(a, b)); }

std::size_t meet_length(std::span<const Node> nodes) {
  if (nodes.empty()) throw ArgumentError("meet of an empty set");
  std::size_t len = nodes.front().depth();
  for (const auto& n : nodes.subspan(1)) len = std::min(len, common_prefix_length(nodes.front(), n));
  return len;
}

std::size_t depth_bound() {
  if (const char* env = std::getenv("COMBLAB_MAX_DEPTH")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v <= 31) return static_cast<std::size_t>(v);
  }
  return 12;
}

std::size_t level_size(std::size_t d) {
  if (d > depth_bound()) {
    throw ResourceError("depth " + std::to_string(d) + " exceeds the depth bound " +
                        std::to_string(depth_bound()));
  }
  return std::size_t{1} << (2 * d);
}

std::vector<Node> enumerate_level(std::size_t d) {
  const std::size_t count = level_size(d);
  std::vector<Node> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(Node::from_rank(r, d));
  return out;
}

std::string encode(const Node& node) {
  if (node.empty()) return "-";
  std::string s;
  s.reserve(node.depth());
  for (auto c : node.codes()) s.push_back(static_cast<char>('0' + c));
  return s;
}

Node decode(std::string_view text) {
  if (text == "-") return Node{};
  if (text.empty()) throw ParseError("empty node text (use \"-\" for the empty node)", 0);
  std::vector<std::uint8_t> codes;
  codes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '3') throw ParseError(std::string("invalid node character '") + c + "'", i);
    codes.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Node::from_codes(std::move(codes));
}

void to_json(nlohmann::json& j, const Node& node) {
  j = nlohmann::json::array();
  for (auto c : node.codes()) {
    const Letter l = Letter::from_code(c);
    j.push_back({l.first, l.second});
  }
}

void from_json(const nlohmann::json& j, Node& node) {
  if (!j.is_array()) throw ArgumentError("node JSON must be an array of [i,j] pairs");
  std::vector<Letter> letters;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw ArgumentError("node letter must be an [i,j] pair");
    const int a = p[0].get<int>();
    const int b = p[1].get<int>();
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) throw ArgumentError("letter coordinates must be bits");
    letters.push_back(Letter{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
  }
  node = Node(letters);
}

}  // namespace comblab
