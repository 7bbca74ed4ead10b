#include "comblab/combs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>

#include "comblab/errors.hpp"

namespace comblab {

std::string SizeBound::to_string() const { return omega_ ? "omega" : std::to_string(value_); }

SizeBound SizeBound::parse(std::string_view text) {
  if (text == "omega" || text == "w" || text == "inf" || text == "ω") return omega();
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ArgumentError("size bound must be a natural number or 'omega', got '" + std::string(text) + "'");
  }
  return finite(v);
}

CombClass CombClass::part_class() const {
  if (kind == CombKind::WideRight && reading == WideReading::Literal) return right(bound);
  return *this;
}

std::string CombClass::to_string() const {
  switch (kind) {
    case CombKind::Up:
      return "Up(" + bound.to_string() + ")";
    case CombKind::Right:
      return "Right(" + bound.to_string() + ")";
    case CombKind::WideRight:
      return "WideRight(" + bound.to_string() + (reading == WideReading::Literal ? ",Literal)" : ",Recursive)");
  }
  return {};
}

std::string to_string(const SplitWitness& w) {
  switch (w.kind) {
    case SplitKind::NarrowBelow:
      return "NarrowBelow(" + std::to_string(w.bit) + ")";
    case SplitKind::NarrowLeft:
      return "NarrowLeft(" + std::to_string(w.bit) + ")";
    case SplitKind::WideLeft:
      return "WideLeft";
  }
  return {};
}

std::string to_string(PairVerdict v) { return v == PairVerdict::UpOne ? "UpOne" : "WideRightOne"; }

namespace {

// Bitmask over the four letter codes present at `pos` in `nodes`; false if
// some node ends at or before `pos`.
bool letters_at(std::span<const Node> nodes, std::size_t pos, unsigned& mask) {
  mask = 0;
  for (const auto& n : nodes) {
    if (n.depth() <= pos) return false;
    mask |= 1U << n.code_at(pos);
  }
  return true;
}

}  // namespace

std::vector<SplitWitness> split_relation(std::span<const Node> a, std::span<const Node> b) {
  if (a.empty() || b.empty()) throw ArgumentError("split_relation needs two nonempty sets");
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) throw ArgumentError("split_relation needs disjoint sets");
  }
  std::vector<Node> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  // Any witness prefix is the meet of A ∪ B: both sides extend it and they
  // disagree at the next position.
  const std::size_t p = meet_length(all);
  unsigned la = 0;
  unsigned lb = 0;
  std::vector<SplitWitness> out;
  if (!letters_at(a, p, la) || !letters_at(b, p, lb)) return out;
  const Node tau = all.front().prefix(p);
  for (std::uint8_t i = 0; i < 2; ++i) {
    if (la == (1U << (2 * i)) && lb == (1U << (2 * i + 1))) out.push_back({tau, SplitKind::NarrowBelow, i});
  }
  for (std::uint8_t j = 0; j < 2; ++j) {
    if (la == (1U << j) && lb == (1U << (2 + j))) out.push_back({tau, SplitKind::NarrowLeft, j});
  }
  if ((la & 0b1100U) == 0 && (lb & 0b0011U) == 0) out.push_back({tau, SplitKind::WideLeft, 0});
  return out;
}

PairVerdict classify_pair(const Node& s, const Node& t) {
  if (s.depth() != t.depth()) throw ArgumentError("classify_pair needs nodes of equal depth");
  if (s == t) throw ArgumentError("classify_pair needs distinct nodes");
  const std::size_t p = common_prefix_length(s, t);
#if defined(COMBLAB_MUTANT) && COMBLAB_MUTANT == 1
  const bool shared = s.letter_at(p).second == t.letter_at(p).second;
#else
  const bool shared = s.letter_at(p).first == t.letter_at(p).first;
#endif
  return shared ? PairVerdict::UpOne : PairVerdict::WideRightOne;
}

namespace {

// Splits a set whose elements share a prefix of length p into the A and B
// parts required by class c, using the letter groups at p. Returns the
// letter masks of A and B, or nullopt when the groups admit no split.
struct SplitPlan {
  unsigned a_mask;
  unsigned b_mask;
  SplitKind kind;
  std::uint8_t bit;
};

std::optional<SplitPlan> plan_split(unsigned present, const CombClass& c) {
  switch (c.kind) {
    case CombKind::Up:
      if (present == 0b0011U) return SplitPlan{0b0001U, 0b0010U, SplitKind::NarrowBelow, 0};
      if (present == 0b1100U) return SplitPlan{0b0100U, 0b1000U, SplitKind::NarrowBelow, 1};
      return std::nullopt;
    case CombKind::Right:
      if (present == 0b0101U) return SplitPlan{0b0001U, 0b0100U, SplitKind::NarrowLeft, 0};
      if (present == 0b1010U) return SplitPlan{0b0010U, 0b1000U, SplitKind::NarrowLeft, 1};
      return std::nullopt;
    case CombKind::WideRight:
      if ((present & 0b0011U) != 0 && (present & 0b1100U) != 0) {
        return SplitPlan{0b0011U, 0b1100U, SplitKind::WideLeft, 0};
      }
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<CombCertificate> certify(std::vector<Node> s, const CombClass& c) {
  if (s.size() == 1) return CombCertificate{std::move(s), std::nullopt, {}};
  const std::size_t p = meet_length(s);
  unsigned present = 0;
  if (!letters_at(s, p, present)) return std::nullopt;
  const auto plan = plan_split(present, c);
  if (!plan) return std::nullopt;
  std::vector<Node> a;
  std::vector<Node> b;
  for (const auto& n : s) ((plan->a_mask >> n.code_at(p)) & 1U ? a : b).push_back(n);
  if (!c.bound.admits(a.size())) return std::nullopt;
  const CombClass part = c.part_class();
  auto ca = certify(a, part);
  if (!ca) return std::nullopt;
  auto cb = certify(b, part);
  if (!cb) return std::nullopt;
  CombCertificate cert;
  cert.members = std::move(s);
  cert.split = SplitWitness{cert.members.front().prefix(p), plan->kind, plan->bit};
  cert.parts.push_back(std::move(*ca));
  cert.parts.push_back(std::move(*cb));
  return cert;
}

}  // namespace

std::optional<CombCertificate> is_comb(std::span<const Node> s, const CombClass& c) {
  if (s.empty()) throw ArgumentError("is_comb needs a nonempty set");
  for (const auto& n : s) {
    if (n.depth() != s.front().depth()) throw ArgumentError("is_comb needs nodes of equal depth");
  }
  std::vector<Node> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return certify(std::move(sorted), c);
}

bool verify_certificate(const CombCertificate& cert, const CombClass& c) {
  if (cert.is_leaf()) return cert.members.size() == 1 && !cert.split;
  if (cert.parts.size() != 2 || !cert.split) return false;
  const auto& a = cert.parts[0];
  const auto& b = cert.parts[1];
  const CombClass part = c.part_class();
  if (!verify_certificate(a, part) || !verify_certificate(b, part)) return false;
  if (!c.bound.admits(a.members.size())) return false;
  std::vector<Node> joined = a.members;
  joined.insert(joined.end(), b.members.begin(), b.members.end());
  std::sort(joined.begin(), joined.end());
  std::vector<Node> claimed = cert.members;
  std::sort(claimed.begin(), claimed.end());
  if (joined != claimed || std::adjacent_find(joined.begin(), joined.end()) != joined.end()) return false;

  // The recorded witness must hold by definition: every A-element extends
  // tau^(letter for A) and every B-element tau^(letter for B).
  const SplitWitness& w = *cert.split;
  const std::size_t p = w.tau.depth();
  auto side_ok = [&](const std::vector<Node>& side, auto allowed) {
    return std::all_of(side.begin(), side.end(), [&](const Node& n) {
      return w.tau.is_prefix_of(n) && n.depth() > p && allowed(n.letter_at(p));
    });
  };
  bool holds = false;
  SplitKind needed = SplitKind::WideLeft;
  switch (w.kind) {
    case SplitKind::NarrowBelow:
      holds = side_ok(a.members, [&](Letter l) { return l.first == w.bit && l.second == 0; }) &&
              side_ok(b.members, [&](Letter l) { return l.first == w.bit && l.second == 1; });
      needed = SplitKind::NarrowBelow;
      break;
    case SplitKind::NarrowLeft:
      holds = side_ok(a.members, [&](Letter l) { return l.first == 0 && l.second == w.bit; }) &&
              side_ok(b.members, [&](Letter l) { return l.first == 1 && l.second == w.bit; });
      needed = SplitKind::NarrowLeft;
      break;
    case SplitKind::WideLeft:
      holds = side_ok(a.members, [](Letter l) { return l.first == 0; }) &&
              side_ok(b.members, [](Letter l) { return l.first == 1; });
      needed = SplitKind::WideLeft;
      break;
  }
  const SplitKind expected = c.kind == CombKind::Up      ? SplitKind::NarrowBelow
                             : c.kind == CombKind::Right ? SplitKind::NarrowLeft
                                                         : SplitKind::WideLeft;
  return holds && needed == expected;
}

nlohmann::json certificate_to_json(const CombCertificate& cert) {
  if (cert.is_leaf()) return encode(cert.members.front());
  return nlohmann::json{
      {"split", {{"tau", encode(cert.split->tau)}, {"kind", to_string(*cert.split)}}},
      {"A", certificate_to_json(cert.parts[0])},
      {"B", certificate_to_json(cert.parts[1])},
  };
}

bool accepts_ranks(std::span<const std::uint64_t> r, const CombClass& c) {
  if (r.size() <= 1) return !r.empty();
  // Sorted ranks are lexicographically sorted nodes, so the meet of the set
  // is the common prefix of its first and last element.
  const std::uint64_t diff = r.front() ^ r.back();
  if (diff == 0) return false;
  const unsigned shift = static_cast<unsigned>((std::bit_width(diff) - 1) / 2 * 2);
  std::array<std::size_t, 5> start{};
  std::size_t idx = 0;
  unsigned present = 0;
  for (unsigned letter = 0; letter < 4; ++letter) {
    start[letter] = idx;
    while (idx < r.size() && ((r[idx] >> shift) & 3U) == letter) ++idx;
    if (idx > start[letter]) present |= 1U << letter;
  }
  start[4] = idx;
  const auto plan = plan_split(present, c);
  if (!plan) return false;
  // A and B are each a union of contiguous letter runs; with the masks used
  // by plan_split both are single contiguous ranges.
  auto range_of = [&](unsigned mask) {
    const unsigned lo = static_cast<unsigned>(std::countr_zero(mask));
    const unsigned hi = static_cast<unsigned>(std::bit_width(mask)) - 1;
    return r.subspan(start[lo], start[hi + 1] - start[lo]);
  };
  const auto a = range_of(plan->a_mask);
  const auto b = range_of(plan->b_mask);
  if (!c.bound.admits(a.size())) return false;
  const CombClass part = c.part_class();
  return accepts_ranks(a, part) && accepts_ranks(b, part);
}

CombEnumerator::CombEnumerator(std::size_t depth, CombClass c, std::size_t max_size)
    : depth_(depth), class_(c), max_size_(max_size) {
  if (depth > kCombEnumerationDepthLimit) {
    throw ResourceError("comb enumeration limited to depth " + std::to_string(kCombEnumerationDepthLimit));
  }
  level_size_ = level_size(depth);
  current_.reserve(max_size);
}

bool CombEnumerator::try_push_from(std::uint64_t first_candidate) {
  for (std::uint64_t x = first_candidate; x < level_size_; ++x) {
    current_.push_back(x);
    if (accepts_ranks(current_, class_)) return true;
    current_.pop_back();
  }
  return false;
}

std::optional<std::vector<Node>> CombEnumerator::next() {
  if (done_ || max_size_ == 0) return std::nullopt;
  bool found = false;
  if (!started_) {
    started_ = true;
    found = try_push_from(0);
  } else {
    if (current_.size() < max_size_) found = try_push_from(current_.back() + 1);
    while (!found && !current_.empty()) {
      const std::uint64_t last = current_.back();
      current_.pop_back();
      found = try_push_from(last + 1);
    }
  }
  if (!found) {
    done_ = true;
    return std::nullopt;
  }
  std::vector<Node> out;
  out.reserve(current_.size());
  for (auto r : current_) out.push_back(Node::from_rank(r, depth_));
  return out;
}

std::vector<std::vector<Node>> enumerate_combs(std::size_t depth, const CombClass& c, std::size_t max_size) {
  CombEnumerator it(depth, c, max_size);
  std::vector<std::vector<Node>> out;
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

bool is_binary_right_comb(std::span<const std::string> s, SizeBound n) {
  if (s.empty()) throw ArgumentError("is_binary_right_comb needs a nonempty set");
  for (const auto& str : s) {
    if (str.find_first_not_of("01") != std::string::npos) {
      throw ArgumentError("binary strings may only contain '0' and '1': '" + str + "'");
    }
  }
  std::vector<std::string> set(s.begin(), s.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());

  auto recurse = [&](auto&& self, std::span<const std::string> part) -> bool {
    if (part.size() == 1) return true;
    // Sorted, so the meet is the common prefix of the extremes.
    const auto& lo = part.front();
    const auto& hi = part.back();
    std::size_t p = 0;
    while (p < lo.size() && p < hi.size() && lo[p] == hi[p]) ++p;
    // The meet itself being a member leaves it below both branches.
    if (lo.size() == p) return false;
    const auto mid = std::find_if(part.begin(), part.end(), [&](const std::string& x) { return x[p] == '1'; });
    const auto a = part.subspan(0, static_cast<std::size_t>(mid - part.begin()));
    const auto b = part.subspan(a.size());
    return n.admits(a.size()) && self(self, a) && self(self, b);
  };
  return recurse(recurse, set);
}

}  // namespace comblab
