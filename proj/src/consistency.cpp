#include "comblab/consistency.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "comblab/errors.hpp"

namespace comblab {

SetSystem SetSystem::empty(std::vector<std::string> universe, std::vector<std::string> labels) {
  SetSystem s;
  s.universe = std::move(universe);
  s.labels = std::move(labels);
  s.sets.assign(s.labels.size(), DynamicBitset(s.universe.size()));
  return s;
}

std::size_t SetSystem::add_atom(std::string name) {
  universe.push_back(std::move(name));
  for (auto& b : sets) b.resize(universe.size());
  return universe.size() - 1;
}

ConsistencyInterface ConsistencyInterface::from_sets(SetSystem sets) {
  if (sets.sets.size() != sets.labels.size()) throw ArgumentError("set system needs one set per index");
  if (sets.universe.size() > UINT32_MAX) throw ResourceError("set system universe exceeds 2^32 atoms");
  for (const auto& b : sets.sets) {
    if (b.size() != sets.universe.size()) throw ArgumentError("set system sets must range over the universe");
  }
  ConsistencyInterface ci;
  ci.labels_ = std::make_shared<const std::vector<std::string>>(sets.labels);
  ci.sets_ = std::make_shared<const SetSystem>(std::move(sets));
  ci.monotone_ = true;
  return ci;
}

ConsistencyInterface ConsistencyInterface::from_oracle(std::vector<std::string> labels, Oracle oracle,
                                                       bool monotone) {
  if (!oracle) throw ArgumentError("consistency oracle must be callable");
  ConsistencyInterface ci;
  ci.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  ci.oracle_ = std::move(oracle);
  ci.monotone_ = monotone;
  return ci;
}

bool ConsistencyInterface::consistent(std::span<const std::size_t> family) const {
  for (auto i : family) {
    if (i >= size()) throw ArgumentError("unknown index " + std::to_string(i));
  }
  if (family.empty()) return true;
  if (!sets_) return oracle_(family);
  DynamicBitset meet = sets_->sets[family.front()];
  for (auto i : family.subspan(1)) meet.intersect_with(sets_->sets[i]);
  return meet.any();
}

ConsistencyInterface ConsistencyInterface::pullback(std::span<const std::size_t> source,
                                                    std::vector<std::string> labels) const {
  if (source.size() != labels.size()) throw ArgumentError("pullback needs one label per new index");
  for (auto s : source) {
    if (s >= size()) throw ArgumentError("pullback source index " + std::to_string(s) + " out of range");
  }
  if (sets_) {
    SetSystem out;
    out.universe = sets_->universe;
    out.labels = std::move(labels);
    out.sets.reserve(source.size());
    for (auto s : source) out.sets.push_back(sets_->sets[s]);
    return from_sets(std::move(out));
  }
  auto inner = oracle_;
  std::vector<std::size_t> map(source.begin(), source.end());
  return from_oracle(
      std::move(labels),
      [inner, map](std::span<const std::size_t> family) {
        std::vector<std::size_t> mapped;
        mapped.reserve(family.size());
        for (auto i : family) mapped.push_back(map[i]);
        return inner(mapped);
      },
      monotone_);
}

ConsistencyInterface::Cursor::Cursor(const ConsistencyInterface& ci) : ci_(&ci) {}

void ConsistencyInterface::Cursor::push(std::size_t index) {
  if (index >= ci_->size()) throw ArgumentError("unknown index " + std::to_string(index));
  if (const SetSystem* s = ci_->set_system()) {
    const std::size_t depth = family_.size();
    if (survivors_.size() <= depth) survivors_.emplace_back();
    auto& out = survivors_[depth];
    out.clear();
    const DynamicBitset& b = s->sets[index];
    if (depth == 0) {
      b.for_each_set([&](std::size_t atom) { out.push_back(static_cast<std::uint32_t>(atom)); });
    } else {
      for (auto atom : survivors_[depth - 1]) {
        if (b.test(atom)) out.push_back(atom);
      }
    }
  }
  family_.push_back(index);
}

void ConsistencyInterface::Cursor::pop() { family_.pop_back(); }

bool ConsistencyInterface::Cursor::consistent() const {
  if (family_.empty()) return true;
  if (ci_->set_system()) return !survivors_[family_.size() - 1].empty();
  return ci_->oracle_(family_);
}

bool k_inconsistent(const ConsistencyInterface& ci, std::span<const std::size_t> family, std::size_t k) {
  if (k < 2) throw ArgumentError("k-inconsistency needs k >= 2");
  if (family.size() < k) return true;
  // Walk all k-subsets in lexicographic order of positions.
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<std::size_t> sub(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) sub[i] = family[pos[i]];
    if (ci.consistent(sub)) return false;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == family.size() - k + (i - 1)) --i;
    if (i == 0) return true;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

ReportBuilder::ReportBuilder(std::size_t cap, std::size_t max_violations) : max_violations_(max_violations) {
  report_.cap = cap;
}

bool ReportBuilder::add(ViolationKind kind, std::vector<std::size_t> indices, nlohmann::json certificate) {
  report_.ok = false;
  if (report_.violations.size() >= max_violations_) {
    report_.truncated = true;
    full_ = true;
    return false;
  }
  report_.violations.push_back({kind, std::move(indices), std::move(certificate)});
  return true;
}

Report ReportBuilder::finish() && { return std::move(report_); }

nlohmann::json to_json(const Report& r, const std::vector<std::string>& labels) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : r.violations) {
    nlohmann::json idx = nlohmann::json::array();
    for (auto i : v.indices) idx.push_back(i < labels.size() ? labels[i] : std::to_string(i));
    vs.push_back({{"kind", v.kind == ViolationKind::Consistency ? "Consistency" : "Inconsistency"},
                  {"indices", idx},
                  {"certificate", v.certificate}});
  }
  return {{"ok", r.ok}, {"cap", r.cap}, {"truncated", r.truncated}, {"violations", vs}};
}

nlohmann::json to_json(const SetSystem& s) {
  nlohmann::json family = nlohmann::json::array();
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    nlohmann::json members = nlohmann::json::array();
    s.sets[i].for_each_set([&](std::size_t a) { members.push_back(s.universe[a]); });
    family.push_back({{"index", s.labels[i]}, {"set", members}});
  }
  return {{"universe", s.universe}, {"family", family}};
}

SetSystem set_system_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("family")) {
    throw ArgumentError("set system JSON needs \"universe\" and \"family\"");
  }
  SetSystem s;
  std::map<std::string, std::size_t> atom_index;
  for (const auto& a : j.at("universe")) {
    const auto name = a.is_string() ? a.get<std::string>() : a.dump();
    if (!atom_index.emplace(name, s.universe.size()).second) throw ArgumentError("duplicate atom '" + name + "'");
    s.universe.push_back(name);
  }
  std::set<std::string> seen;
  for (const auto& entry : j.at("family")) {
    const auto& idx = entry.at("index");
    std::string label = idx.is_string() ? idx.get<std::string>() : idx.dump();
    if (!seen.insert(label).second) throw ArgumentError("duplicate index '" + label + "'");
    DynamicBitset b(s.universe.size());
    for (const auto& a : entry.at("set")) {
      const auto name = a.is_string() ? a.get<std::string>() : a.dump();
      const auto it = atom_index.find(name);
      if (it == atom_index.end()) throw ArgumentError("atom '" + name + "' of index '" + label + "' not in universe");
      b.set(it->second);
    }
    s.labels.push_back(std::move(label));
    s.sets.push_back(std::move(b));
  }
  return s;
}

SetSystem align_labels(const SetSystem& s, const std::vector<std::string>& expected) {
  std::map<std::string, std::size_t> where;
  for (std::size_t i = 0; i < s.labels.size(); ++i) where.emplace(s.labels[i], i);
  SetSystem out;
  out.universe = s.universe;
  out.labels = expected;
  out.sets.reserve(expected.size());
  for (const auto& label : expected) {
    const auto it = where.find(label);
    if (it == where.end()) throw ArgumentError("missing index '" + label + "'");
    out.sets.push_back(s.sets[it->second]);
    where.erase(it);
  }
  if (!where.empty()) throw ArgumentError("unknown index '" + where.begin()->first + "'");
  return out;
}

}  // namespace comblab
