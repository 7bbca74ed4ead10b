#include "comblab/genericity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "comblab/errors.hpp"

namespace comblab {

namespace {

std::vector<std::size_t> satisfied_by(const std::vector<DensePredicate>& dense, const std::string& e) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].test(e)) out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<ChainStep> generic_chain(const RequirementPoset& p, const std::vector<DensePredicate>& dense,
                                     const std::string& start, std::size_t steps, const GenericOptions& opts) {
  if (steps < dense.size()) {
    throw ArgumentError("need at least " + std::to_string(dense.size()) + " steps for " +
                        std::to_string(dense.size()) + " requirements");
  }
  std::vector<ChainStep> chain{{start, satisfied_by(dense, start)}};
  std::vector<char> met(dense.size(), 0);
  for (auto r : chain.back().satisfied) met[r] = 1;

  auto all_met = [&] { return std::all_of(met.begin(), met.end(), [](char m) { return m != 0; }); };
  std::size_t next = 0;
  while (!all_met()) {
    std::size_t r = next;
    while (met[r]) r = (r + 1) % dense.size();
    next = (r + 1) % dense.size();
    if (chain.size() > steps) {
      throw GenericityFailure(dense[r].name, chain.back().element,
                              "step budget exhausted before meeting " + dense[r].name);
    }

    const std::string& top = chain.back().element;
    std::deque<std::string> queue{top};
    std::set<std::string> seen{top};
    std::optional<std::string> found;
    std::size_t expansions = 0;
    while (!queue.empty() && !found && expansions < opts.horizon) {
      const std::string e = queue.front();
      queue.pop_front();
      ++expansions;
      for (auto& x : p.extensions(e)) {
        if (!seen.insert(x).second) continue;
        if (dense[r].test(x)) {
          found = x;
          break;
        }
        queue.push_back(std::move(x));
      }
    }
    if (!found) {
      throw GenericityFailure(dense[r].name, top,
                              "requirement " + dense[r].name + " has no extension of '" + top + "' within " +
                                  std::to_string(opts.horizon) + " expansions");
    }
    chain.push_back({*found, satisfied_by(dense, *found)});
    for (auto s : chain.back().satisfied) met[s] = 1;
  }
  return chain;
}

RequirementPoset binary_strings() {
  return RequirementPoset{
      [](const std::string& s) { return std::vector<std::string>{s + "0", s + "1"}; },
      [](const std::string& a, const std::string& b) { return b.size() >= a.size() && b.compare(0, a.size(), a) == 0; },
  };
}

FiniteRequirementTable requirement_table_from_json(const nlohmann::json& j) {
  try {
    auto elements = j.at("elements").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!index.emplace(elements[i], i).second) throw ArgumentError("duplicate element " + elements[i]);
    }
    auto lookup = [&](const std::string& e) {
      const auto it = index.find(e);
      if (it == index.end()) throw ArgumentError("unknown element " + e);
      return it->second;
    };
    const std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> up(n);
    for (const auto& c : j.value("covers", nlohmann::json::array())) {
      const auto lo = lookup(c.at(0).get<std::string>());
      const auto hi = lookup(c.at(1).get<std::string>());
      if (lo == hi) throw ArgumentError("cover relation has a loop at " + elements[lo]);
      up[lo].push_back(hi);
    }
    // Reflexive-transitive closure; a cycle shows up as i strictly above itself.
    auto above = std::make_shared<std::vector<std::vector<char>>>(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> stack(up[i].begin(), up[i].end());
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        if ((*above)[i][x]) continue;
        (*above)[i][x] = 1;
        stack.insert(stack.end(), up[x].begin(), up[x].end());
      }
      if ((*above)[i][i]) throw ArgumentError("cover relation has a cycle through " + elements[i]);
      (*above)[i][i] = 1;
    }

    auto names = std::make_shared<std::vector<std::string>>(elements);
    auto index_ptr = std::make_shared<std::map<std::string, std::size_t>>(index);
    auto up_ptr = std::make_shared<std::vector<std::vector<std::size_t>>>(up);
    FiniteRequirementTable t;
    t.poset.extensions = [names, index_ptr, up_ptr](const std::string& e) {
      std::vector<std::string> out;
      for (auto x : (*up_ptr)[index_ptr->at(e)]) out.push_back((*names)[x]);
      return out;
    };
    t.poset.leq = [index_ptr, above](const std::string& a, const std::string& b) {
      return (*above)[index_ptr->at(a)][index_ptr->at(b)] != 0;
    };
    for (const auto& r : j.value("requirements", nlohmann::json::array())) {
      auto members = std::make_shared<std::set<std::string>>();
      for (const auto& m : r.at("members")) members->insert(elements[lookup(m.get<std::string>())]);
      t.dense.push_back({r.at("name").get<std::string>(), [members](const std::string& e) { return members->contains(e); }});
    }
    t.start = elements[lookup(j.at("start").get<std::string>())];
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed requirement table: ") + e.what());
  }
}

nlohmann::json to_json(const std::vector<ChainStep>& chain, const std::vector<DensePredicate>& dense) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& step : chain) {
    nlohmann::json met = nlohmann::json::array();
    for (auto r : step.satisfied) met.push_back(dense[r].name);
    out.push_back({{"element", step.element}, {"satisfied", std::move(met)}});
  }
  return out;
}

}  // namespace comblab
